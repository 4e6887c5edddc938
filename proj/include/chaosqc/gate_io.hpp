// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gate_io.hpp
 * @brief JSON descriptions of spinor gates and orbital sets.
 *
 * Complex numbers are [re, im] pairs; a bare number is read as real.
 *
 *   gate:     {"A": [[z,z],[z,z]], "g": 1.0, "b_form": "cross_density",
 *              "phi0": [z, z], "T": 1.0, "dt": 1e-3, "every": 100}
 *   orbitals: {"spacing": h, "periodic": false, "weights": [...],
 *              "orbitals": [[z,...],...], "V": [[...],...], "v_ext": [...],
 *              "masses": [...]}
 *   overlap:  {"a": [[z,...],...], "b": [[z,...],...]}
 *
 * In orbital files every field except "orbitals" and "spacing" is optional:
 * weights default to the spacing, V and v_ext to zero, masses to one.
 */

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chaosqc/grid_orbitals.hpp"
#include "chaosqc/spinor_gate.hpp"

namespace chaosqc::hf {

struct GateRun {
    NonlinearGateSpec spec;
    Spinor phi0;
    double T = 0.0;
    double dt = 1e-3;
    std::size_t every = 1;
};

/// All parsers throw std::invalid_argument with a message naming the offending field.
[[nodiscard]] GateRun parse_gate_run(std::string_view json_text);

[[nodiscard]] std::vector<Eigen::VectorXcd> parse_vector_list(std::string_view json_text, const char* key);

[[nodiscard]] GridOrbitalSet parse_orbital_set(std::string_view json_text);

/// "t,re0,im0,re1,im1,norm"
void write_spinor_trace_csv(std::ostream& out, const std::vector<SpinorSample>& samples);

[[nodiscard]] std::string read_text_file(const std::string& path);

}  // namespace chaosqc::hf
