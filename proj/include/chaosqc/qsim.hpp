// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qsim.hpp
 * @brief State-vector simulation of the oracle stage on n register qubits
 *        plus one flag qubit.
 *
 * Basis index convention: index = 2 * x + y, where x is the register value
 * with x_1 as its most significant bit and y is the flag qubit. The flag is
 * therefore the least-significant bit, the projector onto y=1 is a stride-2
 * sum, and the oracle is a pairwise swap of (2x, 2x+1).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "chaosqc/sat_core.hpp"

namespace chaosqc::qsim {

using Complex = std::complex<double>;

inline constexpr int kDefaultQubitBound = 20;

class StateVector {
public:
    /// Takes ownership of `amplitudes`; size must be 2^(n+1). No normalization is applied.
    StateVector(int n, std::vector<Complex> amplitudes);

    [[nodiscard]] int num_register_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

    /// "x1...xn|y"
    [[nodiscard]] std::string basis_label(std::size_t index) const;

    /// Exclusive access for in-place kernels.
    [[nodiscard]] std::vector<Complex>& mutable_amplitudes() noexcept { return amps_; }

    bool operator==(const StateVector&) const = default;

private:
    int n_;
    std::vector<Complex> amps_;
};

struct FlagReduction {
    double q;
    double q_squared;
};

/// 2^{-n/2} sum_x |x,0>. Throws std::invalid_argument unless 1 <= n <= bound.
[[nodiscard]] StateVector prepare_uniform(int n, int bound = kDefaultQubitBound);

/// |x,y> -> |x, y xor f(x)>, applied as an index permutation.
[[nodiscard]] StateVector apply_oracle(StateVector state, const sat::CnfFormula& f);
void apply_oracle_inplace(StateVector& state, const sat::CnfFormula& f);

/// || (I (x) |1><1|) state ||^2
[[nodiscard]] double measure_flag_probability(const StateVector& state);

[[nodiscard]] FlagReduction reduce_to_flag(const StateVector& state);

/// CSV rows "index,label,re,im" with a header line.
void write_state_csv(std::ostream& out, const StateVector& state);

}  // namespace chaosqc::qsim
