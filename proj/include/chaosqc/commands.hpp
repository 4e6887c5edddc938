// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file commands.hpp
 * @brief Subcommands of the chaosqc tool as callable functions.
 *
 * Every command writes its primary output to `out`, diagnostics to `err`, and
 * returns the process exit code. solve and oracle follow the SAT-competition
 * convention (10 = SAT, 20 = UNSAT, 1 = error); the others return 0 on success.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chaosqc/chaos_amp.hpp"
#include "chaosqc/sat_core.hpp"

namespace chaosqc::cli {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitError = 1;
inline constexpr int kSchemaVersion = 1;

struct SolveOptions {
    double a = chaos::kDefaultA;
    double tau = chaos::kDefaultTau;
    std::optional<int> k_max;               ///< default: chaos::default_budget(n, a)
    bool with_oracle = false;               ///< also count roots classically
    bool timing = false;                    ///< add wall_time (breaks byte-stability)
    std::optional<std::string> trace_path;  ///< trajectory CSV
    std::optional<std::string> dump_state_path;
};

struct RunReport {
    std::string instance;
    int n = 0;
    std::optional<std::uint64_t> r;
    double q_squared = 0.0;
    chaos::LogisticParams params;
    chaos::Verdict verdict = chaos::Verdict::Unsat;
    std::optional<std::size_t> crossing_step;
    std::vector<double> trajectory;
    std::optional<double> wall_time_s;
};

[[nodiscard]] std::string to_json(const RunReport& report);
[[nodiscard]] int exit_code(chaos::Verdict v) noexcept;

/// parse -> prepare_uniform -> apply_oracle -> reduce_to_flag -> classify on an in-memory formula.
[[nodiscard]] RunReport solve_formula(const sat::CnfFormula& f, const std::string& instance, const SolveOptions& opts);

struct OracleReport {
    std::string instance;
    int n = 0;
    std::uint64_t r = 0;
    double fraction = 0.0;  ///< r / 2^n
};

[[nodiscard]] OracleReport oracle_formula(const sat::CnfFormula& f, const std::string& instance,
                                          int bound = sat::kDefaultExhaustiveBound);
[[nodiscard]] std::string to_json(const OracleReport& report);

int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err);

struct AmplifyOptions {
    std::vector<double> q_squared;
    double a = chaos::kDefaultA;
    double tau = chaos::kDefaultTau;
    std::optional<int> k_max;  ///< default: budget for the smallest nonzero q^2
    bool json = false;
};

/// Budget used by amplify when --kmax is absent.
[[nodiscard]] int amplify_default_budget(const std::vector<double>& q_squared, double a);

int cmd_amplify(const AmplifyOptions& opts, std::ostream& out, std::ostream& err);

struct LyapunovOptions {
    double a = chaos::kDefaultA;
    double x0 = 0.3;
    long long burn_in = 1000;
    long long samples = 100000;
};

int cmd_lyapunov(const LyapunovOptions& opts, std::ostream& out, std::ostream& err);

struct GateOptions {
    std::string action;  ///< evolve | slater | overlap | hf
    std::string spec_path;
    std::optional<std::string> trace_path;
    bool json = false;
    std::optional<double> dt;        ///< hf: step, default hf::default_hf_dt
    std::size_t steps = 1000;        ///< hf: number of steps
};

int cmd_gate(const GateOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace chaosqc::cli
