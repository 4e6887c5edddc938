// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file chaos_amp.hpp
 * @brief Logistic-map amplifier for the flag probability q^2.
 *
 * The amplifier tracks only the |1><1| diagonal entry m of the flag density
 * matrix, starting from m_0 = q^2 and iterating m -> a m (1 - m). Zero is an
 * exact fixed point, so q = 0 stays at 0 forever, while any q^2 > 0 grows by
 * roughly a factor a per step until it enters the chaotic band
 * [a^2 (4 - a) / 16, a / 4]. Classification is "first crossing of tau within
 * k_max steps".
 */

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace chaosqc::chaos {

inline constexpr double kDefaultA = 3.71;
inline constexpr double kDefaultTau = 0.2;
inline constexpr int kBudgetMargin = 8;

/// Lower edge f(f(1/2)) of the invariant chaotic band.
[[nodiscard]] double band_floor(double a) noexcept;

/// ceil(n ln 2 / ln a) + 8: steps needed to lift q^2 = 2^-n to O(1), plus margin.
[[nodiscard]] int default_budget(int n, double a = kDefaultA);

struct LogisticParams {
    double a = kDefaultA;
    double tau = kDefaultTau;
    int k_max = 1;

    /// Throws std::invalid_argument unless a in (0,4], tau in (0, band_floor(a)), k_max >= 1.
    void validate() const;
};

[[nodiscard]] LogisticParams default_params(int n);

struct AmplifierState {
    double m;
    std::size_t step;
};

struct LogisticTrajectory {
    LogisticParams params;
    std::vector<double> values;  ///< values[0] = q^2
    std::optional<std::size_t> crossing_step;
};

enum class Verdict { Sat, Unsat };

[[nodiscard]] const char* to_string(Verdict v) noexcept;

struct Classification {
    Verdict verdict;
    LogisticTrajectory trajectory;
};

/// a x (1 - x). Throws std::invalid_argument for x outside [0,1] or a outside (0,4].
[[nodiscard]] double logistic_step(double x, double a);

[[nodiscard]] AmplifierState amplifier_first_step(double q_squared, double a = kDefaultA);

/// Iterates from q^2 until the first value >= tau or k_max steps, whichever comes first.
[[nodiscard]] LogisticTrajectory iterate(double q_squared, const LogisticParams& params);

[[nodiscard]] Classification classify(double q_squared, const LogisticParams& params);

struct LyapunovEstimate {
    double exponent;       ///< -inf if every sample sat on the critical point
    std::size_t used;      ///< samples that entered the average
    std::size_t skipped;   ///< samples with x exactly 1/2 (zero derivative)
};

/**
 * Time average of ln|a (1 - 2 x_k)| over `samples` points following
 * `burn_in` discarded iterations from x0.
 */
[[nodiscard]] LyapunovEstimate lyapunov(double a, double x0, long long burn_in, long long samples);

struct TraceColumn {
    double q_squared;
    std::vector<double> values;
    std::optional<std::size_t> crossing_step;
};

/// Full-length trajectories (no early stop) of k_max steps for each q^2.
struct TraceTable {
    LogisticParams params;
    std::vector<TraceColumn> columns;
};

[[nodiscard]] TraceTable trace_amplification(std::span<const double> q_squared_list, const LogisticParams& params);

/// Header "step,<q2_1>,<q2_2>,..." then one row per step.
void write_trace_csv(std::ostream& out, const TraceTable& table);
[[nodiscard]] std::string trace_to_json(const TraceTable& table);

}  // namespace chaosqc::chaos
