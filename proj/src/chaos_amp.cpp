// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/chaos_amp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "chaosqc/detail/numfmt.hpp"

namespace chaosqc::chaos {

namespace {

void check_a(double a) {
    if (!(a > 0.0 && a <= 4.0)) throw std::invalid_argument("logistic parameter a must lie in (0,4]");
}

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

}  // namespace

double band_floor(double a) noexcept { return a * a * (4.0 - a) / 16.0; }

int default_budget(int n, double a) {
    check_a(a);
    if (n < 0) throw std::invalid_argument("default_budget: n must be nonnegative");
    if (a <= 1.0) throw std::invalid_argument("default_budget: no growth for a <= 1");
    return static_cast<int>(std::ceil(n * std::log(2.0) / std::log(a))) + kBudgetMargin;
}

void LogisticParams::validate() const {
    check_a(a);
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("threshold tau must lie in (0,1)");
    if (!(tau < band_floor(a))) {
        throw std::invalid_argument("threshold tau = " + detail::repr(tau) + " is not below the chaotic band floor " +
                                    detail::repr(band_floor(a)) + " for a = " + detail::repr(a));
    }
    if (k_max < 1) throw std::invalid_argument("iteration budget k_max must be positive");
}

LogisticParams default_params(int n) { return LogisticParams{kDefaultA, kDefaultTau, default_budget(n, kDefaultA)}; }

const char* to_string(Verdict v) noexcept { return v == Verdict::Sat ? "SAT" : "UNSAT"; }

double logistic_step(double x, double a) {
    check_a(a);
    check_unit(x, "logistic_step: x");
    return a * x * (1.0 - x);
}

AmplifierState amplifier_first_step(double q_squared, double a) {
    check_unit(q_squared, "q^2");
    return AmplifierState{logistic_step(q_squared, a), 1};
}

LogisticTrajectory iterate(double q_squared, const LogisticParams& params) {
    params.validate();
    check_unit(q_squared, "q^2");
    LogisticTrajectory t{params, {q_squared}, std::nullopt};
    double x = q_squared;
    for (int k = 0;; ++k) {
        if (x >= params.tau) {
            t.crossing_step = static_cast<std::size_t>(k);
            break;
        }
        if (k == params.k_max) break;
        x = params.a * x * (1.0 - x);
        t.values.push_back(x);
    }
    return t;
}

Classification classify(double q_squared, const LogisticParams& params) {
    // A pre-check on m_0 keeps q^2 = 1 (which the map sends to 0) classified SAT.
    auto t = iterate(q_squared, params);
    const Verdict v = t.crossing_step ? Verdict::Sat : Verdict::Unsat;
    return Classification{v, std::move(t)};
}

LyapunovEstimate lyapunov(double a, double x0, long long burn_in, long long samples) {
    check_a(a);
    if (!(x0 > 0.0 && x0 < 1.0)) throw std::invalid_argument("lyapunov: x0 must lie in (0,1)");
    if (burn_in < 1 || samples < 1) throw std::invalid_argument("lyapunov: burn_in and samples must be >= 1");

    double x = x0;
    for (long long k = 0; k < burn_in; ++k) x = a * x * (1.0 - x);

    double sum = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0;
    for (long long k = 0; k < samples; ++k) {
        const double d = std::abs(a * (1.0 - 2.0 * x));
        if (d == 0.0) {
            ++skipped;
        } else {
            sum += std::log(d);
            ++used;
        }
        x = a * x * (1.0 - x);
    }
    const double lambda = used ? sum / static_cast<double>(used) : -std::numeric_limits<double>::infinity();
    return LyapunovEstimate{lambda, used, skipped};
}

TraceTable trace_amplification(std::span<const double> q_squared_list, const LogisticParams& params) {
    params.validate();
    TraceTable table{params, {}};
    for (double q2 : q_squared_list) {
        check_unit(q2, "q^2");
        TraceColumn col{q2, {q2}, std::nullopt};
        double x = q2;
        for (int k = 0; k <= params.k_max; ++k) {
            if (!col.crossing_step && x >= params.tau) col.crossing_step = static_cast<std::size_t>(k);
            if (k == params.k_max) break;
            x = params.a * x * (1.0 - x);
            col.values.push_back(x);
        }
        table.columns.push_back(std::move(col));
    }
    return table;
}

void write_trace_csv(std::ostream& out, const TraceTable& table) {
    out << "step";
    for (const auto& c : table.columns) out << ',' << detail::repr(c.q_squared);
    out << '\n';
    const auto rows = static_cast<std::size_t>(table.params.k_max) + 1;
    for (std::size_t k = 0; k < rows; ++k) {
        out << k;
        for (const auto& c : table.columns) out << ',' << detail::repr(c.values[k]);
        out << '\n';
    }
}

std::string trace_to_json(const TraceTable& table) {
    nlohmann::ordered_json j;
    j["a"] = table.params.a;
    j["tau"] = table.params.tau;
    j["k_max"] = table.params.k_max;
    auto cols = nlohmann::ordered_json::array();
    for (const auto& c : table.columns) {
        nlohmann::ordered_json jc;
        jc["q_squared"] = c.q_squared;
        jc["crossing_step"] = c.crossing_step ? nlohmann::ordered_json(*c.crossing_step) : nlohmann::ordered_json();
        jc["values"] = c.values;
        cols.push_back(std::move(jc));
    }
    j["columns"] = std::move(cols);
    return j.dump();
}

}  // namespace chaosqc::chaos
