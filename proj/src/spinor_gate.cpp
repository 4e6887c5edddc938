// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/spinor_gate.hpp"

#include <cmath>
#include <stdexcept>

namespace chaosqc::hf {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Spinor> probe_spinors() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Spinor> probes{
        {Complex{1, 0}, Complex{0, 0}},
        {Complex{0, 0}, Complex{1, 0}},
        {Complex{s, 0}, Complex{s, 0}},
        {Complex{s, 0}, Complex{0, s}},
        {Complex{0.6, 0}, Complex{0, -0.8}},
    };
    // A handful of generic, unnormalized points.
    for (int k = 1; k <= 6; ++k) {
        const double t = 0.37 * k;
        probes.push_back({Complex{std::cos(t), std::sin(2 * t)}, Complex{std::sin(3 * t), -std::cos(t) / k}});
    }
    return probes;
}

struct StepCount {
    std::size_t steps;
    double h;
};

StepCount plan_steps(double T, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("evolve_spinor: dt must be positive");
    if (!(T >= 0.0)) throw std::invalid_argument("evolve_spinor: T must be nonnegative");
    const double ratio = T / dt;
    if (!(ratio <= kMaxSteps)) throw std::invalid_argument("evolve_spinor: T/dt exceeds 1e8 steps");
    double whole = std::round(ratio);
    if (std::abs(ratio - whole) > 1e-9 * std::max(1.0, ratio)) whole = std::ceil(ratio);
    const auto steps = static_cast<std::size_t>(whole);
    return StepCount{steps, steps ? T / static_cast<double>(steps) : 0.0};
}

Eigen::Vector2cd rk4(const NonlinearGateSpec& spec, const Eigen::Vector2cd& y, double h) {
    const Eigen::Vector2cd k1 = spinor_rhs(spec, y);
    const Eigen::Vector2cd k2 = spinor_rhs(spec, y + 0.5 * h * k1);
    const Eigen::Vector2cd k3 = spinor_rhs(spec, y + 0.5 * h * k2);
    const Eigen::Vector2cd k4 = spinor_rhs(spec, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_input(const Spinor& phi0, const NonlinearGateSpec& spec) {
    spec.validate();
    if (std::abs(phi0.norm() - 1.0) > 1e-9) throw std::invalid_argument("evolve_spinor: initial spinor is not normalized");
}

}  // namespace

bool is_hermitian(const Matrix2& m, double tol) {
    if (!m.allFinite()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

BForm make_b_form(std::string name, BFunction fn) {
    if (!fn) throw std::invalid_argument("make_b_form: empty function for '" + name + "'");
    for (const auto& phi : probe_spinors()) {
        for (double g : {1.0, -0.7, 2.5}) {
            if (!is_hermitian(fn(phi, g))) {
                throw std::invalid_argument("make_b_form: form '" + name + "' yields a non-Hermitian B(phi)");
            }
        }
    }
    return BForm{std::move(name), std::move(fn)};
}

BForm builtin_b_form(const std::string& name) {
    if (name == "cross_density") {
        return make_b_form(name, [](const Spinor& p, double g) {
            Matrix2 b = Matrix2::Zero();
            b(0, 0) = g * std::norm(p.c1);
            b(1, 1) = g * std::norm(p.c0);
            return b;
        });
    }
    if (name == "self_density") {
        return make_b_form(name, [](const Spinor& p, double g) {
            Matrix2 b = Matrix2::Zero();
            b(0, 0) = g * std::norm(p.c0);
            b(1, 1) = g * std::norm(p.c1);
            return b;
        });
    }
    if (name == "coherence") {
        return make_b_form(name, [](const Spinor& p, double g) {
            Matrix2 b = Matrix2::Zero();
            b(0, 1) = g * p.c0 * std::conj(p.c1);
            b(1, 0) = std::conj(b(0, 1));
            return b;
        });
    }
    throw std::invalid_argument("unknown b_form '" + name + "'");
}

std::vector<std::string> builtin_b_form_names() { return {"cross_density", "self_density", "coherence"}; }

void NonlinearGateSpec::validate() const {
    if (!is_hermitian(A)) throw std::invalid_argument("gate matrix A is not Hermitian");
    if (!std::isfinite(g)) throw std::invalid_argument("coupling g must be finite");
    if (!b_form.fn) throw std::invalid_argument("gate spec has no b_form");
}

Eigen::Vector2cd spinor_rhs(const NonlinearGateSpec& spec, const Eigen::Vector2cd& phi) {
    const Matrix2 h = spec.A + spec.b_form.fn(Spinor::from(phi), spec.g);
    return -kI * (h * phi);
}

SpinorEvolution evolve_spinor(const Spinor& phi0, const NonlinearGateSpec& spec, double T, double dt) {
    check_input(phi0, spec);
    const auto plan = plan_steps(T, dt);
    Eigen::Vector2cd y = phi0.vec();
    for (std::size_t k = 0; k < plan.steps; ++k) y = rk4(spec, y, plan.h);

    SpinorEvolution out;
    out.phi = Spinor::from(y);
    out.steps = plan.steps;
    out.norm_drift = std::abs(y.norm() - phi0.norm());
    out.drift_exceeded = out.norm_drift > kNormDriftLimit;
    return out;
}

std::vector<SpinorSample> evolve_spinor_trace(const Spinor& phi0, const NonlinearGateSpec& spec, double T, double dt,
                                              std::size_t every) {
    check_input(phi0, spec);
    if (every == 0) throw std::invalid_argument("evolve_spinor_trace: sampling interval must be positive");
    const auto plan = plan_steps(T, dt);
    std::vector<SpinorSample> samples{{0.0, phi0, phi0.norm()}};
    Eigen::Vector2cd y = phi0.vec();
    for (std::size_t k = 1; k <= plan.steps; ++k) {
        y = rk4(spec, y, plan.h);
        if (k % every == 0 || k == plan.steps) {
            samples.push_back({static_cast<double>(k) * plan.h, Spinor::from(y), y.norm()});
        }
    }
    return samples;
}

}  // namespace chaosqc::hf
