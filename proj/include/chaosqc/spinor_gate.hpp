// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spinor_gate.hpp
 * @brief Nonlinear one-qubit gate i dphi/dt = A phi + B(phi) phi.
 *
 * A is a constant Hermitian 2x2 matrix; B(phi) is a state-dependent Hermitian
 * matrix chosen from a small set of registered forms. Because the generator
 * is Hermitian at every instant the exact flow conserves |phi|; the
 * integrator is classical RK4 with no projection, so measured norm drift is a
 * direct integrator-error diagnostic.
 */

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace chaosqc::hf {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

struct Spinor {
    Complex c0{1.0, 0.0};
    Complex c1{0.0, 0.0};

    [[nodiscard]] double norm() const { return std::sqrt(std::norm(c0) + std::norm(c1)); }
    [[nodiscard]] Eigen::Vector2cd vec() const { return {c0, c1}; }
    static Spinor from(const Eigen::Vector2cd& v) { return Spinor{v(0), v(1)}; }
};

/// B(phi) for coupling g.
using BFunction = std::function<Matrix2(const Spinor& phi, double g)>;

struct BForm {
    std::string name;
    BFunction fn;
};

/**
 * Wraps `fn` after checking that it returns a Hermitian matrix on a fixed
 * probe set of spinors and couplings. Throws std::invalid_argument otherwise.
 */
[[nodiscard]] BForm make_b_form(std::string name, BFunction fn);

/**
 * Built-in forms:
 *   cross_density  g diag(|phi1|^2, |phi0|^2)   (default)
 *   self_density   g diag(|phi0|^2, |phi1|^2)
 *   coherence      g [[0, phi0 conj(phi1)], [conj(phi0) phi1, 0]]
 */
[[nodiscard]] BForm builtin_b_form(const std::string& name);
[[nodiscard]] std::vector<std::string> builtin_b_form_names();

struct NonlinearGateSpec {
    Matrix2 A = Matrix2::Zero();
    double g = 0.0;
    BForm b_form = builtin_b_form("cross_density");

    /// Throws std::invalid_argument if A is not Hermitian within 1e-12.
    void validate() const;
};

[[nodiscard]] bool is_hermitian(const Matrix2& m, double tol = 1e-12);

/// -i (A + B(phi)) phi
[[nodiscard]] Eigen::Vector2cd spinor_rhs(const NonlinearGateSpec& spec, const Eigen::Vector2cd& phi);

inline constexpr double kNormDriftLimit = 1e-6;
inline constexpr double kMaxSteps = 1e8;

struct SpinorEvolution {
    Spinor phi;
    std::size_t steps = 0;
    double norm_drift = 0.0;       ///< | |phi(T)| - |phi(0)| |
    bool drift_exceeded = false;   ///< norm_drift > kNormDriftLimit
};

/**
 * Integrates to time T with ceil(T/dt) equal RK4 steps (the step is shrunk
 * slightly so the last one lands on T).
 *
 * Throws std::invalid_argument for dt <= 0, T < 0, more than 1e8 steps,
 * non-Hermitian A, or an input spinor that is not normalized within 1e-9.
 */
[[nodiscard]] SpinorEvolution evolve_spinor(const Spinor& phi0, const NonlinearGateSpec& spec, double T, double dt);

struct SpinorSample {
    double t;
    Spinor phi;
    double norm;
};

/// Same integration as evolve_spinor, sampled every `every` steps plus the endpoint.
[[nodiscard]] std::vector<SpinorSample> evolve_spinor_trace(const Spinor& phi0, const NonlinearGateSpec& spec,
                                                            double T, double dt, std::size_t every);

}  // namespace chaosqc::hf
