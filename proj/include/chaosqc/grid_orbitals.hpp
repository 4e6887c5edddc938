// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file grid_orbitals.hpp
 * @brief Time-dependent Hartree-Fock evolution of N orbitals on a 1D grid.
 *
 * Each orbital obeys i dPhi_i/dt = H(Phi) Phi_i with
 *
 *   H(Phi) Phi_i (r) = (-Lap/2m_i + v(r) + U_i(r)) Phi_i(r) - sum_r' w(r') W(r', r) Phi_i(r')
 *   U_i(r)           = sum_{j != i} sum_r' w(r') |Phi_j(r')|^2 V(r', r)
 *   W(r', r)         = sum_j conj(Phi_j(r')) V(r', r) Phi_j(r)
 *
 * The direct term excludes j = i while the exchange kernel sums over every
 * orbital, exactly as displayed above. Lap is the 3-point second difference
 * with either zero (Dirichlet) or periodic boundaries. The kinetic term is
 * Hermitian under the weighted inner product only when the weights are
 * uniform; norms are conserved in that case.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace chaosqc::hf {

using Complex = std::complex<double>;

struct GridOrbitalSet {
    double spacing = 1.0;
    bool periodic = false;
    Eigen::VectorXd weights;                ///< quadrature weight per grid point
    std::vector<Eigen::VectorXcd> orbitals; ///< N vectors of length d
    Eigen::MatrixXd V;                      ///< V(r', r), symmetric
    Eigen::VectorXd v_ext;
    std::vector<double> masses;             ///< one per orbital

    [[nodiscard]] std::size_t grid_size() const noexcept { return static_cast<std::size_t>(weights.size()); }
    [[nodiscard]] std::size_t num_orbitals() const noexcept { return orbitals.size(); }

    /// Uniform weights (= spacing), zero potentials, unit masses.
    static GridOrbitalSet uniform(std::size_t d, double spacing, bool periodic, std::vector<Eigen::VectorXcd> orbitals);
};

/// Shape, symmetry and positivity checks; orthonormality within `tol`. Throws std::invalid_argument.
void validate(const GridOrbitalSet& orb, double tol = 1e-8);

/// Weighted inner product sum_r w(r) conj(a(r)) b(r).
[[nodiscard]] Complex inner(const GridOrbitalSet& orb, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

struct OrthonormalityReport {
    double max_norm_deviation = 0.0;  ///< max_i | <Phi_i,Phi_i> - 1 |
    double max_overlap = 0.0;         ///< max_{i != j} | <Phi_i,Phi_j> |
};

[[nodiscard]] OrthonormalityReport orthonormality(const GridOrbitalSet& orb);

struct MeanField {
    Eigen::VectorXd U;   ///< direct potential U_i(r)
    Eigen::MatrixXcd W;  ///< exchange kernel W(r', r), row = r'
};

/// Mean-field terms for orbital `i` (0-based). Throws std::out_of_range for a bad index.
[[nodiscard]] MeanField mean_field_potentials(const GridOrbitalSet& orb, std::size_t i);

/// Second difference (psi[r+1] - 2 psi[r] + psi[r-1]) / h^2.
[[nodiscard]] Eigen::VectorXcd laplacian(const GridOrbitalSet& orb, const Eigen::VectorXcd& psi);

/// H(Phi) applied to every orbital with the mean field frozen at `orb`.
[[nodiscard]] std::vector<Eigen::VectorXcd> apply_hamiltonian(const GridOrbitalSet& orb);

/**
 * One RK4 step of the coupled nonlinear system; the mean field is recomputed
 * from the stage state at every RK stage.
 */
[[nodiscard]] GridOrbitalSet hf_step(const GridOrbitalSet& orb, double dt);

/// One RK4 step of i dpsi/dt = (-Lap/2m + v_ext) psi using the grid of `orb`.
[[nodiscard]] Eigen::VectorXcd schrodinger_step(const GridOrbitalSet& orb, const Eigen::VectorXcd& psi, double mass,
                                                double dt);

/// 0.05 divided by a bound on the spectral radius of the current generator.
[[nodiscard]] double default_hf_dt(const GridOrbitalSet& orb);

inline constexpr double kHfDriftLimit = 1e-6;

struct HfEvolution {
    GridOrbitalSet state;
    std::size_t steps = 0;
    OrthonormalityReport drift;
    bool drift_exceeded = false;  ///< either drift measure above kHfDriftLimit
};

[[nodiscard]] HfEvolution hf_evolve(const GridOrbitalSet& orb, double dt, std::size_t steps);

}  // namespace chaosqc::hf
