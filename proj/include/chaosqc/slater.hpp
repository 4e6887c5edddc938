// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater.hpp
 * @brief Antisymmetrized N-particle states built from N one-particle vectors.
 *
 * Psi(i_1..i_N) = (1/sqrt(N!)) sum_sigma sgn(sigma) prod_k Phi_sigma(k)(i_k)
 *
 * The amplitude is evaluated once per strictly increasing index tuple and
 * copied with the permutation sign to the other orderings, so antisymmetry
 * holds bit-exactly.
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace chaosqc::hf {

using Complex = std::complex<double>;

inline constexpr int kMaxSlaterParticles = 4;
inline constexpr int kMaxSlaterDim = 8;

class SlaterState {
public:
    SlaterState(int particles, int dim);

    [[nodiscard]] int particles() const noexcept { return n_; }
    [[nodiscard]] int dim() const noexcept { return d_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    /// Row-major flattening: i_1 is the slowest index.
    [[nodiscard]] std::size_t flat_index(std::span<const int> idx) const;
    [[nodiscard]] std::vector<int> unflatten(std::size_t flat) const;

    [[nodiscard]] const Complex& at(std::span<const int> idx) const { return amps_[flat_index(idx)]; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::vector<Complex>& mutable_amplitudes() noexcept { return amps_; }

    [[nodiscard]] double norm() const;
    [[nodiscard]] bool is_zero() const;

private:
    int n_;
    int d_;
    std::vector<Complex> amps_;
};

/**
 * Throws std::invalid_argument unless 1 <= N <= 4, N <= d <= 8 and all
 * vectors share length d.
 */
[[nodiscard]] SlaterState slater_compose(std::span<const Eigen::VectorXcd> orbitals);

/// det G with G(i,j) = <a_i, b_j>; equals <slater_compose(a), slater_compose(b)>.
[[nodiscard]] Complex slater_overlap(std::span<const Eigen::VectorXcd> a, std::span<const Eigen::VectorXcd> b);

}  // namespace chaosqc::hf
