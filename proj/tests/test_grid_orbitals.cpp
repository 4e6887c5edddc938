// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chaosqc/grid_orbitals.hpp"
#include "oracles.hpp"

using namespace chaosqc::hf;

namespace {

Eigen::VectorXcd unit(Eigen::Index d, Eigen::Index k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(k) = 1.0;
    return v;
}

// Normalized discrete plane wave exp(i k x_r) on a periodic grid.
Eigen::VectorXcd plane_wave(Eigen::Index d, double h, int mode) {
    Eigen::VectorXcd v(d);
    const double k = 2.0 * std::numbers::pi * mode / (static_cast<double>(d) * h);
    for (Eigen::Index r = 0; r < d; ++r) v(r) = std::exp(Complex{0.0, k * h * static_cast<double>(r)});
    return v / std::sqrt(static_cast<double>(d) * h);
}

}  // namespace

TEST_CASE("mean_field_potentials: vanishing interaction") {
    std::mt19937_64 rng(8);
    auto s = oracle::random_orbital_set(rng, 3, 10);
    s.V.setZero();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto mf = mean_field_potentials(s, i);
        CHECK(mf.U.isZero(0.0));
        CHECK(mf.W.isZero(0.0));
    }
}

TEST_CASE("mean_field_potentials: single particle") {
    std::mt19937_64 rng(9);
    const auto s = oracle::random_orbital_set(rng, 1, 6);
    const auto mf = mean_field_potentials(s, 0);
    CHECK(mf.U.isZero(0.0));
    const auto& phi = s.orbitals[0];
    for (Eigen::Index rp = 0; rp < 6; ++rp) {
        for (Eigen::Index r = 0; r < 6; ++r) {
            CHECK(std::abs(mf.W(rp, r) - std::conj(phi(rp)) * s.V(rp, r) * phi(r)) <= 1e-15);
        }
    }
}

TEST_CASE("mean_field_potentials: two unit orbitals with contact kernel") {
    auto s = GridOrbitalSet::uniform(2, 1.0, false, {unit(2, 0), unit(2, 1)});
    s.V = Eigen::MatrixXd::Identity(2, 2);
    s.V(1, 1) = 2.5;
    const auto mf0 = mean_field_potentials(s, 0);
    CHECK(mf0.U(0) == 0.0);
    CHECK(mf0.U(1) == 2.5);
    const auto mf1 = mean_field_potentials(s, 1);
    CHECK(mf1.U(0) == 1.0);
    CHECK(mf1.U(1) == 0.0);
    std::vector<double> U;
    std::vector<std::vector<Complex>> W;
    oracle::naive_mean_field(s, 0, U, W);
    CHECK(U == std::vector<double>{0.0, 2.5});
    CHECK(mf0.W(0, 0) == Complex{1.0, 0.0});
    CHECK(mf0.W(1, 1) == Complex{2.5, 0.0});
    CHECK(mf0.W(0, 1) == Complex{0.0, 0.0});
    CHECK_THROWS_AS((void)mean_field_potentials(s, 2), std::out_of_range);
}

TEST_CASE("property: mean field matches naive quadrature") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto d = static_cast<Eigen::Index>(std::uniform_int_distribution<int>(n, 16)(rng));
        const auto s = oracle::random_orbital_set(rng, n, d);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            const auto mf = mean_field_potentials(s, i);
            std::vector<double> U;
            std::vector<std::vector<Complex>> W;
            oracle::naive_mean_field(s, i, U, W);
            for (Eigen::Index r = 0; r < d; ++r) {
                REQUIRE(std::abs(mf.U(r) - U[static_cast<std::size_t>(r)]) <= 1e-12);
                for (Eigen::Index rp = 0; rp < d; ++rp) {
                    REQUIRE(std::abs(mf.W(rp, r) - W[static_cast<std::size_t>(rp)][static_cast<std::size_t>(r)]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("validate: rejects malformed sets") {
    std::mt19937_64 rng(4);
    auto good = oracle::random_orbital_set(rng, 2, 8);
    CHECK_NOTHROW(validate(good));

    auto asym = good;
    asym.V(0, 1) += 0.1;
    CHECK_THROWS_AS(validate(asym), std::invalid_argument);

    auto skew = good;
    skew.orbitals[1] += 0.01 * skew.orbitals[0];
    CHECK_THROWS_AS(validate(skew), std::invalid_argument);

    auto masses = good;
    masses.masses.pop_back();
    CHECK_THROWS_AS(validate(masses), std::invalid_argument);
}

TEST_CASE("hf_step: free plane wave follows the discrete dispersion") {
    const Eigen::Index d = 32;
    const double h = 0.25;
    const int mode = 3;
    auto s = GridOrbitalSet::uniform(d, h, true, {plane_wave(d, h, mode)});
    validate(s);
    // Eigenvalue of -Lap/2 for exp(i k x) on the periodic 3-point stencil.
    const double k = 2.0 * std::numbers::pi * mode / (static_cast<double>(d) * h);
    const double energy = (1.0 - std::cos(k * h)) / (h * h);

    const double dt = 1e-3;
    const int steps = 2000;
    auto state = s;
    for (int i = 0; i < steps; ++i) state = hf_step(state, dt);
    const Eigen::VectorXcd exact = std::exp(Complex{0.0, -energy * dt * steps}) * s.orbitals[0];
    CHECK((state.orbitals[0] - exact).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("hf_step: without interaction equals independent linear steps") {
    std::mt19937_64 rng(21);
    auto s = oracle::random_orbital_set(rng, 3, 12, true);
    s.V.setZero();
    const double dt = 1e-3;
    const auto next = hf_step(s, dt);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto lin = schrodinger_step(s, s.orbitals[i], s.masses[i], dt);
        CHECK((next.orbitals[i] - lin).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("hf_step: interacting orbitals keep their norms") {
    std::mt19937_64 rng(55);
    const auto s = oracle::random_orbital_set(rng, 3, 16, true);
    const double dt = default_hf_dt(s);
    const auto ev = hf_evolve(s, dt, 1000);
    CHECK(ev.drift.max_norm_deviation <= 1e-6);
    CHECK(ev.steps == 1000);
}

TEST_CASE("apply_hamiltonian: expectation values are real on a uniform grid") {
    std::mt19937_64 rng(56);
    const auto s = oracle::random_orbital_set(rng, 2, 10, true);
    const auto h = apply_hamiltonian(s);
    // <Phi_i, H Phi_i> must be real for every orbital.
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(inner(s, s.orbitals[i], h[i]).imag()) <= 1e-12);
}

TEST_CASE("hf_step: dt must be positive") {
    std::mt19937_64 rng(1);
    const auto s = oracle::random_orbital_set(rng, 1, 4);
    CHECK_THROWS_AS((void)hf_step(s, 0.0), std::invalid_argument);
}
