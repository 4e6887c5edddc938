// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "chaosqc/slater.hpp"
#include "oracles.hpp"

using namespace chaosqc::hf;

namespace {

Eigen::VectorXcd unit(Eigen::Index d, Eigen::Index k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(k) = 1.0;
    return v;
}

std::vector<Eigen::VectorXcd> random_orbitals(std::mt19937_64& rng, int n, Eigen::Index d) {
    std::vector<Eigen::VectorXcd> out;
    for (int k = 0; k < n; ++k) out.push_back(oracle::random_vector(rng, d).normalized());
    return out;
}

int parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("slater_compose: two basis vectors give the singlet-like state") {
    const std::vector<Eigen::VectorXcd> orb{unit(2, 0), unit(2, 1)};
    const auto psi = slater_compose(orb);
    const double s = 1.0 / std::sqrt(2.0);
    REQUIRE(psi.size() == 4);
    CHECK(psi.amplitudes()[0] == Complex{0.0, 0.0});
    CHECK(std::abs(psi.amplitudes()[1] - Complex{s, 0.0}) <= 1e-15);
    CHECK(std::abs(psi.amplitudes()[2] - Complex{-s, 0.0}) <= 1e-15);
    CHECK(psi.amplitudes()[3] == Complex{0.0, 0.0});
}

TEST_CASE("slater_compose: identical orbitals vanish") {
    std::mt19937_64 rng(1);
    const auto v = oracle::random_vector(rng, 4);
    const std::vector<Eigen::VectorXcd> orb{v, v};
    const auto psi = slater_compose(orb);
    CHECK(psi.is_zero());
    CHECK(psi.norm() == 0.0);
}

TEST_CASE("slater_compose: swapping inputs negates the state") {
    std::mt19937_64 rng(2);
    auto orb = random_orbitals(rng, 3, 5);
    const auto a = slater_compose(orb);
    std::swap(orb[0], orb[2]);
    const auto b = slater_compose(orb);
    for (std::size_t k = 0; k < a.size(); ++k) REQUIRE(std::abs(b.amplitudes()[k] + a.amplitudes()[k]) <= 1e-14);
}

TEST_CASE("property: exhaustive antisymmetry for N <= 3, d <= 5") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 3; ++n) {
        for (int d = n; d <= 5; ++d) {
            const auto psi = slater_compose(random_orbitals(rng, n, d));
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (std::size_t flat = 0; flat < psi.size(); ++flat) {
                const auto idx = psi.unflatten(flat);
                for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
                do {
                    std::vector<int> permuted(static_cast<std::size_t>(n));
                    for (int k = 0; k < n; ++k) {
                        permuted[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
                    }
                    REQUIRE(psi.at(permuted) == static_cast<double>(parity(perm)) * psi.amplitudes()[flat]);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
}

TEST_CASE("property: agrees with the Leibniz sum") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const int d = std::uniform_int_distribution<int>(n, 6)(rng);
        const auto orb = random_orbitals(rng, n, d);
        const auto psi = slater_compose(orb);
        const auto ref = oracle::leibniz_tensor(orb);
        REQUIRE(ref.size() == psi.size());
        for (std::size_t k = 0; k < ref.size(); ++k) REQUIRE(std::abs(psi.amplitudes()[k] - ref[k]) <= 1e-12);
    }
}

TEST_CASE("property: overlap equals determinant of the Gram matrix") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 3)(rng);
        const int d = std::uniform_int_distribution<int>(n, 6)(rng);
        const auto a = random_orbitals(rng, n, d);
        const auto b = random_orbitals(rng, n, d);
        const Complex brute = oracle::tensor_inner(slater_compose(a), slater_compose(b));
        REQUIRE(std::abs(slater_overlap(a, b) - brute) <= 1e-12);
    }
}

TEST_CASE("orthonormal orbitals give a unit-norm state") {
    std::mt19937_64 rng(6);
    const Eigen::VectorXd w = Eigen::VectorXd::Ones(6);
    const auto orb = oracle::random_orthonormal(rng, 3, 6, w);
    CHECK(std::abs(slater_compose(orb).norm() - 1.0) <= 1e-12);
}

TEST_CASE("slater: shape validation") {
    const std::vector<Eigen::VectorXcd> too_many{unit(2, 0), unit(2, 1), unit(2, 0)};
    CHECK_THROWS_AS((void)slater_compose(too_many), std::invalid_argument);
    const std::vector<Eigen::VectorXcd> ragged{unit(3, 0), unit(2, 1)};
    CHECK_THROWS_AS((void)slater_compose(ragged), std::invalid_argument);
    const std::vector<Eigen::VectorXcd> big{unit(9, 0)};
    CHECK_THROWS_AS((void)slater_compose(big), std::invalid_argument);
    const std::vector<Eigen::VectorXcd> none;
    CHECK_THROWS_AS((void)slater_compose(none), std::invalid_argument);
    CHECK_THROWS_AS((void)slater_overlap(too_many, ragged), std::invalid_argument);
    CHECK_THROWS_AS((SlaterState{3, 2}), std::invalid_argument);
}

TEST_CASE("SlaterState indexing round trip") {
    const SlaterState s(3, 4);
    for (std::size_t flat = 0; flat < s.size(); ++flat) CHECK(s.flat_index(s.unflatten(flat)) == flat);
    const std::vector<int> idx{1, 2, 3};
    CHECK(s.flat_index(idx) == 1 * 16 + 2 * 4 + 3);
    const std::vector<int> bad{1, 4, 0};
    CHECK_THROWS_AS((void)s.flat_index(bad), std::out_of_range);
}
