// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/slater.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chaosqc::hf {

namespace {

int permutation_sign(std::span<const int> p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    return inversions % 2 ? -1 : 1;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

SlaterState::SlaterState(int particles, int dim) : n_(particles), d_(dim) {
    if (n_ < 1 || n_ > kMaxSlaterParticles) throw std::invalid_argument("SlaterState: particle count out of range 1..4");
    if (d_ < n_ || d_ > kMaxSlaterDim) {
        throw std::invalid_argument("SlaterState: need N <= d <= 8 (N = " + std::to_string(n_) +
                                    ", d = " + std::to_string(d_) + ")");
    }
    std::size_t size = 1;
    for (int k = 0; k < n_; ++k) size *= static_cast<std::size_t>(d_);
    amps_.assign(size, Complex{0.0, 0.0});
}

std::size_t SlaterState::flat_index(std::span<const int> idx) const {
    if (idx.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("SlaterState: wrong index arity");
    std::size_t flat = 0;
    for (int i : idx) {
        if (i < 0 || i >= d_) throw std::out_of_range("SlaterState: index out of range");
        flat = flat * static_cast<std::size_t>(d_) + static_cast<std::size_t>(i);
    }
    return flat;
}

std::vector<int> SlaterState::unflatten(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (int k = n_ - 1; k >= 0; --k) {
        idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(d_));
        flat /= static_cast<std::size_t>(d_);
    }
    return idx;
}

double SlaterState::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

bool SlaterState::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Complex& a) { return a == Complex{0.0, 0.0}; });
}

SlaterState slater_compose(std::span<const Eigen::VectorXcd> orbitals) {
    const int n = static_cast<int>(orbitals.size());
    if (n < 1) throw std::invalid_argument("slater_compose: no orbitals");
    const auto d = orbitals.front().size();
    for (const auto& phi : orbitals) {
        if (phi.size() != d) throw std::invalid_argument("slater_compose: orbitals differ in dimension");
    }
    if (n > d) throw std::invalid_argument("slater_compose: N > d gives the zero state");
    SlaterState state(n, static_cast<int>(d));

    // Repeated orbital: every minor has two equal rows.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (orbitals[static_cast<std::size_t>(p)] == orbitals[static_cast<std::size_t>(q)]) return state;
        }
    }

    const double scale = 1.0 / std::sqrt(factorial(n));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    auto& amps = state.mutable_amplitudes();

    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        const auto idx = state.unflatten(flat);
        if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
            continue;
        }
        // Strictly increasing tuple: permutation expansion of the N x N minor.
        Complex amp{0.0, 0.0};
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            Complex term = static_cast<double>(permutation_sign(sigma));
            for (int k = 0; k < n; ++k) {
                term *= orbitals[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])](idx[static_cast<std::size_t>(k)]);
            }
            amp += term;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        amp *= scale;

        // Scatter to every ordering of the same index set.
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> permuted(idx.size());
        do {
            for (std::size_t k = 0; k < idx.size(); ++k) permuted[k] = idx[static_cast<std::size_t>(order[k])];
            const double sign = permutation_sign(order);
            amps[state.flat_index(permuted)] = sign * amp;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return state;
}

Complex slater_overlap(std::span<const Eigen::VectorXcd> a, std::span<const Eigen::VectorXcd> b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("slater_overlap: orbital counts differ or are zero");
    const auto d = a.front().size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].size() != d || b[k].size() != d) throw std::invalid_argument("slater_overlap: orbital dimensions differ");
    }
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXcd G(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            G(i, j) = a[static_cast<std::size_t>(i)].dot(b[static_cast<std::size_t>(j)]);
        }
    }
    return G.determinant();
}

}  // namespace chaosqc::hf
