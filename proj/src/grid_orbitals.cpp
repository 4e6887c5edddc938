// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/grid_orbitals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chaosqc::hf {

namespace {

constexpr Complex kI{0.0, 1.0};

using Orbitals = std::vector<Eigen::VectorXcd>;

Orbitals axpy(const Orbitals& y, double h, const Orbitals& k) {
    Orbitals out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
    return out;
}

Orbitals generator(const GridOrbitalSet& frame, const Orbitals& phi) {
    GridOrbitalSet stage = frame;
    stage.orbitals = phi;
    auto h = apply_hamiltonian(stage);
    for (auto& v : h) v *= -kI;
    return h;
}

}  // namespace

GridOrbitalSet GridOrbitalSet::uniform(std::size_t d, double spacing, bool periodic,
                                       std::vector<Eigen::VectorXcd> orbitals) {
    GridOrbitalSet s;
    const auto n = static_cast<Eigen::Index>(d);
    s.spacing = spacing;
    s.periodic = periodic;
    s.weights = Eigen::VectorXd::Constant(n, spacing);
    s.masses.assign(orbitals.size(), 1.0);
    s.orbitals = std::move(orbitals);
    s.V = Eigen::MatrixXd::Zero(n, n);
    s.v_ext = Eigen::VectorXd::Zero(n);
    return s;
}

Complex inner(const GridOrbitalSet& orb, const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Complex s{0.0, 0.0};
    for (Eigen::Index r = 0; r < a.size(); ++r) s += orb.weights(r) * std::conj(a(r)) * b(r);
    return s;
}

void validate(const GridOrbitalSet& orb, double tol) {
    const auto d = static_cast<Eigen::Index>(orb.grid_size());
    if (d < 1) throw std::invalid_argument("orbital set: empty grid");
    if (!(orb.spacing > 0.0)) throw std::invalid_argument("orbital set: spacing must be positive");
    if ((orb.weights.array() <= 0.0).any()) throw std::invalid_argument("orbital set: weights must be positive");
    if (orb.V.rows() != d || orb.V.cols() != d) throw std::invalid_argument("orbital set: V must be d x d");
    if (orb.v_ext.size() != d) throw std::invalid_argument("orbital set: v_ext must have length d");
    if (orb.masses.size() != orb.num_orbitals()) throw std::invalid_argument("orbital set: one mass per orbital");
    for (double m : orb.masses) {
        if (!(m > 0.0)) throw std::invalid_argument("orbital set: masses must be positive");
    }
    for (const auto& phi : orb.orbitals) {
        if (phi.size() != d) throw std::invalid_argument("orbital set: orbital length differs from grid size");
    }
    const double vscale = std::max(1.0, orb.V.cwiseAbs().maxCoeff());
    if ((orb.V - orb.V.transpose()).cwiseAbs().maxCoeff() > 1e-12 * vscale) {
        throw std::invalid_argument("orbital set: V is not symmetric");
    }
    const auto rep = orthonormality(orb);
    if (rep.max_norm_deviation > tol || rep.max_overlap > tol) {
        throw std::invalid_argument("orbital set: orbitals are not orthonormal (norm deviation " +
                                    std::to_string(rep.max_norm_deviation) + ", overlap " +
                                    std::to_string(rep.max_overlap) + ")");
    }
}

OrthonormalityReport orthonormality(const GridOrbitalSet& orb) {
    OrthonormalityReport rep;
    const auto n = orb.num_orbitals();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex s = inner(orb, orb.orbitals[i], orb.orbitals[j]);
            if (i == j) {
                rep.max_norm_deviation = std::max(rep.max_norm_deviation, std::abs(s - 1.0));
            } else {
                rep.max_overlap = std::max(rep.max_overlap, std::abs(s));
            }
        }
    }
    return rep;
}

MeanField mean_field_potentials(const GridOrbitalSet& orb, std::size_t i) {
    if (i >= orb.num_orbitals()) {
        throw std::out_of_range("mean_field_potentials: orbital index " + std::to_string(i) + " out of range");
    }
    const auto d = static_cast<Eigen::Index>(orb.grid_size());

    Eigen::VectorXd density = Eigen::VectorXd::Zero(d);
    Eigen::MatrixXcd pair = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t j = 0; j < orb.num_orbitals(); ++j) {
        const auto& phi = orb.orbitals[j];
        if (j != i) density += phi.cwiseAbs2();
        pair.noalias() += phi.conjugate() * phi.transpose();
    }

    MeanField mf;
    mf.U = orb.V.transpose() * orb.weights.cwiseProduct(density);
    mf.W = pair.cwiseProduct(orb.V.cast<Complex>());
    return mf;
}

Eigen::VectorXcd laplacian(const GridOrbitalSet& orb, const Eigen::VectorXcd& psi) {
    const auto d = psi.size();
    const double inv_h2 = 1.0 / (orb.spacing * orb.spacing);
    Eigen::VectorXcd out(d);
    for (Eigen::Index r = 0; r < d; ++r) {
        Complex left{0.0, 0.0};
        Complex right{0.0, 0.0};
        if (r > 0) {
            left = psi(r - 1);
        } else if (orb.periodic) {
            left = psi(d - 1);
        }
        if (r + 1 < d) {
            right = psi(r + 1);
        } else if (orb.periodic) {
            right = psi(0);
        }
        out(r) = (right - 2.0 * psi(r) + left) * inv_h2;
    }
    return out;
}

std::vector<Eigen::VectorXcd> apply_hamiltonian(const GridOrbitalSet& orb) {
    const auto n = orb.num_orbitals();
    std::vector<Eigen::VectorXcd> out(n);
    if (n == 0) return out;

    // Shared pieces first, then the per-orbital terms.
    const auto d = static_cast<Eigen::Index>(orb.grid_size());
    Eigen::VectorXd total_density = Eigen::VectorXd::Zero(d);
    Eigen::MatrixXcd pair = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& phi : orb.orbitals) {
        total_density += phi.cwiseAbs2();
        pair.noalias() += phi.conjugate() * phi.transpose();
    }
    const Eigen::MatrixXcd W = pair.cwiseProduct(orb.V.cast<Complex>());
    const Eigen::MatrixXcd Wt = W.transpose();

    for (std::size_t i = 0; i < n; ++i) {
        const auto& phi = orb.orbitals[i];
        const Eigen::VectorXd density = total_density - phi.cwiseAbs2();
        const Eigen::VectorXd U = orb.V.transpose() * orb.weights.cwiseProduct(density);
        const Eigen::VectorXcd weighted = orb.weights.cast<Complex>().cwiseProduct(phi);
        out[i] = (-0.5 / orb.masses[i]) * laplacian(orb, phi) + (orb.v_ext + U).cast<Complex>().cwiseProduct(phi) -
                 Wt * weighted;
    }
    return out;
}

GridOrbitalSet hf_step(const GridOrbitalSet& orb, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("hf_step: dt must be positive");
    const auto& y = orb.orbitals;
    const auto k1 = generator(orb, y);
    const auto k2 = generator(orb, axpy(y, 0.5 * dt, k1));
    const auto k3 = generator(orb, axpy(y, 0.5 * dt, k2));
    const auto k4 = generator(orb, axpy(y, dt, k3));

    GridOrbitalSet next = orb;
    for (std::size_t i = 0; i < y.size(); ++i) {
        next.orbitals[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return next;
}

Eigen::VectorXcd schrodinger_step(const GridOrbitalSet& orb, const Eigen::VectorXcd& psi, double mass, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("schrodinger_step: dt must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("schrodinger_step: mass must be positive");
    const auto rhs = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
        Eigen::VectorXcd hv = (-0.5 / mass) * laplacian(orb, v) + orb.v_ext.cast<Complex>().cwiseProduct(v);
        return -kI * hv;
    };
    const Eigen::VectorXcd k1 = rhs(psi);
    const Eigen::VectorXcd k2 = rhs(psi + 0.5 * dt * k1);
    const Eigen::VectorXcd k3 = rhs(psi + 0.5 * dt * k2);
    const Eigen::VectorXcd k4 = rhs(psi + dt * k3);
    return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double default_hf_dt(const GridOrbitalSet& orb) {
    double min_mass = 1.0;
    for (std::size_t i = 0; i < orb.masses.size(); ++i) min_mass = i ? std::min(min_mass, orb.masses[i]) : orb.masses[i];
    const double kinetic = 2.0 / (min_mass * orb.spacing * orb.spacing);
    const double external = orb.v_ext.size() ? orb.v_ext.cwiseAbs().maxCoeff() : 0.0;

    // |U_i| <= sum_j sum_r' w |Phi_j|^2 |V|, and the exchange operator is bounded by its row sums.
    double mean_field = 0.0;
    if (orb.num_orbitals() > 0) {
        const auto d = static_cast<Eigen::Index>(orb.grid_size());
        Eigen::VectorXd density = Eigen::VectorXd::Zero(d);
        for (const auto& phi : orb.orbitals) density += phi.cwiseAbs2();
        const Eigen::VectorXd U = orb.V.cwiseAbs().transpose() * orb.weights.cwiseProduct(density);
        const auto mf = mean_field_potentials(orb, 0);
        const Eigen::MatrixXd K = mf.W.cwiseAbs().transpose() * orb.weights.asDiagonal();
        mean_field = U.maxCoeff() + K.rowwise().sum().maxCoeff();
    }
    return 0.05 / (kinetic + external + mean_field);
}

HfEvolution hf_evolve(const GridOrbitalSet& orb, double dt, std::size_t steps) {
    validate(orb);
    HfEvolution ev{orb, 0, {}, false};
    for (std::size_t k = 0; k < steps; ++k) ev.state = hf_step(ev.state, dt);
    ev.steps = steps;
    ev.drift = orthonormality(ev.state);
    ev.drift_exceeded = ev.drift.max_norm_deviation > kHfDriftLimit || ev.drift.max_overlap > kHfDriftLimit;
    return ev;
}

}  // namespace chaosqc::hf
