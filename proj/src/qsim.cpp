// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/qsim.hpp"

#include "chaosqc/detail/numfmt.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace chaosqc::qsim {

StateVector::StateVector(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n_ < 1 || n_ > 62) throw std::invalid_argument("StateVector: register size out of range");
    if (amps_.size() != (std::size_t{1} << (n_ + 1))) {
        throw std::invalid_argument("StateVector: expected 2^(n+1) amplitudes");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

std::string StateVector::basis_label(std::size_t index) const {
    std::string label;
    label.reserve(static_cast<std::size_t>(n_) + 2);
    const std::size_t x = index >> 1;
    for (int k = n_ - 1; k >= 0; --k) label.push_back(((x >> k) & 1u) ? '1' : '0');
    label.push_back('|');
    label.push_back((index & 1u) ? '1' : '0');
    return label;
}

StateVector prepare_uniform(int n, int bound) {
    if (n < 1 || n > bound) {
        throw std::invalid_argument("prepare_uniform: n = " + std::to_string(n) + " outside 1.." + std::to_string(bound));
    }
    // Exact for even n; odd n carries the single rounding of sqrt(1/2).
    const double amp = std::ldexp(1.0, -n / 2) * ((n % 2) ? std::sqrt(0.5) : 1.0);
    std::vector<Complex> amps(std::size_t{1} << (n + 1), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < amps.size(); i += 2) amps[i] = Complex{amp, 0.0};
    return StateVector(n, std::move(amps));
}

void apply_oracle_inplace(StateVector& state, const sat::CnfFormula& f) {
    if (state.num_register_qubits() != f.num_vars()) {
        throw std::invalid_argument("apply_oracle: state has " + std::to_string(state.num_register_qubits()) +
                                    " register qubits, formula has n = " + std::to_string(f.num_vars()));
    }
    const sat::CompiledFormula cf(f);
    auto& amps = state.mutable_amplitudes();
    const std::uint64_t registers = amps.size() >> 1;
    for (std::uint64_t x = 0; x < registers; ++x) {
        if (cf.satisfied(x)) std::swap(amps[2 * x], amps[2 * x + 1]);
    }
}

StateVector apply_oracle(StateVector state, const sat::CnfFormula& f) {
    apply_oracle_inplace(state, f);
    return state;
}

double measure_flag_probability(const StateVector& state) {
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::size_t i = 1; i < amps.size(); i += 2) p += std::norm(amps[i]);
    return p;
}

FlagReduction reduce_to_flag(const StateVector& state) {
    double q2 = measure_flag_probability(state);
    // Rounding can push a sum of probabilities a hair above 1.
    if (q2 > 1.0) q2 = 1.0;
    return FlagReduction{std::sqrt(q2), q2};
}

void write_state_csv(std::ostream& out, const StateVector& state) {
    out << "index,label,re,im\n";
    for (std::size_t i = 0; i < state.size(); ++i) {
        out << i << ',' << state.basis_label(i) << ',' << detail::repr(state[i].real()) << ','
            << detail::repr(state[i].imag()) << '\n';
    }
}

}  // namespace chaosqc::qsim
