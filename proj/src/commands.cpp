// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "chaosqc/detail/numfmt.hpp"
#include "chaosqc/gate_io.hpp"
#include "chaosqc/qsim.hpp"
#include "chaosqc/slater.hpp"

namespace chaosqc::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    return f;
}

ojson params_json(const chaos::LogisticParams& p) {
    ojson j;
    j["a"] = p.a;
    j["tau"] = p.tau;
    j["k_max"] = p.k_max;
    return j;
}

ojson complex_json(std::complex<double> z) { return ojson::array({z.real(), z.imag()}); }

void write_trajectory_csv(std::ostream& out, const std::vector<double>& values) {
    out << "step,m\n";
    for (std::size_t k = 0; k < values.size(); ++k) out << k << ',' << detail::repr(values[k]) << '\n';
}

// Brute-force tensor inner product, used to cross-check the determinant overlap.
std::complex<double> tensor_inner(const hf::SlaterState& a, const hf::SlaterState& b) {
    std::complex<double> s{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
    return s;
}

int gate_evolve(const GateOptions& opts, std::ostream& out, std::ostream& err) {
    const auto run = hf::parse_gate_run(hf::read_text_file(opts.spec_path));
    const auto samples = hf::evolve_spinor_trace(run.phi0, run.spec, run.T, run.dt, run.every);
    const auto& last = samples.back();
    const double drift = std::abs(last.norm - run.phi0.norm());
    if (drift > hf::kNormDriftLimit) err << "warning: norm drift " << detail::repr(drift) << " exceeds 1e-6\n";

    if (opts.trace_path) {
        auto f = open_output(*opts.trace_path);
        hf::write_spinor_trace_csv(f, samples);
    }
    if (opts.json || opts.trace_path) {
        ojson j;
        j["schema"] = kSchemaVersion;
        j["command"] = "gate evolve";
        j["b_form"] = run.spec.b_form.name;
        j["g"] = run.spec.g;
        j["T"] = run.T;
        j["dt"] = run.dt;
        j["phi"] = ojson::array({complex_json(last.phi.c0), complex_json(last.phi.c1)});
        j["norm_drift"] = drift;
        j["drift_exceeded"] = drift > hf::kNormDriftLimit;
        out << j.dump() << '\n';
    } else {
        hf::write_spinor_trace_csv(out, samples);
    }
    return 0;
}

int gate_slater(const GateOptions& opts, std::ostream& out) {
    const auto orbitals = hf::parse_vector_list(hf::read_text_file(opts.spec_path), "orbitals");
    const auto state = hf::slater_compose(orbitals);
    ojson amps = ojson::array();
    for (std::size_t k = 0; k < state.size(); ++k) {
        const auto z = state.amplitudes()[k];
        if (z == std::complex<double>{0.0, 0.0}) continue;
        amps.push_back({{"index", state.unflatten(k)}, {"re", z.real()}, {"im", z.imag()}});
    }
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "gate slater";
    j["N"] = state.particles();
    j["d"] = state.dim();
    j["norm"] = state.norm();
    j["zero_state"] = state.is_zero();
    j["amplitudes"] = std::move(amps);
    out << j.dump() << '\n';
    return 0;
}

int gate_overlap(const GateOptions& opts, std::ostream& out) {
    const auto text = hf::read_text_file(opts.spec_path);
    const auto a = hf::parse_vector_list(text, "a");
    const auto b = hf::parse_vector_list(text, "b");
    const auto det = hf::slater_overlap(a, b);
    const auto brute = tensor_inner(hf::slater_compose(a), hf::slater_compose(b));
    const double diff = std::abs(det - brute);
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "gate overlap";
    j["overlap"] = complex_json(det);
    j["brute_force"] = complex_json(brute);
    j["abs_diff"] = diff;
    j["match"] = diff <= 1e-12;
    out << j.dump() << '\n';
    return 0;
}

int gate_hf(const GateOptions& opts, std::ostream& out, std::ostream& err) {
    auto orb = hf::parse_orbital_set(hf::read_text_file(opts.spec_path));
    const double dt = opts.dt ? *opts.dt : hf::default_hf_dt(orb);
    std::optional<std::ofstream> trace;
    if (opts.trace_path) {
        trace = open_output(*opts.trace_path);
        *trace << "step,max_norm_deviation,max_overlap\n";
    }
    for (std::size_t k = 1; k <= opts.steps; ++k) {
        orb = hf::hf_step(orb, dt);
        if (trace) {
            const auto rep = hf::orthonormality(orb);
            *trace << k << ',' << detail::repr(rep.max_norm_deviation) << ',' << detail::repr(rep.max_overlap) << '\n';
        }
    }
    const auto rep = hf::orthonormality(orb);
    const bool exceeded = rep.max_norm_deviation > hf::kHfDriftLimit || rep.max_overlap > hf::kHfDriftLimit;
    if (exceeded) err << "warning: orbital norm/orthogonality drift exceeds 1e-6\n";
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "gate hf";
    j["N"] = orb.num_orbitals();
    j["d"] = orb.grid_size();
    j["dt"] = dt;
    j["steps"] = opts.steps;
    j["max_norm_deviation"] = rep.max_norm_deviation;
    j["max_overlap"] = rep.max_overlap;
    j["drift_exceeded"] = exceeded;
    out << j.dump() << '\n';
    return 0;
}

}  // namespace

int exit_code(chaos::Verdict v) noexcept { return v == chaos::Verdict::Sat ? kExitSat : kExitUnsat; }

std::string to_json(const RunReport& report) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "solve";
    j["instance"] = report.instance;
    j["n"] = report.n;
    j["r"] = report.r ? ojson(*report.r) : ojson();
    j["q_squared"] = report.q_squared;
    j["params"] = params_json(report.params);
    j["verdict"] = chaos::to_string(report.verdict);
    j["crossing_step"] = report.crossing_step ? ojson(*report.crossing_step) : ojson();
    j["trajectory"] = report.trajectory;
    if (report.wall_time_s) j["wall_time"] = *report.wall_time_s;
    return j.dump();
}

RunReport solve_formula(const sat::CnfFormula& f, const std::string& instance, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const chaos::LogisticParams params{opts.a, opts.tau,
                                       opts.k_max ? *opts.k_max : chaos::default_budget(f.num_vars(), opts.a)};
    params.validate();

    auto state = qsim::apply_oracle(qsim::prepare_uniform(f.num_vars()), f);
    if (opts.dump_state_path) {
        auto file = open_output(*opts.dump_state_path);
        qsim::write_state_csv(file, state);
    }
    const auto flag = qsim::reduce_to_flag(state);
    auto cls = chaos::classify(flag.q_squared, params);

    RunReport rep;
    rep.instance = instance;
    rep.n = f.num_vars();
    if (opts.with_oracle) rep.r = sat::count_roots(f);
    rep.q_squared = flag.q_squared;
    rep.params = params;
    rep.verdict = cls.verdict;
    rep.crossing_step = cls.trajectory.crossing_step;
    rep.trajectory = std::move(cls.trajectory.values);
    if (opts.trace_path) {
        auto file = open_output(*opts.trace_path);
        write_trajectory_csv(file, rep.trajectory);
    }
    if (opts.timing) {
        rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return rep;
}

OracleReport oracle_formula(const sat::CnfFormula& f, const std::string& instance, int bound) {
    OracleReport rep;
    rep.instance = instance;
    rep.n = f.num_vars();
    rep.r = sat::count_roots(f, bound);
    rep.fraction = std::ldexp(static_cast<double>(rep.r), -f.num_vars());
    return rep;
}

std::string to_json(const OracleReport& report) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "oracle";
    j["instance"] = report.instance;
    j["n"] = report.n;
    j["r"] = report.r;
    j["fraction"] = report.fraction;
    return j.dump();
}

int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const auto f = sat::read_dimacs_file(path);
        const auto rep = solve_formula(f, path, opts);
        out << to_json(rep) << '\n';
        return exit_code(rep.verdict);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        const auto rep = oracle_formula(sat::read_dimacs_file(path), path);
        out << to_json(rep) << '\n';
        return rep.r > 0 ? kExitSat : kExitUnsat;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int amplify_default_budget(const std::vector<double>& q_squared, double a) {
    int n = 0;
    for (double q2 : q_squared) {
        if (q2 > 0.0) n = std::max(n, static_cast<int>(std::ceil(-std::log2(q2))));
    }
    if (n == 0) n = qsim::kDefaultQubitBound;
    return chaos::default_budget(n, a);
}

int cmd_amplify(const AmplifyOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.q_squared.empty()) throw std::invalid_argument("at least one --q2 value is required");
        const chaos::LogisticParams params{opts.a, opts.tau,
                                           opts.k_max ? *opts.k_max : amplify_default_budget(opts.q_squared, opts.a)};
        const auto table = chaos::trace_amplification(opts.q_squared, params);
        if (opts.json) {
            out << chaos::trace_to_json(table) << '\n';
        } else {
            chaos::write_trace_csv(out, table);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_lyapunov(const LyapunovOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const auto est = chaos::lyapunov(opts.a, opts.x0, opts.burn_in, opts.samples);
        ojson j;
        j["schema"] = kSchemaVersion;
        j["command"] = "lyapunov";
        j["a"] = opts.a;
        j["x0"] = opts.x0;
        j["burn_in"] = opts.burn_in;
        j["samples"] = opts.samples;
        // JSON has no infinity; a fully superstable orbit is reported as null.
        j["exponent"] = std::isfinite(est.exponent) ? ojson(est.exponent) : ojson();
        j["used"] = est.used;
        j["skipped"] = est.skipped;
        out << j.dump() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_gate(const GateOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.action == "evolve") return gate_evolve(opts, out, err);
        if (opts.action == "slater") return gate_slater(opts, out);
        if (opts.action == "overlap") return gate_overlap(opts, out);
        if (opts.action == "hf") return gate_hf(opts, out, err);
        throw std::invalid_argument("unknown gate action '" + opts.action + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace chaosqc::cli
