// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chaosqc/commands.hpp"

namespace {

template <typename T>
std::optional<T> if_set(const CLI::Option* opt, const T& value) {
    return opt->count() ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chaosqc;

    CLI::App app{"chaosqc: SAT via oracle simulation and logistic-map amplification"};
    app.require_subcommand(1);

    // solve
    cli::SolveOptions solve;
    std::string solve_path;
    int solve_kmax = 0;
    std::string trace_path;
    std::string dump_path;
    auto* sc_solve = app.add_subcommand("solve", "Run the quantum pipeline and the amplifier on a DIMACS file");
    sc_solve->add_option("file", solve_path, "DIMACS CNF file")->required();
    sc_solve->add_option("--a", solve.a, "Logistic map parameter")->capture_default_str();
    sc_solve->add_option("--tau", solve.tau, "Detection threshold")->capture_default_str();
    auto* solve_kmax_opt = sc_solve->add_option("--kmax", solve_kmax, "Iteration budget (default ceil(n ln2/ln a)+8)");
    auto* solve_trace_opt = sc_solve->add_option("--trace", trace_path, "Write the amplifier trajectory CSV here");
    auto* solve_dump_opt = sc_solve->add_option("--dump-state", dump_path, "Write the post-oracle state vector CSV here");
    sc_solve->add_flag("--oracle", solve.with_oracle, "Also count roots exhaustively");
    sc_solve->add_flag("--timing", solve.timing, "Include wall time in the report");
    sc_solve->add_flag("--json", "JSON report on stdout (always on)");

    // oracle
    std::string oracle_path;
    auto* sc_oracle = app.add_subcommand("oracle", "Exhaustive classical root count");
    sc_oracle->add_option("file", oracle_path, "DIMACS CNF file")->required();

    // amplify
    cli::AmplifyOptions amp;
    int amp_kmax = 0;
    bool amp_csv = false;
    auto* sc_amp = app.add_subcommand("amplify", "Logistic-map trajectories for one or more q^2 values");
    sc_amp->add_option("--q2", amp.q_squared, "Initial flag probability (repeatable)")->required();
    sc_amp->add_option("--a", amp.a, "Logistic map parameter")->capture_default_str();
    sc_amp->add_option("--tau", amp.tau, "Detection threshold")->capture_default_str();
    auto* amp_kmax_opt = sc_amp->add_option("--kmax", amp_kmax, "Iteration budget");
    auto* amp_json = sc_amp->add_flag("--json", amp.json, "JSON instead of CSV");
    sc_amp->add_flag("--csv", amp_csv, "CSV output (default)")->excludes(amp_json);

    // lyapunov
    cli::LyapunovOptions lyap;
    auto* sc_lyap = app.add_subcommand("lyapunov", "Lyapunov exponent estimate for the logistic map");
    sc_lyap->add_option("--a", lyap.a, "Logistic map parameter")->capture_default_str();
    sc_lyap->add_option("--x0", lyap.x0, "Initial point")->capture_default_str();
    sc_lyap->add_option("--burn", lyap.burn_in, "Discarded iterations")->capture_default_str();
    sc_lyap->add_option("--samples", lyap.samples, "Averaged iterations")->capture_default_str();

    // gate
    cli::GateOptions gate;
    double gate_dt = 0.0;
    std::string gate_trace;
    auto* sc_gate = app.add_subcommand("gate", "Nonlinear spinor gate, Slater states and Hartree-Fock steps");
    sc_gate->add_option("action", gate.action, "evolve | slater | overlap | hf")
        ->required()
        ->check(CLI::IsMember({"evolve", "slater", "overlap", "hf"}));
    sc_gate->add_option("spec", gate.spec_path, "JSON description")->required();
    auto* gate_trace_opt = sc_gate->add_option("--trace", gate_trace, "Write a CSV trace here");
    auto* gate_dt_opt = sc_gate->add_option("--dt", gate_dt, "hf: time step (default from spectral bound)");
    sc_gate->add_option("--steps", gate.steps, "hf: number of steps")->capture_default_str();
    sc_gate->add_flag("--json", gate.json, "evolve: JSON summary instead of CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help exits 0; every usage error maps to the generic error code.
        return app.exit(e) == 0 ? 0 : cli::kExitError;
    }

    if (sc_solve->parsed()) {
        solve.k_max = if_set(solve_kmax_opt, solve_kmax);
        solve.trace_path = if_set(solve_trace_opt, trace_path);
        solve.dump_state_path = if_set(solve_dump_opt, dump_path);
        return cli::cmd_solve(solve_path, solve, std::cout, std::cerr);
    }
    if (sc_oracle->parsed()) return cli::cmd_oracle(oracle_path, std::cout, std::cerr);
    if (sc_amp->parsed()) {
        amp.k_max = if_set(amp_kmax_opt, amp_kmax);
        return cli::cmd_amplify(amp, std::cout, std::cerr);
    }
    if (sc_lyap->parsed()) return cli::cmd_lyapunov(lyap, std::cout, std::cerr);
    if (sc_gate->parsed()) {
        gate.trace_path = if_set(gate_trace_opt, gate_trace);
        gate.dt = if_set(gate_dt_opt, gate_dt);
        return cli::cmd_gate(gate, std::cout, std::cerr);
    }
    return cli::kExitError;
}
