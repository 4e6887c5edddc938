// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/gate_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chaosqc/detail/numfmt.hpp"

namespace chaosqc::hf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("field '" + field + "': " + why);
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

double real_of(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

Complex complex_of(const json& j, const std::string& field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    fail(field, "expected a number or an [re, im] pair");
}

Eigen::VectorXcd complex_vector(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = complex_of(j[k], field);
    return v;
}

Eigen::VectorXd real_vector(const json& j, const std::string& field, std::size_t expected) {
    if (!j.is_array() || j.size() != expected) fail(field, "expected an array of length " + std::to_string(expected));
    Eigen::VectorXd v(static_cast<Eigen::Index>(expected));
    for (std::size_t k = 0; k < expected; ++k) v(static_cast<Eigen::Index>(k)) = real_of(j[k], field);
    return v;
}

std::vector<Eigen::VectorXcd> vector_list(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "expected a non-empty array of vectors");
    std::vector<Eigen::VectorXcd> out;
    for (const auto& jv : j) out.push_back(complex_vector(jv, field));
    return out;
}

const json& required(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) fail(key, "missing");
    return j.at(key);
}

}  // namespace

GateRun parse_gate_run(std::string_view json_text) {
    const json j = parse(json_text);
    GateRun run;

    const auto& ja = required(j, "A");
    if (!ja.is_array() || ja.size() != 2) fail("A", "expected a 2x2 matrix");
    for (int r = 0; r < 2; ++r) {
        const auto& row = ja[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 2) fail("A", "expected a 2x2 matrix");
        for (int c = 0; c < 2; ++c) run.spec.A(r, c) = complex_of(row[static_cast<std::size_t>(c)], "A");
    }
    if (j.contains("g")) run.spec.g = real_of(j.at("g"), "g");
    if (j.contains("b_form")) {
        if (!j.at("b_form").is_string()) fail("b_form", "expected a string");
        try {
            run.spec.b_form = builtin_b_form(j.at("b_form").get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail("b_form", e.what());
        }
    }
    const auto phi = complex_vector(required(j, "phi0"), "phi0");
    if (phi.size() != 2) fail("phi0", "expected two components");
    run.phi0 = Spinor{phi(0), phi(1)};
    run.T = real_of(required(j, "T"), "T");
    if (j.contains("dt")) run.dt = real_of(j.at("dt"), "dt");
    if (j.contains("every")) {
        if (!j.at("every").is_number_integer() || j.at("every").get<long long>() < 1) fail("every", "expected a positive integer");
        run.every = j.at("every").get<std::size_t>();
    }
    try {
        run.spec.validate();
    } catch (const std::invalid_argument& e) {
        fail("A", e.what());
    }
    return run;
}

std::vector<Eigen::VectorXcd> parse_vector_list(std::string_view json_text, const char* key) {
    const json j = parse(json_text);
    return vector_list(required(j, key), key);
}

GridOrbitalSet parse_orbital_set(std::string_view json_text) {
    const json j = parse(json_text);
    auto orbitals = vector_list(required(j, "orbitals"), "orbitals");
    const auto d = static_cast<std::size_t>(orbitals.front().size());
    const double h = real_of(required(j, "spacing"), "spacing");
    const bool periodic = j.contains("periodic") && j.at("periodic").is_boolean() && j.at("periodic").get<bool>();
    const auto n = orbitals.size();

    GridOrbitalSet s = GridOrbitalSet::uniform(d, h, periodic, std::move(orbitals));
    if (j.contains("weights")) s.weights = real_vector(j.at("weights"), "weights", d);
    if (j.contains("v_ext")) s.v_ext = real_vector(j.at("v_ext"), "v_ext", d);
    if (j.contains("masses")) {
        const auto m = real_vector(j.at("masses"), "masses", n);
        s.masses.assign(m.data(), m.data() + m.size());
    }
    if (j.contains("V")) {
        const auto& jv = j.at("V");
        if (!jv.is_array() || jv.size() != d) fail("V", "expected a d x d matrix");
        for (std::size_t r = 0; r < d; ++r) {
            s.V.row(static_cast<Eigen::Index>(r)) = real_vector(jv[r], "V", d).transpose();
        }
    }
    try {
        validate(s);
    } catch (const std::invalid_argument& e) {
        fail("orbitals", e.what());
    }
    return s;
}

void write_spinor_trace_csv(std::ostream& out, const std::vector<SpinorSample>& samples) {
    using detail::repr;
    out << "t,re0,im0,re1,im1,norm\n";
    for (const auto& s : samples) {
        out << repr(s.t) << ',' << repr(s.phi.c0.real()) << ',' << repr(s.phi.c0.imag()) << ',' << repr(s.phi.c1.real())
            << ',' << repr(s.phi.c1.imag()) << ',' << repr(s.norm) << '\n';
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace chaosqc::hf
