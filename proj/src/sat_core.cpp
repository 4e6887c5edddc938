// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include "chaosqc/sat_core.hpp"

#include <json.hpp>

namespace chaosqc::sat {

bool Clause::is_tautology() const {
    for (int k : positives) {
        if (negatives.contains(k)) return true;
    }
    return false;
}

CnfFormula::CnfFormula(int n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
    if (n_ < 1) throw std::invalid_argument("CnfFormula: variable count must be positive");
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
        const auto& c = clauses_[i];
        if (c.positives.empty() && c.negatives.empty()) {
            throw std::invalid_argument("CnfFormula: clause " + std::to_string(i + 1) + " has no literals");
        }
        for (const auto* s : {&c.positives, &c.negatives}) {
            for (int k : *s) {
                if (k < 1 || k > n_) {
                    throw std::invalid_argument("CnfFormula: variable " + std::to_string(k) +
                                                " out of range 1.." + std::to_string(n_));
                }
            }
        }
    }
}

Assignment assignment_from_index(std::uint64_t index, int n) {
    Assignment x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        x[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1u);
    }
    return x;
}

int eval_formula(const CnfFormula& f, const Assignment& x) {
    if (x.size() != static_cast<std::size_t>(f.num_vars())) {
        throw std::invalid_argument("eval_formula: assignment length " + std::to_string(x.size()) +
                                    " != n = " + std::to_string(f.num_vars()));
    }
    int value = 1;
    for (const auto& c : f.clauses()) {
        int inner = 1;
        for (int a : c.positives) inner &= 1 ^ (x[static_cast<std::size_t>(a - 1)] & 1);
        for (int b : c.negatives) inner &= x[static_cast<std::size_t>(b - 1)] & 1;
        value &= 1 ^ inner;
    }
    return value;
}

CompiledFormula::CompiledFormula(const CnfFormula& f) : n_(f.num_vars()) {
    if (n_ > 63) throw std::invalid_argument("CompiledFormula: n > 63 not supported");
    masks_.reserve(f.clauses().size());
    const auto bit = [this](int k) { return std::uint64_t{1} << (n_ - k); };
    for (const auto& c : f.clauses()) {
        Masks m{0, 0};
        for (int a : c.positives) m.pos |= bit(a);
        for (int b : c.negatives) m.neg |= bit(b);
        masks_.push_back(m);
    }
}

std::uint64_t count_roots(const CnfFormula& f, int bound) {
    if (f.num_vars() > bound) {
        throw std::invalid_argument("count_roots: n = " + std::to_string(f.num_vars()) +
                                    " exceeds exhaustive bound " + std::to_string(bound));
    }
    const CompiledFormula cf(f);
    const std::uint64_t total = std::uint64_t{1} << f.num_vars();
    std::uint64_t r = 0;
    for (std::uint64_t label = 0; label < total; ++label) r += cf.satisfied(label) ? 1 : 0;
    return r;
}

std::string to_json(const CnfFormula& f) {
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& c : f.clauses()) {
        nlohmann::ordered_json jc;
        jc["pos"] = std::vector<int>(c.positives.begin(), c.positives.end());
        jc["neg"] = std::vector<int>(c.negatives.begin(), c.negatives.end());
        clauses.push_back(std::move(jc));
    }
    nlohmann::ordered_json j;
    j["n"] = f.num_vars();
    j["clauses"] = std::move(clauses);
    return j.dump();
}

CnfFormula from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("from_json: ") + e.what());
    }
    try {
        std::vector<Clause> clauses;
        for (const auto& jc : j.at("clauses")) {
            Clause c;
            for (int k : jc.at("pos").get<std::vector<int>>()) c.positives.insert(k);
            for (int k : jc.at("neg").get<std::vector<int>>()) c.negatives.insert(k);
            clauses.push_back(std::move(c));
        }
        return CnfFormula(j.at("n").get<int>(), std::move(clauses));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("from_json: ") + e.what());
    }
}

}  // namespace chaosqc::sat
