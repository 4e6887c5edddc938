// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "chaosqc/sat_core.hpp"

namespace chaosqc::sat {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::optional<long long> to_integer(std::string_view tok) {
    long long v = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    std::optional<int> n;
    long long declared_clauses = 0;
    std::size_t header_line = 0;

    std::vector<Clause> clauses;
    Clause current;
    bool open = false;
    std::size_t clause_start = 0;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0].front() == 'c') continue;
        if (toks[0] == "p") {
            if (n) {
                throw ParseError(lineno, "duplicate problem line (first at line " + std::to_string(header_line) + ")");
            }
            if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(lineno, "malformed problem line, expected 'p cnf <n> <clauses>'");
            const auto nv = to_integer(toks[2]);
            const auto nc = to_integer(toks[3]);
            if (!nv || *nv < 1 || *nv > 1'000'000) throw ParseError(lineno, "invalid variable count '" + std::string(toks[2]) + "'");
            if (!nc || *nc < 0) throw ParseError(lineno, "invalid clause count '" + std::string(toks[3]) + "'");
            n = static_cast<int>(*nv);
            declared_clauses = *nc;
            header_line = lineno;
            continue;
        }
        if (!n) throw ParseError(lineno, "clause data before 'p cnf' problem line");

        for (const auto tok : toks) {
            const auto lit = to_integer(tok);
            if (!lit) throw ParseError(lineno, "unexpected token '" + std::string(tok) + "'");
            if (*lit == 0) {
                if (!open) throw ParseError(lineno, "clause with no literals");
                clauses.push_back(std::move(current));
                current = Clause{};
                open = false;
                continue;
            }
            const long long var = std::llabs(*lit);
            if (var > *n) {
                throw ParseError(lineno, "variable " + std::to_string(var) + " exceeds declared n = " + std::to_string(*n));
            }
            if (!open) clause_start = lineno;
            open = true;
            if (*lit > 0) {
                current.positives.insert(static_cast<int>(var));
            } else {
                current.negatives.insert(static_cast<int>(var));
            }
        }
    }

    if (!n) throw ParseError(lineno + 1, "missing 'p cnf' problem line");
    if (open) throw ParseError(clause_start, "clause not terminated by 0");
    if (static_cast<long long>(clauses.size()) != declared_clauses) {
        throw ParseError(lineno, "problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                                     std::to_string(clauses.size()));
    }
    return CnfFormula(*n, std::move(clauses));
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
    for (const auto& c : f.clauses()) {
        for (int a : c.positives) out << a << ' ';
        for (int b : c.negatives) out << -b << ' ';
        out << "0\n";
    }
    return out.str();
}

}  // namespace chaosqc::sat
