// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "chaosqc/sat_core.hpp"
#include "oracles.hpp"

using namespace chaosqc::sat;

namespace {

const char* kExampleFormula = "p cnf 3 3\n1 -2 0\n-1 0\n2 -3 0";

Clause clause(std::set<int> pos, std::set<int> neg) { return Clause{std::move(pos), std::move(neg)}; }

}  // namespace

TEST_CASE("parse_dimacs: three-clause example") {
    const auto f = parse_dimacs(kExampleFormula);
    CHECK(f.num_vars() == 3);
    REQUIRE(f.clauses().size() == 3);
    CHECK(f.clauses()[0] == clause({1}, {2}));
    CHECK(f.clauses()[1] == clause({}, {1}));
    CHECK(f.clauses()[2] == clause({2}, {3}));
}

TEST_CASE("parse_dimacs: empty clause list and contradiction") {
    const auto empty = parse_dimacs("p cnf 2 0");
    CHECK(empty.num_vars() == 2);
    CHECK(empty.clauses().empty());

    const auto contra = parse_dimacs("p cnf 1 2\n1 0\n-1 0");
    REQUIRE(contra.clauses().size() == 2);
    CHECK(contra.clauses()[0] == clause({1}, {}));
    CHECK(contra.clauses()[1] == clause({}, {1}));
}

TEST_CASE("parse_dimacs: clause spanning lines and deduplication") {
    const auto f = parse_dimacs("c hello\np cnf 4 2\n1 1 -2\n 3 0\n-4 -4 0\n");
    REQUIRE(f.clauses().size() == 2);
    CHECK(f.clauses()[0] == clause({1, 3}, {2}));
    CHECK(f.clauses()[1] == clause({}, {4}));
}

TEST_CASE("parse_dimacs: tautological clause is kept") {
    const auto f = parse_dimacs("p cnf 2 1\n1 -1 2 0\n");
    REQUIRE(f.clauses().size() == 1);
    CHECK(f.clauses()[0].is_tautology());
    CHECK(f.clauses()[0] == clause({1, 2}, {1}));
}

TEST_CASE("parse_dimacs: errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            (void)parse_dimacs(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("1 2 0\n") == 1);                              // data before header
    CHECK(line_of("c x\n") == 2);                                // missing header
    CHECK(line_of("p cnf 2 1\np cnf 2 1\n1 0\n") == 2);          // duplicate header
    CHECK(line_of("p cnf 2 1\n\n1 3 0\n") == 3);                 // variable > n
    CHECK(line_of("p cnf 3 2\n1 -2 0\n0\n") == 3);               // clause with no literals
    CHECK(line_of("p cnf 2 1\n1 2 0\n% garbage\n") == 3);        // trailing garbage
    CHECK(line_of("p cnf 2 1\n1 x 0\n") == 2);                   // non-integer token
    CHECK(line_of("p cnf 2 1\n1\n2\n") == 2);                    // unterminated clause
    CHECK(line_of("p cnf 2 2\n1 0\n") == 2);                     // clause count mismatch
    CHECK(line_of("p dnf 2 1\n1 0\n") == 1);                     // wrong format tag
    CHECK(line_of("p cnf 0 0\n") == 1);                          // n must be positive
}

TEST_CASE("CnfFormula rejects out-of-range and empty clauses") {
    CHECK_THROWS_AS(CnfFormula(2, {clause({3}, {})}), std::invalid_argument);
    CHECK_THROWS_AS(CnfFormula(2, {clause({}, {0})}), std::invalid_argument);
    CHECK_THROWS_AS(CnfFormula(2, {clause({}, {})}), std::invalid_argument);
    CHECK_THROWS_AS(CnfFormula(0, {}), std::invalid_argument);
}

TEST_CASE("eval_formula: worked example values") {
    const auto f = parse_dimacs(kExampleFormula);
    CHECK(eval_formula(f, {0, 0, 0}) == 1);
    CHECK(eval_formula(f, {1, 0, 0}) == 0);
    CHECK(oracle::direct_eval(f, {1, 0, 0}) == false);

    const auto empty = parse_dimacs("p cnf 2 0");
    for (std::uint8_t a : {0, 1}) {
        for (std::uint8_t b : {0, 1}) CHECK(eval_formula(empty, {a, b}) == 1);
    }
    CHECK_THROWS_AS((void)eval_formula(f, {0, 0}), std::invalid_argument);
}

TEST_CASE("count_roots: worked example values and bound") {
    CHECK(count_roots(parse_dimacs(kExampleFormula)) == 1);
    CHECK(count_roots(parse_dimacs("p cnf 2 0")) == 4);
    CHECK(count_roots(parse_dimacs("p cnf 1 2\n1 0\n-1 0")) == 0);

    const auto wide = CnfFormula(25, {clause({25}, {})});
    CHECK_THROWS_AS((void)count_roots(wide), std::invalid_argument);
    CHECK(count_roots(wide, 25) == (std::uint64_t{1} << 24));
}

TEST_CASE("property: polynomial form agrees with clause evaluation") {
    std::mt19937_64 rng(0x5a7c0de);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto f = oracle::random_cnf(rng, n, 8);
        std::uint64_t sum = 0;
        const std::uint64_t total = std::uint64_t{1} << n;
        const std::uint64_t stride = n > 8 ? 7 : 1;
        for (std::uint64_t label = 0; label < total; label += stride) {
            const auto x = oracle::bits_msb_first(label, n);
            const int v = eval_formula(f, x);
            REQUIRE(v == (oracle::direct_eval(f, x) ? 1 : 0));
            REQUIRE(assignment_from_index(label, n) == x);
        }
        for (std::uint64_t label = 0; label < total; ++label) sum += eval_formula(f, assignment_from_index(label, n));
        REQUIRE(count_roots(f) == sum);
        REQUIRE(count_roots(f) == oracle::brute_roots(f));
    }
}

TEST_CASE("property: tautological clauses never constrain") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        auto base = oracle::random_cnf(rng, n, 5);
        auto clauses = base.clauses();
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        clauses.push_back(clause({k}, {k}));
        const CnfFormula with(n, clauses);
        for (std::uint64_t label = 0; label < (std::uint64_t{1} << n); ++label) {
            const auto x = assignment_from_index(label, n);
            REQUIRE(eval_formula(with, x) == eval_formula(base, x));
        }
    }
}

TEST_CASE("property: DIMACS and JSON round trips") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = oracle::random_cnf(rng, std::uniform_int_distribution<int>(1, 30)(rng), 10);
        REQUIRE(parse_dimacs(to_dimacs(f)) == f);
        REQUIRE(from_json(to_json(f)) == f);
    }
    CHECK(to_json(parse_dimacs(kExampleFormula)) ==
          R"({"n":3,"clauses":[{"pos":[1],"neg":[2]},{"pos":[],"neg":[1]},{"pos":[2],"neg":[3]}]})");
}

TEST_CASE("from_json: validation") {
    CHECK_THROWS_AS((void)from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS((void)from_json(R"({"n":2})"), std::invalid_argument);
    CHECK_THROWS_AS((void)from_json(R"({"n":2,"clauses":[{"pos":[],"neg":[]}]})"), std::invalid_argument);
    CHECK_THROWS_AS((void)from_json(R"({"n":2,"clauses":[{"pos":[3],"neg":[]}]})"), std::invalid_argument);
}
