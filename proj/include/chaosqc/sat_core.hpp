// Copyright 2026 The chaosqc Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sat_core.hpp
 * @brief SAT instances in product-of-sums form and their Boolean polynomial.
 *
 * A clause is stored as a pair of index sets (positives, negatives). The
 * polynomial form of a formula over GF(2) is
 *
 *     f(x) = prod_i ( 1 + prod_{a in S_i} (1 + x_a) * prod_{b in T_i} x_b )
 *
 * where the inner product is 1 exactly when clause i is violated, so f(x)=1
 * iff every clause is satisfied. Variable indices are 1-based.
 */

#pragma once

#include <cstdint>
#include <istream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chaosqc::sat {

/// Largest n accepted by count_roots unless the caller raises it.
inline constexpr int kDefaultExhaustiveBound = 24;

struct Clause {
    std::set<int> positives;  ///< S_i: variables appearing as plain literals
    std::set<int> negatives;  ///< T_i: variables appearing complemented

    bool operator==(const Clause&) const = default;

    [[nodiscard]] bool is_tautology() const;
};

/**
 * CNF formula over variables 1..n.
 *
 * Construction validates index ranges and rejects clauses with no literals.
 * Tautological clauses (k in both sets) are kept verbatim.
 */
class CnfFormula {
public:
    CnfFormula(int n, std::vector<Clause> clauses);

    [[nodiscard]] int num_vars() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    bool operator==(const CnfFormula&) const = default;

private:
    int n_;
    std::vector<Clause> clauses_;
};

/// Bits x_1..x_n stored at positions 0..n-1.
using Assignment = std::vector<std::uint8_t>;

/// Assignment decoded from an integer label with x_1 as the most significant bit.
[[nodiscard]] Assignment assignment_from_index(std::uint64_t index, int n);

/// Thrown for malformed DIMACS input; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[nodiscard]] CnfFormula parse_dimacs(std::istream& in);
[[nodiscard]] CnfFormula parse_dimacs(std::string_view text);
[[nodiscard]] CnfFormula read_dimacs_file(const std::string& path);

/// Canonical DIMACS rendering: positives ascending, then negatives ascending.
[[nodiscard]] std::string to_dimacs(const CnfFormula& f);

/// {"n":..., "clauses":[{"pos":[...],"neg":[...]}]}
[[nodiscard]] std::string to_json(const CnfFormula& f);
[[nodiscard]] CnfFormula from_json(std::string_view text);

/// Value of the mod-2 polynomial at x. Throws std::invalid_argument on length mismatch.
[[nodiscard]] int eval_formula(const CnfFormula& f, const Assignment& x);

/**
 * Exhaustive count of satisfying assignments.
 *
 * Throws std::invalid_argument if n exceeds `bound`.
 */
[[nodiscard]] std::uint64_t count_roots(const CnfFormula& f, int bound = kDefaultExhaustiveBound);

/**
 * Clause data compiled to bit masks over the integer labels used by the
 * state-vector simulator (x_1 is the most significant of n bits).
 * Only valid for n <= 63.
 */
class CompiledFormula {
public:
    explicit CompiledFormula(const CnfFormula& f);

    [[nodiscard]] int num_vars() const noexcept { return n_; }

    /// f(x) for the assignment encoded by `label`.
    [[nodiscard]] bool satisfied(std::uint64_t label) const noexcept {
        for (const auto& c : masks_) {
            // Violated iff every positive literal is 0 and every negative is 1.
            if ((label & c.pos) == 0 && (label & c.neg) == c.neg) return false;
        }
        return true;
    }

private:
    struct Masks {
        std::uint64_t pos;
        std::uint64_t neg;
    };
    int n_;
    std::vector<Masks> masks_;
};

}  // namespace chaosqc::sat
