#pragma once

// Shared test helpers: independent brute-force oracles (clause enumeration,
// assignment enumeration, subset enumeration written straight from the
// definitions, with no pruning and none of the library's clause machinery),
// plus seeded random generators for formulas and profiles.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <binagg/binagg.hpp>

namespace testing_support {

using binagg::Ballot;
using binagg::Formula;
using binagg::IssueSet;

// A clause as a raw literal list: (issue, positive). Kept deliberately apart
// from binagg::Clause so oracle results do not depend on the code under test.
using RawLiteral = std::pair<int, bool>;
using RawClause = std::vector<RawLiteral>;

inline bool raw_clause_satisfied(const RawClause& c, const Ballot& b) {
    for (const auto& [issue, positive] : c) {
        if (b.bit(issue) == positive) return true;
    }
    return false;
}

inline bool raw_clause_implied(const RawClause& c, const std::vector<Ballot>& models) {
    for (const Ballot& b : models) {
        if (!raw_clause_satisfied(c, b)) return false;
    }
    return true;
}

/// Every subclause obtained by dropping exactly one literal.
inline std::vector<RawClause> drop_one(const RawClause& c) {
    std::vector<RawClause> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        RawClause smaller = c;
        smaller.erase(smaller.begin() + i);
        out.push_back(std::move(smaller));
    }
    return out;
}

/// All non-tautological clauses over m issues, the empty clause included.
inline std::vector<RawClause> all_raw_clauses(int m) {
    std::vector<RawClause> out;
    for (std::uint32_t issue_mask = 0; issue_mask < (1u << m); ++issue_mask) {
        std::vector<int> indices;
        for (int j = 0; j < m; ++j) {
            if (issue_mask >> j & 1) indices.push_back(j);
        }
        for (std::uint32_t pol = 0; pol < (1u << indices.size()); ++pol) {
            RawClause c;
            for (std::size_t i = 0; i < indices.size(); ++i) {
                c.push_back({indices[i], (pol >> i & 1) == 0});
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// Definition-chasing prime implicate oracle: a clause is prime iff it is
/// implied and every drop-one subclause is not. Quadratic and proud of it.
inline std::vector<RawClause> oracle_prime_implicates(const Formula& f,
                                                      const IssueSet& issues) {
    std::vector<Ballot> mods = binagg::models(f, issues);
    std::vector<RawClause> primes;
    for (const RawClause& c : all_raw_clauses(issues.count())) {
        if (!raw_clause_implied(c, mods)) continue;
        bool minimal = true;
        for (const RawClause& smaller : drop_one(c)) {
            minimal = minimal && !raw_clause_implied(smaller, mods);
        }
        if (minimal) primes.push_back(c);
    }
    return primes;
}

// A partial assignment as raw (issue, value) pairs.
using RawAssignment = std::vector<std::pair<int, bool>>;

inline bool raw_extends(const Ballot& b, const RawAssignment& rho) {
    for (const auto& [issue, value] : rho) {
        if (b.bit(issue) != value) return false;
    }
    return true;
}

inline bool raw_extendable(const RawAssignment& rho, const std::vector<Ballot>& models) {
    for (const Ballot& b : models) {
        if (raw_extends(b, rho)) return true;
    }
    return false;
}

/// Definition-chasing mifap oracle: unextendable, every drop-one restriction
/// extendable.
inline std::vector<RawAssignment> oracle_mifaps(const Formula& f, const IssueSet& issues) {
    std::vector<Ballot> mods = binagg::models(f, issues);
    const int m = issues.count();
    std::vector<RawAssignment> out;
    for (std::uint32_t issue_mask = 0; issue_mask < (1u << m); ++issue_mask) {
        std::vector<int> indices;
        for (int j = 0; j < m; ++j) {
            if (issue_mask >> j & 1) indices.push_back(j);
        }
        for (std::uint32_t vals = 0; vals < (1u << indices.size()); ++vals) {
            RawAssignment rho;
            for (std::size_t i = 0; i < indices.size(); ++i) {
                rho.push_back({indices[i], (vals >> i & 1) != 0});
            }
            if (raw_extendable(rho, mods)) continue;
            bool minimal = true;
            for (std::size_t i = 0; i < rho.size(); ++i) {
                RawAssignment smaller = rho;
                smaller.erase(smaller.begin() + i);
                minimal = minimal && raw_extendable(smaller, mods);
            }
            if (rho.empty()) minimal = true;  // no restrictions to check
            if (minimal) out.push_back(std::move(rho));
        }
    }
    return out;
}

/// All-subsets mi-set oracle: inconsistent, and dropping any one entry makes
/// it consistent (subsets of consistent sets stay consistent).
inline std::vector<std::vector<int>> oracle_mi_sets(const binagg::Agenda& agenda) {
    const int n = agenda.size();
    const IssueSet& base = agenda.base_variables();
    auto consistent = [&](const std::vector<int>& subset) {
        std::vector<Formula> parts;
        for (int i : subset) parts.push_back(agenda.entries()[i].formula);
        return binagg::is_satisfiable(Formula::conjunction(std::move(parts)), base);
    };
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) subset.push_back(i);
        }
        if (consistent(subset)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            std::vector<int> smaller = subset;
            smaller.erase(smaller.begin() + i);
            minimal = minimal && consistent(smaller);
        }
        if (minimal) out.push_back(std::move(subset));
    }
    return out;
}

/// Convert oracle clauses into library clauses for comparisons.
inline std::vector<binagg::Clause> to_clauses(const std::vector<RawClause>& raw) {
    std::vector<binagg::Clause> out;
    for (const RawClause& c : raw) {
        std::vector<binagg::Literal> literals;
        for (const auto& [issue, positive] : c) literals.push_back({issue, positive});
        out.push_back(binagg::Clause(std::move(literals)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<binagg::PartialAssignment> to_assignments(
    const std::vector<RawAssignment>& raw) {
    std::vector<binagg::PartialAssignment> out;
    for (const RawAssignment& rho : raw) {
        binagg::PartialAssignment p;
        for (const auto& [issue, value] : rho) p.bind(issue, value);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Seeded random formula over m issues. Leans on binary connectives; leaves
/// are mostly variables with the occasional constant.
inline Formula random_formula(std::mt19937& rng, int issue_count, int depth) {
    std::uniform_int_distribution<int> leaf_pick(0, 9);
    std::uniform_int_distribution<int> node_pick(0, 5);
    std::uniform_int_distribution<int> var_pick(0, issue_count - 1);
    if (depth == 0) {
        int kind = leaf_pick(rng);
        if (kind == 0) return Formula::constant(true);
        if (kind == 1) return Formula::constant(false);
        return Formula::var(var_pick(rng));
    }
    switch (node_pick(rng)) {
        case 0: return !random_formula(rng, issue_count, depth - 1);
        case 1:
            return random_formula(rng, issue_count, depth - 1) &
                   random_formula(rng, issue_count, depth - 1);
        case 2:
            return random_formula(rng, issue_count, depth - 1) |
                   random_formula(rng, issue_count, depth - 1);
        case 3:
            return implies(random_formula(rng, issue_count, depth - 1),
                           random_formula(rng, issue_count, depth - 1));
        case 4:
            return iff(random_formula(rng, issue_count, depth - 1),
                       random_formula(rng, issue_count, depth - 1));
        default: return random_formula(rng, issue_count, 0);
    }
}

/// Seeded random conjunction of clauses of size <= 2 (always majority-safe).
inline Formula random_two_cnf(std::mt19937& rng, int issue_count) {
    std::uniform_int_distribution<int> clause_count_pick(1, 2 * issue_count);
    std::uniform_int_distribution<int> size_pick(1, 2);
    std::uniform_int_distribution<int> var_pick(0, issue_count - 1);
    std::uniform_int_distribution<int> sign_pick(0, 1);
    std::vector<Formula> clauses;
    int count = clause_count_pick(rng);
    for (int c = 0; c < count; ++c) {
        int a = var_pick(rng);
        Formula lit_a = sign_pick(rng) ? Formula::var(a) : !Formula::var(a);
        if (size_pick(rng) == 1) {
            clauses.push_back(std::move(lit_a));
            continue;
        }
        int b = var_pick(rng);
        while (b == a) b = var_pick(rng);
        Formula lit_b = sign_pick(rng) ? Formula::var(b) : !Formula::var(b);
        clauses.push_back(std::move(lit_a) | std::move(lit_b));
    }
    return Formula::conjunction(std::move(clauses));
}

/// A materialized formula with exactly the given truth table: the
/// disjunction of one conjunction per model index.
inline Formula formula_from_truth_table(std::uint32_t table, int issue_count) {
    std::vector<Formula> minterms;
    for (std::uint32_t index = 0; index < (1u << issue_count); ++index) {
        if (!(table >> index & 1)) continue;
        Ballot b = Ballot::from_lex_index(index, issue_count);
        std::vector<Formula> lits;
        for (int j = 0; j < issue_count; ++j) {
            Formula v = Formula::var(j);
            lits.push_back(b.bit(j) ? std::move(v) : !std::move(v));
        }
        minterms.push_back(Formula::conjunction(std::move(lits)));
    }
    return Formula::disjunction(std::move(minterms));
}

/// Uniformly random rational ballots drawn from the model list.
inline binagg::Profile random_rational_profile(std::mt19937& rng,
                                               const std::vector<Ballot>& models,
                                               int voters) {
    std::uniform_int_distribution<std::size_t> pick(0, models.size() - 1);
    std::vector<Ballot> ballots;
    ballots.reserve(voters);
    for (int i = 0; i < voters; ++i) ballots.push_back(models[pick(rng)]);
    return binagg::Profile(std::move(ballots));
}

}  // namespace testing_support
