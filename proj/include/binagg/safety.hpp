#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "binagg/aggregation.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/implicates.hpp"
#include "binagg/issues.hpp"
#include "binagg/semantics.hpp"

namespace binagg {

/// Result of the majority-safety test. A constraint is safe exactly when it
/// is equivalent to a conjunction of clauses of size at most 2; then the
/// implicate list is the certificate. Otherwise the certificate is the first
/// minimally falsifying assignment with at least 3 bound issues, from which a
/// paradoxical profile can always be built.
struct SafetyVerdict {
    bool safe = true;
    int max_clause_size = 0;
    std::vector<Clause> implicates;
    std::optional<PartialAssignment> mifap;

    // The classified constraint, kept for reporting and witness construction.
    Formula constraint;
    IssueSet issues = IssueSet::numbered(1);
};

/// Decide whether the majority rule can ever turn rational voters into an
/// irrational outcome under `ic`. Tautologies and unsatisfiable constraints
/// are safe: in the first case every outcome is rational, in the second no
/// rational profile exists.
inline SafetyVerdict classify(const Formula& ic, const IssueSet& issues,
                              int limit = kDefaultIssueLimit) {
    SafetyVerdict verdict;
    verdict.constraint = ic;
    verdict.issues = issues;
    verdict.implicates = prime_implicates(ic, issues, limit);
    for (const Clause& c : verdict.implicates) {
        verdict.max_clause_size = std::max(verdict.max_clause_size, c.size());
    }
    verdict.safe = verdict.max_clause_size <= 2;
    if (!verdict.safe) {
        // Implicates come out in canonical order, so the first wide clause
        // negates to the first mifap-assignment with >= 3 bindings.
        for (const Clause& c : verdict.implicates) {
            if (c.size() >= 3) {
                verdict.mifap = PartialAssignment::negation_of(c);
                break;
            }
        }
    }
    return verdict;
}

/// Build an explicit majority paradox for an unsafe constraint and any odd
/// number of voters n >= 3. Pick the certificate assignment rho, flip it on
/// its first three bound issues in turn, extend each flip to a rational
/// ballot, and hand the three ballots out round-robin: every bound issue
/// keeps a majority agreeing with rho, so the outcome extends rho and cannot
/// be rational.
inline ParadoxWitness construct_paradox(const SafetyVerdict& verdict, int voters,
                                        int limit = kDefaultIssueLimit) {
    if (verdict.safe) throw SafeConstraintError();
    if (voters % 2 == 0) throw EvenVotersError(voters);
    if (voters < 3) {
        throw InvalidArgumentError("paradox construction needs at least 3 voters");
    }
    const IssueSet& issues = verdict.issues;
    const int m = issues.count();
    detail::check_issue_limit(m, limit);
    TruthTable table = TruthTable::of(verdict.constraint, m);
    const PartialAssignment& rho = *verdict.mifap;

    // Flipping one bound issue makes the assignment extendable again, and
    // every extension disagrees with rho there (else rho itself would extend).
    auto flipped_ballot = [&](int drop_index) {
        PartialAssignment kept;
        const auto& bindings = rho.bindings();
        for (std::size_t i = 0; i < bindings.size(); ++i) {
            if (static_cast<int>(i) != drop_index) {
                kept.bind(bindings[i].first, bindings[i].second);
            }
        }
        detail::Subcube cube(kept.domain_mask(), kept.value_mask(), m);
        auto index = cube.first_in(table);
        if (!index) throw Error("restriction of a minimal falsifying assignment lost all models");
        return Ballot::from_lex_index(*index, m);
    };

    std::vector<Ballot> base = {flipped_ballot(0), flipped_ballot(1), flipped_ballot(2)};
    std::vector<Ballot> ballots;
    ballots.reserve(voters);
    for (int i = 0; i < voters; ++i) ballots.push_back(base[i % 3]);
    Profile profile(std::move(ballots));

    Ballot outcome = majority(profile);
    Clause violated = detail::first_falsified_implicate(verdict.constraint, issues,
                                                        outcome, limit);
    return ParadoxWitness("majority", std::move(profile), verdict.constraint, issues,
                          std::move(outcome), std::move(violated), limit);
}

inline ParadoxWitness construct_paradox(const Formula& ic, const IssueSet& issues,
                                        int voters, int limit = kDefaultIssueLimit) {
    return construct_paradox(classify(ic, issues, limit), voters, limit);
}

/// Human-readable justification of a verdict.
inline std::string explain(const SafetyVerdict& verdict) {
    std::ostringstream out;
    out << "constraint: " << to_string(verdict.constraint, verdict.issues) << "\n";
    if (verdict.implicates.empty()) {
        out << "verdict: majority-safe\n"
            << "no constraint: all outcomes rational (the formula is a tautology).\n";
        return out.str();
    }
    if (verdict.implicates.size() == 1 && verdict.implicates.front().empty()) {
        out << "verdict: majority-safe\n"
            << "the constraint is unsatisfiable: no rational ballots exist, so no\n"
            << "rational profile can witness a paradox.\n";
        return out.str();
    }
    out << "verdict: " << (verdict.safe ? "majority-safe" : "majority-unsafe") << "\n"
        << "max prime implicate size: " << verdict.max_clause_size << "\n"
        << "prime implicates (" << verdict.implicates.size() << "):\n";
    for (const Clause& c : verdict.implicates) {
        out << "  " << c.to_string(verdict.issues) << "\n";
    }
    if (verdict.safe) {
        out << "every implicate is a clause of size <= 2. Two majorities each\n"
            << "rejecting one literal of a 2-clause must share a voter by the\n"
            << "pigeonhole principle, and that voter would be irrational; hence\n"
            << "no all-rational profile can push the majority outcome outside\n"
            << "the constraint.\n";
    } else {
        out << "falsifying assignment with " << verdict.mifap->size() << " bound issues: "
            << verdict.mifap->to_string(verdict.issues) << "\n"
            << "no rational ballot extends it, yet dropping any single binding\n"
            << "makes it extendable. Flipping it on three bound issues in turn\n"
            << "yields three rational ballots whose issue-wise majority restores\n"
            << "the assignment, so the majority outcome is irrational:\n";
        ParadoxWitness w = construct_paradox(verdict, 3);
        for (int i = 0; i < w.profile().voters(); ++i) {
            out << "  voter " << (i + 1) << ": " << w.profile().ballot(i).to_string() << "\n";
        }
        out << "  majority: " << w.outcome().to_string() << "\n"
            << "violated prime implicate: " << w.violated().to_string(verdict.issues) << "\n";
    }
    return out.str();
}

}  // namespace binagg
