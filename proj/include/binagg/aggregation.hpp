#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binagg/ballot.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/implicates.hpp"
#include "binagg/issues.hpp"
#include "binagg/semantics.hpp"

namespace binagg {

/// An ordered tuple of ballots, one per voter, all over the same issue set.
class Profile {
public:
    explicit Profile(std::vector<Ballot> ballots) : ballots_(std::move(ballots)) {
        if (ballots_.empty()) throw InvalidArgumentError("a profile needs at least one voter");
        for (const Ballot& b : ballots_) {
            if (b.size() != ballots_.front().size()) {
                throw DimensionError("all ballots in a profile must have the same length");
            }
        }
    }

    int voters() const { return static_cast<int>(ballots_.size()); }

    int issue_count() const { return ballots_.front().size(); }

    const Ballot& ballot(int voter) const { return ballots_.at(voter); }

    const std::vector<Ballot>& ballots() const { return ballots_; }

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.ballots_ == b.ballots_;
    }

private:
    std::vector<Ballot> ballots_;
};

/// Issue-wise majority: accept issue j iff at least (n+1)/2 of the n voters
/// do. Unique only for odd n; even profiles are rejected, and n = 1 is the
/// identity.
inline Ballot majority(const Profile& p) {
    const int n = p.voters();
    if (n % 2 == 0) throw EvenVotersError(n);
    const int quota = (n + 1) / 2;
    std::vector<std::uint8_t> bits(p.issue_count());
    for (int j = 0; j < p.issue_count(); ++j) {
        int support = 0;
        for (int i = 0; i < n; ++i) support += p.ballot(i).bit(j);
        bits[j] = support >= quota;
    }
    return Ballot(std::move(bits));
}

/// A named issue-wise aggregation procedure F : D^N -> D.
struct AggregationRule {
    std::string name;
    std::function<Ballot(const Profile&)> apply;
};

inline AggregationRule majority_rule() {
    return {"majority", [](const Profile& p) { return majority(p); }};
}

/// A rule, a profile of individually rational ballots, and a constraint the
/// aggregate outcome violates. Self-validating: construction re-checks every
/// invariant and records the violated prime implicate.
class ParadoxWitness {
public:
    ParadoxWitness(std::string rule, Profile profile, Formula constraint,
                   IssueSet issues, Ballot outcome, Clause violated,
                   int limit = kDefaultIssueLimit)
        : rule_(std::move(rule)),
          profile_(std::move(profile)),
          constraint_(std::move(constraint)),
          issues_(std::move(issues)),
          outcome_(std::move(outcome)),
          violated_(std::move(violated)) {
        for (int i = 0; i < profile_.voters(); ++i) {
            if (!eval(constraint_, profile_.ballot(i))) {
                throw InvalidArgumentError("witness invariant broken: voter " +
                                           std::to_string(i + 1) + " is irrational");
            }
        }
        if (eval(constraint_, outcome_)) {
            throw InvalidArgumentError("witness invariant broken: the outcome is rational");
        }
        if (violated_.satisfied_by(outcome_)) {
            throw InvalidArgumentError(
                "witness invariant broken: the outcome satisfies the recorded clause");
        }
        auto implicates = prime_implicates(constraint_, issues_, limit);
        if (std::find(implicates.begin(), implicates.end(), violated_) == implicates.end()) {
            throw InvalidArgumentError(
                "witness invariant broken: the recorded clause is not a prime implicate");
        }
    }

    const std::string& rule() const { return rule_; }
    const Profile& profile() const { return profile_; }
    const Formula& constraint() const { return constraint_; }
    const IssueSet& issues() const { return issues_; }
    const Ballot& outcome() const { return outcome_; }
    const Clause& violated() const { return violated_; }

private:
    std::string rule_;
    Profile profile_;
    Formula constraint_;
    IssueSet issues_;
    Ballot outcome_;
    Clause violated_;
};

namespace detail {

/// First falsified prime implicate in the canonical clause order.
inline Clause first_falsified_implicate(const Formula& ic, const IssueSet& issues,
                                        const Ballot& outcome, int limit) {
    for (const Clause& c : prime_implicates(ic, issues, limit)) {
        if (!c.satisfied_by(outcome)) return c;
    }
    throw Error("no prime implicate is falsified by an irrational outcome");
}

}  // namespace detail

/// Tests whether (rule, p, ic) is a paradox: every voter rational, outcome
/// not. Distinguishes "no paradox" from a profile that breaks the
/// all-rational precondition, which raises IrrationalVotersError.
inline std::optional<ParadoxWitness> check_paradox(const AggregationRule& rule,
                                                   const Profile& p, const Formula& ic,
                                                   const IssueSet& issues,
                                                   int limit = kDefaultIssueLimit) {
    if (p.issue_count() != issues.count()) {
        throw DimensionError("profile has " + std::to_string(p.issue_count()) +
                             " issues, issue set has " + std::to_string(issues.count()));
    }
    std::vector<int> irrational;
    for (int i = 0; i < p.voters(); ++i) {
        if (!eval(ic, p.ballot(i))) irrational.push_back(i);
    }
    if (!irrational.empty()) throw IrrationalVotersError(std::move(irrational));

    Ballot outcome = rule.apply(p);
    if (eval(ic, outcome)) return std::nullopt;
    Clause violated = detail::first_falsified_implicate(ic, issues, outcome, limit);
    return ParadoxWitness(rule.name, p, ic, issues, std::move(outcome),
                          std::move(violated), limit);
}

inline constexpr long long kDefaultProfileBudget = 10'000'000;

/// Decide collective rationality of `rule` for `ic` at exactly `voters`
/// voters by enumerating every rational profile in lexicographic order.
/// Returns the first paradox witness, or nullopt to certify the rule safe
/// for this voter count.
inline std::optional<ParadoxWitness> brute_force_cr(const AggregationRule& rule,
                                                    const Formula& ic,
                                                    const IssueSet& issues, int voters,
                                                    long long budget = kDefaultProfileBudget,
                                                    int limit = kDefaultIssueLimit) {
    if (voters < 1) throw InvalidArgumentError("voter count must be positive");
    if (budget < 1) throw InvalidArgumentError("profile budget must be positive");
    detail::check_issue_limit(issues.count(), limit);
    TruthTable table = TruthTable::of(ic, issues.count());
    std::vector<Ballot> rational = models(ic, issues, limit);
    if (rational.empty()) return std::nullopt;  // vacuously safe: no rational profiles

    const double required = std::pow(static_cast<double>(rational.size()), voters);
    if (required > static_cast<double>(budget)) {
        throw BudgetError(required, budget);
    }

    // Odometer over model indices; voter 1 is the most significant digit.
    std::vector<std::size_t> pick(voters, 0);
    while (true) {
        std::vector<Ballot> ballots;
        ballots.reserve(voters);
        for (std::size_t ix : pick) ballots.push_back(rational[ix]);
        Profile p(std::move(ballots));
        Ballot outcome = rule.apply(p);
        if (!table.bit(outcome.lex_index())) {
            Clause violated = detail::first_falsified_implicate(ic, issues, outcome, limit);
            return ParadoxWitness(rule.name, std::move(p), ic, issues,
                                  std::move(outcome), std::move(violated), limit);
        }
        int d = voters - 1;
        while (d >= 0 && pick[d] + 1 == rational.size()) pick[d--] = 0;
        if (d < 0) return std::nullopt;
        ++pick[d];
    }
}

}  // namespace binagg
