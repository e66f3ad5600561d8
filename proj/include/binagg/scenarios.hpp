#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binagg/aggregation.hpp"
#include "binagg/agenda.hpp"
#include "binagg/encoding.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"
#include "binagg/preferences.hpp"

namespace binagg {

/// Party-contest constraint: one issue per policy question plus a party
/// issue A that must be accepted exactly when a majority of the policy
/// issues are. For three issues named E, S, F this is
/// A <-> (E & S | E & F | S & F).
inline Encoding encode_ostrogorski(int issue_count,
                                   std::vector<std::string> names = {}) {
    if (issue_count < 3 || issue_count % 2 == 0) {
        throw InvalidArgumentError(
            "party contests need an odd number of policy issues (>= 3), got " +
            std::to_string(issue_count));
    }
    if (names.empty()) {
        if (issue_count == 3) {
            names = {"E", "S", "F"};
        } else {
            for (int i = 1; i <= issue_count; ++i) names.push_back("i" + std::to_string(i));
        }
    }
    if (static_cast<int>(names.size()) != issue_count) {
        throw InvalidArgumentError("expected " + std::to_string(issue_count) +
                                   " policy issue names, got " +
                                   std::to_string(names.size()));
    }
    names.push_back("A");
    IssueSet issues(std::move(names));

    const int quota = (issue_count + 1) / 2;
    std::vector<Formula> alternatives;
    detail::for_each_combination(issue_count, quota, [&](const std::vector<int>& combo) {
        std::vector<Formula> conj;
        conj.reserve(combo.size());
        for (int j : combo) conj.push_back(Formula::var(j));
        alternatives.push_back(Formula::conjunction(std::move(conj)));
    });
    Formula constraint =
        iff(Formula::var(issue_count), Formula::disjunction(std::move(alternatives)));
    return {std::move(issues), std::move(constraint)};
}

/// The constraint satisfied by exactly the ballots occurring in the profile:
/// the disjunction, over distinct ballots, of the conjunction fixing every
/// issue to that ballot's bit. Any profile whose majority outcome differs
/// from all submitted ballots becomes a paradox under this constraint.
inline Formula ballot_disjunction_constraint(const Profile& p) {
    std::vector<Ballot> distinct;
    for (const Ballot& b : p.ballots()) {
        bool seen = false;
        for (const Ballot& d : distinct) seen = seen || d == b;
        if (!seen) distinct.push_back(b);
    }
    std::vector<Formula> parts;
    parts.reserve(distinct.size());
    for (const Ballot& b : distinct) {
        std::vector<Formula> conj;
        conj.reserve(b.size());
        for (int j = 0; j < b.size(); ++j) {
            Formula v = Formula::var(j);
            conj.push_back(b.bit(j) ? std::move(v) : !std::move(v));
        }
        parts.push_back(Formula::conjunction(std::move(conj)));
    }
    return Formula::disjunction(std::move(parts));
}

/// A named instance: issues, constraint, the classic profile, and which
/// columns the usual presentation of its table shows.
struct Scenario {
    std::string name;
    std::string title;
    IssueSet issues;
    Formula constraint;
    Profile profile;
    std::vector<int> display_columns;  // empty means all
    std::string note;
};

inline std::vector<std::string> builtin_scenario_names() {
    return {"condorcet",          "discursive", "ostrogorski",
            "ostrogorski-strict", "divided-government", "mep"};
}

namespace detail {

inline Scenario condorcet_scenario() {
    AlternativeSet alts({"T", "O", "S"});
    Encoding enc = encode_preferences(alts, OrderKind::Linear);
    // Rankings written least-preferred first: T<O<S, S<T<O, O<S<T.
    Profile profile({ballot_from_ranking(alts, {0, 1, 2}),
                     ballot_from_ranking(alts, {2, 0, 1}),
                     ballot_from_ranking(alts, {1, 2, 0})});
    return {"condorcet",
            "Condorcet's cycle: pairwise majority on three alternatives",
            std::move(enc.issues),
            std::move(enc.constraint),
            std::move(profile),
            {pair_issue_index(alts, 0, 1), pair_issue_index(alts, 1, 2),
             pair_issue_index(alts, 0, 2)},
            "p_xy reads 'x before y'; alternatives T, O, S"};
}

inline Scenario discursive_scenario() {
    IssueSet base({"a", "b"});
    Formula va = Formula::var(0), vb = Formula::var(1);
    Agenda agenda = Agenda::close(base, {{"alpha", va},
                                         {"beta", vb},
                                         {"alpha_and_beta", va & vb}});
    Encoding enc = encode_agenda(agenda);
    Profile profile = expand_judgment_profile(agenda, {{1, 1, 1}, {0, 1, 0}, {1, 0, 0}});
    std::vector<int> display;
    for (int i : agenda.positive_entries()) display.push_back(i);
    return {"discursive",
            "Discursive dilemma: judging two premises and their conjunction",
            std::move(enc.issues),
            std::move(enc.constraint),
            std::move(profile),
            std::move(display),
            "each judge accepts alpha_and_beta exactly when accepting both parts"};
}

inline Scenario ostrogorski_scenario(bool strict) {
    Encoding enc = encode_ostrogorski(3);
    if (strict) {
        Profile profile({Ballot{1, 0, 0, 0}, Ballot{0, 1, 0, 0}, Ballot{0, 0, 1, 0},
                         Ballot{1, 1, 1, 1}, Ballot{1, 1, 1, 1}});
        return {"ostrogorski-strict",
                "Ostrogorski paradox, strict form: the losing party wins every issue",
                std::move(enc.issues),
                std::move(enc.constraint),
                std::move(profile),
                {},
                "A = support for the first party; E, S, F = agreement per issue"};
    }
    Profile profile({Ballot{1, 0, 0, 0}, Ballot{0, 0, 1, 0}, Ballot{1, 0, 1, 1}});
    return {"ostrogorski",
            "Ostrogorski paradox: party choice follows the issue majority",
            std::move(enc.issues),
            std::move(enc.constraint),
            std::move(profile),
            {},
            "A = support for the first party; E, S, F = agreement per issue"};
}

inline Scenario divided_government_scenario() {
    IssueSet issues({"H", "S", "G"});
    Formula constraint =
        !(Formula::var(0) & !Formula::var(1) & !Formula::var(2));
    std::vector<Ballot> ballots;
    auto repeat = [&](Ballot b, int copies) {
        for (int i = 0; i < copies; ++i) ballots.push_back(b);
    };
    repeat(Ballot{0, 0, 0}, 3);
    repeat(Ballot{0, 0, 1}, 1);
    repeat(Ballot{0, 1, 0}, 1);
    repeat(Ballot{0, 1, 1}, 1);
    repeat(Ballot{1, 0, 1}, 3);
    repeat(Ballot{1, 1, 0}, 3);
    repeat(Ballot{1, 1, 1}, 1);
    return {"divided-government",
            "Divided government: a Republican House needs Republican support elsewhere",
            std::move(issues),
            std::move(constraint),
            Profile(std::move(ballots)),
            {},
            "bits: 1 = R, 0 = D; offices H(ouse), S(enate), G(overnor)"};
}

inline Scenario mep_scenario() {
    IssueSet issues({"A", "B", "C"});
    Formula constraint =
        !(Formula::var(0) & Formula::var(1) & Formula::var(2));
    Profile profile({Ballot{1, 0, 1}, Ballot{0, 1, 1}, Ballot{1, 1, 0}});
    return {"mep",
            "Multiple election paradox: issue-wise majority elects a ballot nobody cast",
            std::move(issues),
            std::move(constraint),
            std::move(profile),
            {},
            "budget constraint: not all three issues can be funded"};
}

}  // namespace detail

inline Scenario builtin_scenario(const std::string& name) {
    if (name == "condorcet") return detail::condorcet_scenario();
    if (name == "discursive") return detail::discursive_scenario();
    if (name == "ostrogorski") return detail::ostrogorski_scenario(false);
    if (name == "ostrogorski-strict") return detail::ostrogorski_scenario(true);
    if (name == "divided-government") return detail::divided_government_scenario();
    if (name == "mep") return detail::mep_scenario();
    std::string known;
    for (const auto& n : builtin_scenario_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw UnknownScenarioError(name, known);
}

}  // namespace binagg
