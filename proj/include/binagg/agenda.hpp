#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binagg/aggregation.hpp"
#include "binagg/encoding.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"
#include "binagg/semantics.hpp"

namespace binagg {

struct AgendaEntry {
    std::string name;
    Formula formula;
};

inline constexpr int kMaxAgendaEntries = 16;

/// A set of named formulas over a base variable set, closed under
/// complementation: every entry has its complement in the agenda, and no
/// entry is doubly negated. Generated complements are named not_<name>.
class Agenda {
public:
    static Agenda close(IssueSet base_variables, std::vector<AgendaEntry> given) {
        if (given.empty()) throw InvalidArgumentError("an agenda needs at least one entry");
        for (const AgendaEntry& e : given) {
            if (!is_identifier(e.name)) {
                throw InvalidArgumentError("agenda entry name '" + e.name +
                                           "' is not a valid identifier");
            }
            if (is_double_negation(e.formula)) {
                throw InvalidArgumentError("agenda entry '" + e.name +
                                           "' is doubly negated");
            }
            if (e.formula.min_issue_count() > base_variables.count()) {
                throw DimensionError("agenda entry '" + e.name +
                                     "' refers to variables outside the base set");
            }
        }

        Agenda agenda(std::move(base_variables));
        auto present = [&](const Formula& f) {
            for (const AgendaEntry& e : agenda.entries_) {
                if (e.formula == f) return true;
            }
            return false;
        };
        for (std::size_t i = 0; i < given.size(); ++i) {
            if (present(given[i].formula)) {
                throw InvalidArgumentError("duplicate agenda entry '" + given[i].name + "'");
            }
            agenda.entries_.push_back(given[i]);
            Formula complement = complement_formula(given[i].formula);
            bool later = false;
            for (std::size_t j = i + 1; j < given.size(); ++j) {
                later = later || given[j].formula == complement;
            }
            if (!later && !present(complement)) {
                agenda.entries_.push_back({"not_" + given[i].name, std::move(complement)});
            }
        }
        if (static_cast<int>(agenda.entries_.size()) > kMaxAgendaEntries) {
            throw InvalidArgumentError(
                "agenda too large: " + std::to_string(agenda.entries_.size()) +
                " entries after closure (max " + std::to_string(kMaxAgendaEntries) + ")");
        }

        std::vector<std::string> seen;
        for (const AgendaEntry& e : agenda.entries_) {
            for (const auto& name : seen) {
                if (name == e.name) {
                    throw InvalidArgumentError("duplicate agenda entry name '" + e.name + "'");
                }
            }
            seen.push_back(e.name);
        }
        for (std::size_t i = 0; i < agenda.entries_.size(); ++i) {
            Formula complement = complement_formula(agenda.entries_[i].formula);
            int mate = -1;
            for (std::size_t j = 0; j < agenda.entries_.size(); ++j) {
                if (agenda.entries_[j].formula == complement) mate = static_cast<int>(j);
            }
            if (mate < 0) throw Error("agenda closure failed to pair an entry");
            agenda.complement_.push_back(mate);
        }
        return agenda;
    }

    const IssueSet& base_variables() const { return base_; }

    const std::vector<AgendaEntry>& entries() const { return entries_; }

    int size() const { return static_cast<int>(entries_.size()); }

    int complement_of(int index) const { return complement_.at(index); }

    /// Entries whose formula is not itself a negation.
    bool is_positive(int index) const {
        return entries_.at(index).formula.kind() != Connective::Not;
    }

    std::vector<int> positive_entries() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i) {
            if (is_positive(i)) out.push_back(i);
        }
        return out;
    }

private:
    explicit Agenda(IssueSet base) : base_(std::move(base)) {}

    static bool is_double_negation(const Formula& f) {
        return f.kind() == Connective::Not && f.child(0).kind() == Connective::Not;
    }

    static Formula complement_formula(const Formula& f) {
        if (f.kind() == Connective::Not) return f.child(0);
        return !Formula(f);
    }

    IssueSet base_;
    std::vector<AgendaEntry> entries_;
    std::vector<int> complement_;
};

/// All minimally inconsistent subsets of the agenda, as sorted entry index
/// lists in (size, lexicographic) order. A subset is inconsistent when the
/// conjunction of its formulas has no model over the base variables; found
/// sets prune their supersets, so every survivor is minimal.
inline std::vector<std::vector<int>> mi_sets(const Agenda& a,
                                             int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(a.base_variables().count(), limit);
    const int n = a.size();
    std::vector<TruthTable> tables;
    tables.reserve(n);
    for (const AgendaEntry& e : a.entries()) {
        tables.push_back(TruthTable::of(e.formula, a.base_variables().count()));
    }

    std::vector<std::vector<int>> found;
    auto contains_found = [&](const std::vector<int>& combo) {
        for (const auto& s : found) {
            std::size_t hit = 0;
            for (int x : combo) {
                if (hit < s.size() && s[hit] == x) ++hit;
            }
            if (hit == s.size()) return true;
        }
        return false;
    };
    for (int k = 1; k <= n; ++k) {
        detail::for_each_combination(n, k, [&](const std::vector<int>& combo) {
            if (contains_found(combo)) return;
            TruthTable joint(a.base_variables().count(), true);
            for (int x : combo) joint.and_with(tables[x]);
            if (joint.none()) found.push_back(combo);
        });
    }
    return found;
}

/// Issues p_<entry> for every agenda entry, constrained so that models are
/// exactly the complete and consistent judgment sets: one clause per
/// complementary pair (completeness) and one negated conjunction per mi-set
/// (consistency).
inline Encoding encode_agenda(const Agenda& a, int limit = kDefaultIssueLimit) {
    std::vector<std::string> names;
    names.reserve(a.size());
    for (const AgendaEntry& e : a.entries()) names.push_back("p_" + e.name);
    IssueSet issues(std::move(names));

    std::vector<Formula> parts;
    for (int i = 0; i < a.size(); ++i) {
        int j = a.complement_of(i);
        if (i < j) parts.push_back(Formula::var(i) | Formula::var(j));
    }
    for (const auto& s : mi_sets(a, limit)) {
        std::vector<Formula> conj;
        conj.reserve(s.size());
        for (int x : s) conj.push_back(Formula::var(x));
        parts.push_back(!Formula::conjunction(std::move(conj)));
    }
    return {std::move(issues), Formula::conjunction(std::move(parts))};
}

/// Expand rows of acceptance bits over the positive entries into full
/// ballots: each complement gets the opposite bit. This mirrors the compact
/// way judgment profiles are usually written down.
inline Profile expand_judgment_profile(const Agenda& a,
                                       const std::vector<std::vector<int>>& rows) {
    std::vector<int> positives = a.positive_entries();
    std::vector<Ballot> ballots;
    ballots.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != positives.size()) {
            throw DimensionError("judgment row has " + std::to_string(row.size()) +
                                 " bits, agenda has " + std::to_string(positives.size()) +
                                 " positive entries");
        }
        std::vector<std::uint8_t> bits(a.size(), 0);
        for (std::size_t i = 0; i < positives.size(); ++i) {
            if (row[i] != 0 && row[i] != 1) {
                throw InvalidArgumentError("judgment bits must be 0 or 1");
            }
            bits[positives[i]] = static_cast<std::uint8_t>(row[i]);
            bits[a.complement_of(positives[i])] = static_cast<std::uint8_t>(1 - row[i]);
        }
        ballots.emplace_back(std::move(bits));
    }
    return Profile(std::move(ballots));
}

}  // namespace binagg
