#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binagg/ballot.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"
#include "binagg/semantics.hpp"

namespace binagg {

/// One literal of a clause.
struct Literal {
    int issue;
    bool positive;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.issue == b.issue && a.positive == b.positive;
    }
    // Positive before negative on the same issue.
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.issue != b.issue) return a.issue < b.issue;
        return a.positive && !b.positive;
    }
};

/// A disjunction of literals with set semantics. A clause mentioning an issue
/// with both polarities would be a tautology and is rejected outright; the
/// empty clause is falsum. Clauses order by size, then by literal sequence.
class Clause {
public:
    Clause() = default;

    explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
        std::sort(literals_.begin(), literals_.end());
        literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
        for (std::size_t i = 1; i < literals_.size(); ++i) {
            if (literals_[i].issue == literals_[i - 1].issue) {
                throw InvalidArgumentError("tautological clause: issue index " +
                                           std::to_string(literals_[i].issue) +
                                           " occurs with both polarities");
            }
        }
    }

    int size() const { return static_cast<int>(literals_.size()); }

    bool empty() const { return literals_.empty(); }

    const std::vector<Literal>& literals() const { return literals_; }

    bool satisfied_by(const Ballot& b) const {
        for (const Literal& l : literals_) {
            if (b.bit(l.issue) == l.positive) return true;
        }
        return false;
    }

    /// Literal-set inclusion (both sides are sorted).
    bool subset_of(const Clause& other) const {
        auto it = other.literals_.begin();
        for (const Literal& l : literals_) {
            while (it != other.literals_.end() && *it < l) ++it;
            if (it == other.literals_.end() || !(*it == l)) return false;
        }
        return true;
    }

    Formula to_formula() const {
        std::vector<Formula> parts;
        parts.reserve(literals_.size());
        for (const Literal& l : literals_) {
            Formula v = Formula::var(l.issue);
            parts.push_back(l.positive ? std::move(v) : !std::move(v));
        }
        return Formula::disjunction(std::move(parts));
    }

    std::string to_string(const IssueSet& issues) const {
        if (literals_.empty()) return "FALSE";
        std::string s;
        for (std::size_t i = 0; i < literals_.size(); ++i) {
            if (i > 0) s += " | ";
            if (!literals_[i].positive) s += '~';
            s += issues.name(literals_[i].issue);
        }
        return s;
    }

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.literals_ == b.literals_;
    }
    friend bool operator<(const Clause& a, const Clause& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.literals_.begin(), a.literals_.end(),
                                            b.literals_.begin(), b.literals_.end());
    }

private:
    std::vector<Literal> literals_;
};

/// A value for some of the issues. Orders by domain size, then by the
/// (issue, value) binding sequence with 0 before 1 — the exact mirror image
/// of the clause order under negation.
class PartialAssignment {
public:
    PartialAssignment() = default;

    void bind(int issue, bool value) {
        auto pos = std::lower_bound(
            bindings_.begin(), bindings_.end(), issue,
            [](const auto& binding, int i) { return binding.first < i; });
        if (pos != bindings_.end() && pos->first == issue) {
            throw InvalidArgumentError("issue index " + std::to_string(issue) +
                                       " is already bound");
        }
        bindings_.insert(pos, {issue, value});
    }

    int size() const { return static_cast<int>(bindings_.size()); }

    bool empty() const { return bindings_.empty(); }

    /// (issue, value) pairs in ascending issue order.
    const std::vector<std::pair<int, bool>>& bindings() const { return bindings_; }

    std::optional<bool> value_of(int issue) const {
        for (const auto& [i, v] : bindings_) {
            if (i == issue) return v;
        }
        return std::nullopt;
    }

    bool extends(const PartialAssignment& other) const {
        for (const auto& [i, v] : other.bindings_) {
            auto mine = value_of(i);
            if (!mine || *mine != v) return false;
        }
        return true;
    }

    /// True iff the total assignment b agrees with every binding.
    bool consistent_with(const Ballot& b) const {
        for (const auto& [i, v] : bindings_) {
            if (b.bit(i) != v) return false;
        }
        return true;
    }

    std::uint32_t domain_mask() const {
        std::uint32_t m = 0;
        for (const auto& [i, v] : bindings_) m |= std::uint32_t{1} << i;
        return m;
    }

    std::uint32_t value_mask() const {
        std::uint32_t m = 0;
        for (const auto& [i, v] : bindings_) {
            if (v) m |= std::uint32_t{1} << i;
        }
        return m;
    }

    /// The clause falsified by exactly the assignments extending this one.
    Clause negated_clause() const {
        std::vector<Literal> literals;
        literals.reserve(bindings_.size());
        for (const auto& [i, v] : bindings_) literals.push_back({i, !v});
        return Clause(std::move(literals));
    }

    static PartialAssignment negation_of(const Clause& c) {
        PartialAssignment p;
        for (const Literal& l : c.literals()) p.bind(l.issue, !l.positive);
        return p;
    }

    std::string to_string(const IssueSet& issues) const {
        std::string s;
        for (std::size_t i = 0; i < bindings_.size(); ++i) {
            if (i > 0) s += ' ';
            s += issues.name(bindings_[i].first) + "=" + (bindings_[i].second ? "1" : "0");
        }
        return s;
    }

    friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
        return a.bindings_ == b.bindings_;
    }
    friend bool operator<(const PartialAssignment& a, const PartialAssignment& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bindings_ < b.bindings_;
    }

private:
    std::vector<std::pair<int, bool>> bindings_;
};

namespace detail {

/// Calls fn for each k-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
        fn(combo);
        int i = k - 1;
        while (i >= 0 && combo[i] == m - k + i) --i;
        if (i < 0) return;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
}

}  // namespace detail

/// All prime implicates of f: the minimal clauses entailed by f. Their
/// conjunction is equivalent to f. A tautology has none; an unsatisfiable
/// formula has exactly the empty clause. Candidates are enumerated by
/// increasing size, so any entailed survivor of the superset filter is prime.
inline std::vector<Clause> prime_implicates(const Formula& f, const IssueSet& issues,
                                            int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    const int m = issues.count();
    TruthTable table = TruthTable::of(f, m);
    if (table.all()) return {};
    if (table.none()) return {Clause()};

    std::vector<Clause> found;
    for (int k = 1; k <= m; ++k) {
        detail::for_each_combination(m, k, [&](const std::vector<int>& combo) {
            for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << k); ++pattern) {
                std::vector<Literal> literals(k);
                std::uint32_t domain = 0, falsifying = 0;
                for (int i = 0; i < k; ++i) {
                    // Bit 0 of the pattern drives the last index, so patterns
                    // run in the clause order (positive first).
                    bool positive = !(pattern >> (k - 1 - i) & 1);
                    literals[i] = {combo[i], positive};
                    domain |= std::uint32_t{1} << combo[i];
                    if (!positive) falsifying |= std::uint32_t{1} << combo[i];
                }
                Clause candidate(std::move(literals));
                bool covered = false;
                for (const Clause& p : found) {
                    if (p.subset_of(candidate)) {
                        covered = true;
                        break;
                    }
                }
                if (covered) continue;
                // Entailed iff no model of f falsifies the candidate.
                detail::Subcube falsifiers(domain, falsifying, m);
                if (!falsifiers.intersects(table)) found.push_back(std::move(candidate));
            }
        });
    }
    // Size-major enumeration visits whole index combinations at a time; the
    // canonical clause order compares literal sequences instead.
    std::sort(found.begin(), found.end());
    return found;
}

/// All minimally falsifying partial assignments of f: assignments that no
/// model extends, although every proper restriction has a model extending it.
/// In bijection with the prime implicates via clause negation.
inline std::vector<PartialAssignment> mifap_assignments(const Formula& f,
                                                        const IssueSet& issues,
                                                        int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    const int m = issues.count();
    TruthTable table = TruthTable::of(f, m);
    if (table.all()) return {};
    if (table.none()) return {PartialAssignment()};

    std::vector<PartialAssignment> found;
    for (int k = 1; k <= m; ++k) {
        detail::for_each_combination(m, k, [&](const std::vector<int>& combo) {
            for (std::uint32_t pattern = 0; pattern < (std::uint32_t{1} << k); ++pattern) {
                PartialAssignment candidate;
                for (int i = 0; i < k; ++i) {
                    candidate.bind(combo[i], (pattern >> (k - 1 - i)) & 1);
                }
                bool covered = false;
                for (const PartialAssignment& p : found) {
                    if (candidate.extends(p)) {
                        covered = true;
                        break;
                    }
                }
                if (covered) continue;
                detail::Subcube extensions(candidate.domain_mask(), candidate.value_mask(), m);
                if (!extensions.intersects(table)) found.push_back(std::move(candidate));
            }
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// The conjunction of literals fixing exactly the bound issues.
inline Formula partial_to_conjunction(const PartialAssignment& p) {
    if (p.empty()) {
        throw InvalidArgumentError("cannot form the conjunction of an empty assignment");
    }
    std::vector<Formula> parts;
    parts.reserve(p.bindings().size());
    for (const auto& [issue, value] : p.bindings()) {
        Formula v = Formula::var(issue);
        parts.push_back(value ? std::move(v) : !std::move(v));
    }
    return Formula::conjunction(std::move(parts));
}

/// Size of the largest prime implicate; 0 for tautologies and for
/// unsatisfiable formulas (whose only implicate is the empty clause).
inline int max_prime_implicate_size(const Formula& f, const IssueSet& issues,
                                    int limit = kDefaultIssueLimit) {
    int max_size = 0;
    for (const Clause& c : prime_implicates(f, issues, limit)) {
        max_size = std::max(max_size, c.size());
    }
    return max_size;
}

}  // namespace binagg
