#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binagg/ballot.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"

namespace binagg {

/// Soft default for the number of issues a semantic operation will enumerate
/// over, and the absolute ceiling. Exhaustive truth tables are exact and fast
/// at desk scale; anything beyond the ceiling needs a different engine.
inline constexpr int kDefaultIssueLimit = 16;
inline constexpr int kHardIssueLimit = 24;

namespace detail {

inline int effective_limit(int requested) {
    return requested < kHardIssueLimit ? requested : kHardIssueLimit;
}

inline void check_issue_limit(int issues, int limit) {
    if (issues > effective_limit(limit)) {
        throw IssueLimitError(issues, effective_limit(limit));
    }
}

}  // namespace detail

/// The value of a formula under every assignment, one bit per assignment.
/// Assignment `i` is the ballot at lexicographic position `i` (issue 0 is the
/// most significant digit), so ascending bit index is ascending ballot order.
class TruthTable {
public:
    explicit TruthTable(int issue_count, bool fill = false)
        : issues_(issue_count),
          words_((size() + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        trim();
    }

    /// Bulk evaluation of f over all 2^m assignments.
    static TruthTable of(const Formula& f, int issue_count) {
        switch (f.kind()) {
            case Connective::True: return TruthTable(issue_count, true);
            case Connective::False: return TruthTable(issue_count, false);
            case Connective::Var: {
                if (f.var_index() >= issue_count) {
                    throw DimensionError(
                        "formula refers to issue index " + std::to_string(f.var_index()) +
                        " but the issue set has " + std::to_string(issue_count));
                }
                return projection(f.var_index(), issue_count);
            }
            case Connective::Not: {
                TruthTable t = of(f.child(0), issue_count);
                t.invert();
                return t;
            }
            case Connective::And: {
                TruthTable a = of(f.lhs(), issue_count);
                TruthTable b = of(f.rhs(), issue_count);
                for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] &= b.words_[w];
                return a;
            }
            case Connective::Or: {
                TruthTable a = of(f.lhs(), issue_count);
                TruthTable b = of(f.rhs(), issue_count);
                for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] |= b.words_[w];
                return a;
            }
            case Connective::Implies: {
                TruthTable a = of(f.lhs(), issue_count);
                TruthTable b = of(f.rhs(), issue_count);
                for (std::size_t w = 0; w < a.words_.size(); ++w) {
                    a.words_[w] = ~a.words_[w] | b.words_[w];
                }
                a.trim();
                return a;
            }
            case Connective::Iff: {
                TruthTable a = of(f.lhs(), issue_count);
                TruthTable b = of(f.rhs(), issue_count);
                for (std::size_t w = 0; w < a.words_.size(); ++w) {
                    a.words_[w] = ~(a.words_[w] ^ b.words_[w]);
                }
                a.trim();
                return a;
            }
        }
        throw Error("unreachable");
    }

    int issue_count() const { return issues_; }

    std::uint32_t size() const { return std::uint32_t{1} << issues_; }

    bool bit(std::uint32_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1u;
    }

    void set_bit(std::uint32_t index, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= mask;
        } else {
            words_[index >> 6] &= ~mask;
        }
    }

    void invert() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    void and_with(const TruthTable& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    }

    std::uint64_t count() const {
        std::uint64_t n = 0;
        for (auto w : words_) n += __builtin_popcountll(w);
        return n;
    }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    bool all() const { return count() == size(); }

    /// True iff every set bit of this table is also set in `other`.
    bool subset_of(const TruthTable& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~other.words_[w]) return false;
        }
        return true;
    }

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.issues_ == b.issues_ && a.words_ == b.words_;
    }

private:
    // Table of variable j: bit i is (i >> (m-1-j)) & 1.
    static TruthTable projection(int j, int m) {
        TruthTable t(m);
        int shift = m - 1 - j;
        if (shift >= 6) {
            std::size_t block = std::size_t{1} << (shift - 6);
            for (std::size_t w = 0; w < t.words_.size(); ++w) {
                if ((w / block) & 1) t.words_[w] = ~std::uint64_t{0};
            }
        } else {
            static constexpr std::uint64_t kPattern[6] = {
                0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
            for (auto& w : t.words_) w = kPattern[shift];
        }
        t.trim();
        return t;
    }

    // Keep bits past 2^m zero so whole-word tests stay honest.
    void trim() {
        if (issues_ < 6) {
            words_[0] &= (std::uint64_t{1} << size()) - 1;
        }
    }

    int issues_;
    std::vector<std::uint64_t> words_;
};

/// Mod(f): every ballot satisfying f, in lexicographic order.
inline std::vector<Ballot> models(const Formula& f, const IssueSet& issues,
                                  int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    TruthTable t = TruthTable::of(f, issues.count());
    std::vector<Ballot> result;
    result.reserve(t.count());
    for (std::uint32_t i = 0; i < t.size(); ++i) {
        if (t.bit(i)) result.push_back(Ballot::from_lex_index(i, issues.count()));
    }
    return result;
}

/// True iff every model of f is a model of g (over the shared issue set).
inline bool entails(const Formula& f, const Formula& g, const IssueSet& issues,
                    int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    return TruthTable::of(f, issues.count()).subset_of(TruthTable::of(g, issues.count()));
}

inline bool equivalent(const Formula& f, const Formula& g, const IssueSet& issues,
                       int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    return TruthTable::of(f, issues.count()) == TruthTable::of(g, issues.count());
}

inline bool is_tautology(const Formula& f, const IssueSet& issues,
                         int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    return TruthTable::of(f, issues.count()).all();
}

inline bool is_satisfiable(const Formula& f, const IssueSet& issues,
                           int limit = kDefaultIssueLimit) {
    detail::check_issue_limit(issues.count(), limit);
    return !TruthTable::of(f, issues.count()).none();
}

namespace detail {

/// Assignments extending a partial choice form a subcube of the table.
/// `domain` and `values` are ballot-space masks: bit j of `domain` marks
/// issue j as fixed, bit j of `values` gives its value.
class Subcube {
public:
    Subcube(std::uint32_t domain, std::uint32_t values, int issue_count) {
        // Translate issue j to table-index bit (m-1-j).
        for (int j = 0; j < issue_count; ++j) {
            std::uint32_t index_bit = std::uint32_t{1} << (issue_count - 1 - j);
            if (domain >> j & 1) {
                if (values >> j & 1) base_ |= index_bit;
            } else {
                free_ |= index_bit;
            }
        }
    }

    /// Lexicographically first member whose table bit is set, if any.
    std::optional<std::uint32_t> first_in(const TruthTable& t) const {
        std::uint32_t sub = 0;
        while (true) {
            if (t.bit(base_ | sub)) return base_ | sub;
            if (sub == free_) return std::nullopt;
            sub = (sub - free_) & free_;  // next submask of free_, ascending
        }
    }

    bool intersects(const TruthTable& t) const { return first_in(t).has_value(); }

private:
    std::uint32_t base_ = 0;
    std::uint32_t free_ = 0;
};

}  // namespace detail

}  // namespace binagg
