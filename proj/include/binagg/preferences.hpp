#pragma once

#include <string>
#include <vector>

#include "binagg/ballot.hpp"
#include "binagg/encoding.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"

namespace binagg {

/// The candidates a preference relation ranges over.
class AlternativeSet {
public:
    explicit AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() < 2) {
            throw InvalidArgumentError("need at least two alternatives");
        }
        for (const auto& n : names_) {
            if (n.empty() || !is_identifier("x" + n)) {
                throw InvalidArgumentError("alternative label '" + n +
                                           "' must consist of letters, digits or '_'");
            }
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw InvalidArgumentError("duplicate alternative label '" + names_[i] + "'");
                }
            }
        }
    }

    /// Alternatives a, b, c, ...
    static AlternativeSet lettered(int count) {
        if (count < 2 || count > 26) {
            throw InvalidArgumentError("lettered alternative sets support 2..26 alternatives");
        }
        std::vector<std::string> names;
        for (int i = 0; i < count; ++i) names.push_back(std::string(1, char('a' + i)));
        return AlternativeSet(std::move(names));
    }

    int count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

enum class OrderKind { Linear, Weak, Partial };

/// Index of issue (a, b) in the row-major pair layout.
inline int pair_issue_index(const AlternativeSet& x, int a, int b) {
    return a * x.count() + b;
}

/// One issue per ordered pair of alternatives, diagonal included. Pair (a, b)
/// reads "a comes before b". Single-letter labels concatenate (p_ab); longer
/// ones are set apart with underscores.
inline IssueSet preference_issues(const AlternativeSet& x) {
    bool short_labels = true;
    for (const auto& n : x.names()) short_labels = short_labels && n.size() == 1;
    std::vector<std::string> names;
    names.reserve(x.count() * x.count());
    for (int a = 0; a < x.count(); ++a) {
        for (int b = 0; b < x.count(); ++b) {
            names.push_back(short_labels ? "p_" + x.name(a) + x.name(b)
                                         : "p_" + x.name(a) + "_" + x.name(b));
        }
    }
    return IssueSet(std::move(names));
}

inline constexpr int kMaxAlternatives = 5;  // |x|^2 issues must stay enumerable

/// The constraint whose models are exactly the binary relations of the given
/// order kind: linear orders, weak orders (total preorders), or strict
/// partial orders.
///
/// Linear orders get an explicit antisymmetry clause. Irreflexivity plus
/// transitivity over pairwise-distinct triples alone would still admit
/// two-cycles (p_ab = p_ba = 1), and then the model count would no longer be
/// the number of permutations.
inline Encoding encode_preferences(const AlternativeSet& x, OrderKind kind) {
    if (x.count() > kMaxAlternatives) {
        throw InvalidArgumentError("too many alternatives: " + std::to_string(x.count()) +
                                   " (max " + std::to_string(kMaxAlternatives) + ")");
    }
    const int s = x.count();
    IssueSet issues = preference_issues(x);
    auto var = [&](int a, int b) { return Formula::var(pair_issue_index(x, a, b)); };
    auto nvar = [&](int a, int b) { return Formula::negation(var(a, b)); };

    std::vector<Formula> parts;
    for (int a = 0; a < s; ++a) {
        // Diagonal: empty for strict orders, forced for weak ones.
        parts.push_back(kind == OrderKind::Weak ? var(a, a) : nvar(a, a));
    }
    if (kind != OrderKind::Partial) {
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) parts.push_back(var(a, b) | var(b, a));
        }
    }
    if (kind != OrderKind::Weak) {
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) parts.push_back(nvar(a, b) | nvar(b, a));
        }
    }
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            for (int c = 0; c < s; ++c) {
                if (a == b || b == c || a == c) continue;
                parts.push_back(implies(var(a, b) & var(b, c), var(a, c)));
            }
        }
    }
    return {std::move(issues), Formula::conjunction(std::move(parts))};
}

/// Negative transitivity over the same pair issues: if a does not precede b
/// and b does not precede c, then a does not precede c.
inline Formula encode_negative_transitivity(const AlternativeSet& x) {
    if (x.count() > kMaxAlternatives) {
        throw InvalidArgumentError("too many alternatives: " + std::to_string(x.count()) +
                                   " (max " + std::to_string(kMaxAlternatives) + ")");
    }
    const int s = x.count();
    auto nvar = [&](int a, int b) {
        return Formula::negation(Formula::var(pair_issue_index(x, a, b)));
    };
    std::vector<Formula> parts;
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            for (int c = 0; c < s; ++c) {
                if (a == b || b == c || a == c) continue;
                parts.push_back(implies(nvar(a, b) & nvar(b, c), nvar(a, c)));
            }
        }
    }
    return Formula::conjunction(std::move(parts));
}

/// The ballot of the linear order listing `ranking` first-to-last:
/// pair (a, b) is accepted iff a appears before b.
inline Ballot ballot_from_ranking(const AlternativeSet& x, const std::vector<int>& ranking) {
    const int s = x.count();
    if (static_cast<int>(ranking.size()) != s) {
        throw InvalidArgumentError("ranking must list every alternative exactly once");
    }
    std::vector<int> position(s, -1);
    for (int pos = 0; pos < s; ++pos) {
        int a = ranking[pos];
        if (a < 0 || a >= s || position[a] != -1) {
            throw InvalidArgumentError("ranking must list every alternative exactly once");
        }
        position[a] = pos;
    }
    std::vector<std::uint8_t> bits(s * s, 0);
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            bits[pair_issue_index(x, a, b)] = a != b && position[a] < position[b];
        }
    }
    return Ballot(std::move(bits));
}

}  // namespace binagg
