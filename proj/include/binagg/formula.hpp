#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "binagg/ballot.hpp"
#include "binagg/errors.hpp"
#include "binagg/issues.hpp"

namespace binagg {

enum class Connective { True, False, Var, Not, And, Or, Implies, Iff };

/// A propositional formula over issue variables. Values are immutable trees
/// with plain value semantics; all connectives are binary except Not.
class Formula {
public:
    Formula() : kind_(Connective::True) {}

    static Formula constant(bool value) {
        Formula f;
        f.kind_ = value ? Connective::True : Connective::False;
        return f;
    }

    static Formula var(int issue) {
        if (issue < 0) throw InvalidArgumentError("negative issue index");
        Formula f;
        f.kind_ = Connective::Var;
        f.var_ = issue;
        return f;
    }

    static Formula negation(Formula f) { return unary(Connective::Not, std::move(f)); }

    static Formula binary(Connective kind, Formula lhs, Formula rhs) {
        Formula f;
        f.kind_ = kind;
        f.kids_.reserve(2);
        f.kids_.push_back(std::move(lhs));
        f.kids_.push_back(std::move(rhs));
        return f;
    }

    /// And-fold of `parts`; the empty conjunction is True.
    static Formula conjunction(std::vector<Formula> parts) {
        return fold(Connective::And, std::move(parts), true);
    }

    /// Or-fold of `parts`; the empty disjunction is False.
    static Formula disjunction(std::vector<Formula> parts) {
        return fold(Connective::Or, std::move(parts), false);
    }

    Connective kind() const { return kind_; }

    int var_index() const { return var_; }

    int arity() const { return static_cast<int>(kids_.size()); }

    const Formula& child(int i) const { return kids_.at(i); }

    const Formula& lhs() const { return kids_.at(0); }
    const Formula& rhs() const { return kids_.at(1); }

    /// Smallest m such that every variable index is < m.
    int min_issue_count() const {
        int m = 0;
        if (kind_ == Connective::Var) m = var_ + 1;
        for (const Formula& k : kids_) m = std::max(m, k.min_issue_count());
        return m;
    }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.kind_ == b.kind_ && a.var_ == b.var_ && a.kids_ == b.kids_;
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    static Formula unary(Connective kind, Formula f) {
        Formula g;
        g.kind_ = kind;
        g.kids_.push_back(std::move(f));
        return g;
    }

    static Formula fold(Connective kind, std::vector<Formula> parts, bool empty_value) {
        if (parts.empty()) return constant(empty_value);
        Formula acc = std::move(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i) {
            acc = binary(kind, std::move(acc), std::move(parts[i]));
        }
        return acc;
    }

    Connective kind_;
    int var_ = -1;
    std::vector<Formula> kids_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) {
    return Formula::binary(Connective::And, std::move(a), std::move(b));
}
inline Formula operator|(Formula a, Formula b) {
    return Formula::binary(Connective::Or, std::move(a), std::move(b));
}
inline Formula implies(Formula a, Formula b) {
    return Formula::binary(Connective::Implies, std::move(a), std::move(b));
}
inline Formula iff(Formula a, Formula b) {
    return Formula::binary(Connective::Iff, std::move(a), std::move(b));
}

/// Standard propositional semantics: 1 iff the ballot satisfies f.
inline bool eval(const Formula& f, const Ballot& b) {
    switch (f.kind()) {
        case Connective::True: return true;
        case Connective::False: return false;
        case Connective::Var:
            if (f.var_index() >= b.size()) {
                throw DimensionError("ballot has " + std::to_string(b.size()) +
                                     " issues but the formula refers to issue index " +
                                     std::to_string(f.var_index()));
            }
            return b.bit(f.var_index());
        case Connective::Not: return !eval(f.child(0), b);
        case Connective::And: return eval(f.lhs(), b) && eval(f.rhs(), b);
        case Connective::Or: return eval(f.lhs(), b) || eval(f.rhs(), b);
        case Connective::Implies: return !eval(f.lhs(), b) || eval(f.rhs(), b);
        case Connective::Iff: return eval(f.lhs(), b) == eval(f.rhs(), b);
    }
    throw Error("unreachable");
}

namespace detail {

// Binding strength; higher binds tighter.
inline int precedence(Connective c) {
    switch (c) {
        case Connective::Iff: return 1;
        case Connective::Implies: return 2;
        case Connective::Or: return 3;
        case Connective::And: return 4;
        case Connective::Not: return 5;
        default: return 6;
    }
}

inline void print(const Formula& f, const IssueSet& issues, std::string& out) {
    // Parenthesize a child exactly when re-parsing would regroup it. And, Or
    // and Iff chains associate to the left, Implies to the right.
    auto child = [&](const Formula& k, bool needs_parens) {
        if (needs_parens) {
            out += '(';
            print(k, issues, out);
            out += ')';
        } else {
            print(k, issues, out);
        }
    };
    int prec = precedence(f.kind());
    switch (f.kind()) {
        case Connective::True: out += "TRUE"; return;
        case Connective::False: out += "FALSE"; return;
        case Connective::Var:
            if (f.var_index() >= issues.count()) {
                throw DimensionError("formula refers to issue index " +
                                     std::to_string(f.var_index()) +
                                     " outside the issue set");
            }
            out += issues.name(f.var_index());
            return;
        case Connective::Not:
            out += '~';
            child(f.child(0), precedence(f.child(0).kind()) < prec);
            return;
        case Connective::Implies:
            child(f.lhs(), precedence(f.lhs().kind()) <= prec);
            out += " -> ";
            child(f.rhs(), precedence(f.rhs().kind()) < prec);
            return;
        default: {
            const char* op = f.kind() == Connective::And   ? " & "
                             : f.kind() == Connective::Or  ? " | "
                                                           : " <-> ";
            child(f.lhs(), precedence(f.lhs().kind()) < prec);
            out += op;
            child(f.rhs(), precedence(f.rhs().kind()) <= prec);
            return;
        }
    }
}

}  // namespace detail

/// Concrete syntax for f, with the fewest parentheses that still re-parse to
/// a structurally identical tree.
inline std::string to_string(const Formula& f, const IssueSet& issues) {
    std::string out;
    detail::print(f, issues, out);
    return out;
}

}  // namespace binagg
