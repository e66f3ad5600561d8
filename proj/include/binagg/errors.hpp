#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace binagg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed concrete syntax. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" +
                std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }

    /// The description without the position prefix.
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// An identifier that does not occur in the issue set (or variable set).
class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(int line, int column, const std::string& name)
        : ParseError(line, column, "unknown identifier '" + name + "'"),
          name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Ballot length, profile width or variable index does not match the issue set.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A semantic operation was asked to enumerate over too many issues.
class IssueLimitError : public Error {
public:
    IssueLimitError(int issues, int limit)
        : Error("issue count " + std::to_string(issues) +
                " exceeds the enumeration limit " + std::to_string(limit)),
          issues_(issues),
          limit_(limit) {}

    int issues() const { return issues_; }
    int limit() const { return limit_; }

private:
    int issues_;
    int limit_;
};

/// The majority rule is only defined for an odd number of voters.
class EvenVotersError : public Error {
public:
    explicit EvenVotersError(int voters)
        : Error("majority rule is undefined for an even number of voters (n = " +
                std::to_string(voters) + ")"),
          voters_(voters) {}

    int voters() const { return voters_; }

private:
    int voters_;
};

/// A paradox check was given a profile containing irrational ballots.
class IrrationalVotersError : public Error {
public:
    explicit IrrationalVotersError(std::vector<int> voters)
        : Error(describe(voters)), voters_(std::move(voters)) {}

    /// 0-based indices of the offending voters.
    const std::vector<int>& voters() const { return voters_; }

private:
    static std::string describe(const std::vector<int>& voters) {
        std::string s = "profile contains irrational ballots (voters:";
        for (int v : voters) s += " " + std::to_string(v + 1);
        return s + ")";
    }

    std::vector<int> voters_;
};

/// A brute-force search would need to visit more profiles than allowed.
class BudgetError : public Error {
public:
    BudgetError(double required, long long budget)
        : Error("search requires " + format_count(required) +
                " profiles, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    double required() const { return required_; }
    long long budget() const { return budget_; }

private:
    static std::string format_count(double count) {
        if (count < 1e15) {
            return std::to_string(static_cast<long long>(count));
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", count);
        return buf;
    }

    double required_;
    long long budget_;
};

/// A paradox was requested for a constraint the majority rule cannot violate.
class SafeConstraintError : public Error {
public:
    SafeConstraintError() : Error("constraint is majority-safe; no paradox exists") {}
};

class UnknownScenarioError : public Error {
public:
    explicit UnknownScenarioError(const std::string& name, const std::string& known)
        : Error("unknown scenario '" + name + "' (known: " + known + ")") {}
};

/// Any other violated precondition.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

}  // namespace binagg
