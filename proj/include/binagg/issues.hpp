#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "binagg/errors.hpp"

namespace binagg {

inline bool is_identifier(std::string_view s) {
    auto head = [](char c) {
        return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (s.empty() || !head(s[0])) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!tail(s[i])) return false;
    }
    return true;
}

/// The finite set of binary issues under decision. Issues are addressed by
/// index everywhere; names exist for parsing and printing.
class IssueSet {
public:
    explicit IssueSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) {
            throw InvalidArgumentError("an issue set needs at least one issue");
        }
        for (std::size_t j = 0; j < names_.size(); ++j) {
            if (!is_identifier(names_[j])) {
                throw InvalidArgumentError("issue name '" + names_[j] +
                                           "' is not a valid identifier");
            }
            auto [it, fresh] = index_.emplace(names_[j], static_cast<int>(j));
            if (!fresh) {
                throw InvalidArgumentError("duplicate issue name '" + names_[j] + "'");
            }
        }
    }

    /// Issue set with the default names p1..pm.
    static IssueSet numbered(int count) {
        if (count < 1) throw InvalidArgumentError("issue count must be positive");
        std::vector<std::string> names;
        names.reserve(count);
        for (int j = 1; j <= count; ++j) names.push_back("p" + std::to_string(j));
        return IssueSet(std::move(names));
    }

    int count() const { return static_cast<int>(names_.size()); }

    const std::string& name(int j) const { return names_.at(j); }

    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const IssueSet& a, const IssueSet& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace binagg
