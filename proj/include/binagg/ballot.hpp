#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "binagg/errors.hpp"

namespace binagg {

/// One yes/no choice per issue. Immutable after construction.
class Ballot {
public:
    explicit Ballot(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) throw InvalidArgumentError("ballot bits must be 0 or 1");
        }
    }

    Ballot(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits) {
            if (b != 0 && b != 1) throw InvalidArgumentError("ballot bits must be 0 or 1");
            bits_.push_back(static_cast<std::uint8_t>(b));
        }
    }

    /// The ballot at position `index` in the lexicographic enumeration of
    /// {0,1}^m: issue 0 is the most significant digit.
    static Ballot from_lex_index(std::uint32_t index, int issue_count) {
        std::vector<std::uint8_t> bits(issue_count);
        for (int j = 0; j < issue_count; ++j) {
            bits[j] = (index >> (issue_count - 1 - j)) & 1u;
        }
        return Ballot(std::move(bits));
    }

    std::uint32_t lex_index() const {
        std::uint32_t index = 0;
        for (auto b : bits_) index = (index << 1) | b;
        return index;
    }

    int size() const { return static_cast<int>(bits_.size()); }

    bool bit(int issue) const { return bits_.at(issue) != 0; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < bits_.size(); ++j) {
            if (j > 0) s += ' ';
            s += bits_[j] ? '1' : '0';
        }
        return s;
    }

    friend bool operator==(const Ballot& a, const Ballot& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Ballot& a, const Ballot& b) { return !(a == b); }
    friend bool operator<(const Ballot& a, const Ballot& b) { return a.bits_ < b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace binagg
