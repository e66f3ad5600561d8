#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "binagg/aggregation.hpp"
#include "binagg/agenda.hpp"
#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"
#include "binagg/parse.hpp"

namespace binagg {

// All three text formats share the same skeleton: '#' comments and blank
// lines are ignored, the first significant line is a header naming the
// variables, every later line is one item.
//
//   formula file:  issues: p1 p2 p3      profile file:  issues: p1 p2 p3
//                  p1 & p2 -> p3                        1 1 0
//                  ...one formula/line                  ...one voter/line
//
//   agenda file:   vars: a b
//                  alpha: a
//                  ...one `name: formula` entry/line

/// A formula file: an issue set and a list of formulas whose conjunction is
/// the integrity constraint. An empty list means no constraint at all.
struct FormulaFile {
    IssueSet issues;
    std::vector<Formula> formulas;

    Formula constraint() const { return Formula::conjunction(formulas); }
};

struct ProfileFile {
    IssueSet issues;
    Profile profile;
};

namespace detail {

struct FileLine {
    std::string text;
    int number;
};

inline std::vector<FileLine> significant_lines(std::istream& in) {
    std::vector<FileLine> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw.substr(0, raw.find('#'));
        std::size_t begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = text.find_last_not_of(" \t\r");
        lines.push_back({text.substr(begin, end - begin + 1), number});
    }
    return lines;
}

inline std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

inline IssueSet parse_header(const FileLine& line, const std::string& keyword) {
    if (line.text.rfind(keyword + ":", 0) != 0) {
        throw ParseError(line.number, 1,
                         "expected a '" + keyword + ":' header line first");
    }
    std::vector<std::string> names = split_words(line.text.substr(keyword.size() + 1));
    if (names.empty()) {
        throw ParseError(line.number, 1, "header names no " + keyword);
    }
    try {
        return IssueSet(std::move(names));
    } catch (const Error& e) {
        throw ParseError(line.number, 1, e.what());
    }
}

inline Formula parse_line_formula(const FileLine& line, const IssueSet& issues) {
    try {
        return parse(line.text, issues);
    } catch (const UnknownIdentifierError& e) {
        throw UnknownIdentifierError(line.number, e.column(), e.name());
    } catch (const ParseError& e) {
        // Formulas are single lines, so re-anchor to the file's line number.
        throw ParseError(line.number, e.column(), e.message());
    }
}

}  // namespace detail

inline FormulaFile read_formula_file(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "empty formula file");
    IssueSet issues = detail::parse_header(lines.front(), "issues");
    std::vector<Formula> formulas;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        formulas.push_back(detail::parse_line_formula(lines[i], issues));
    }
    return {std::move(issues), std::move(formulas)};
}

inline ProfileFile read_profile_file(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "empty profile file");
    IssueSet issues = detail::parse_header(lines.front(), "issues");
    std::vector<Ballot> ballots;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto words = detail::split_words(lines[i].text);
        if (static_cast<int>(words.size()) != issues.count()) {
            throw ParseError(lines[i].number, 1,
                             "expected " + std::to_string(issues.count()) +
                                 " bits, got " + std::to_string(words.size()));
        }
        std::vector<std::uint8_t> bits;
        bits.reserve(words.size());
        for (const auto& w : words) {
            if (w != "0" && w != "1") {
                throw ParseError(lines[i].number, 1, "ballot bit must be 0 or 1, got '" + w + "'");
            }
            bits.push_back(w == "1");
        }
        ballots.emplace_back(std::move(bits));
    }
    if (ballots.empty()) throw ParseError(1, 1, "profile file lists no voters");
    return {std::move(issues), Profile(std::move(ballots))};
}

inline Agenda read_agenda_file(std::istream& in) {
    auto lines = detail::significant_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "empty agenda file");
    IssueSet vars = detail::parse_header(lines.front(), "vars");
    std::vector<AgendaEntry> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t colon = lines[i].text.find(':');
        if (colon == std::string::npos) {
            throw ParseError(lines[i].number, 1, "expected 'name: formula'");
        }
        std::string name = lines[i].text.substr(0, colon);
        std::size_t end = name.find_last_not_of(" \t");
        name = end == std::string::npos ? "" : name.substr(0, end + 1);
        if (!is_identifier(name)) {
            throw ParseError(lines[i].number, 1,
                             "entry name '" + name + "' is not a valid identifier");
        }
        detail::FileLine body{lines[i].text.substr(colon + 1), lines[i].number};
        entries.push_back({std::move(name), detail::parse_line_formula(body, vars)});
    }
    if (entries.empty()) throw ParseError(1, 1, "agenda file lists no entries");
    try {
        return Agenda::close(std::move(vars), std::move(entries));
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

inline void write_formula_file(std::ostream& out, const IssueSet& issues,
                               const std::vector<Formula>& formulas,
                               const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "issues:";
    for (const auto& n : issues.names()) out << ' ' << n;
    out << "\n";
    for (const Formula& f : formulas) out << to_string(f, issues) << "\n";
}

inline void write_profile_file(std::ostream& out, const IssueSet& issues,
                               const Profile& p,
                               const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "issues:";
    for (const auto& n : issues.names()) out << ' ' << n;
    out << "\n";
    for (const Ballot& b : p.ballots()) out << b.to_string() << "\n";
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace binagg
