#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binagg/aggregation.hpp"
#include "binagg/formula.hpp"
#include "binagg/implicates.hpp"
#include "binagg/issues.hpp"
#include "binagg/safety.hpp"
#include "binagg/scenarios.hpp"

namespace binagg {

using ordered_json = nlohmann::ordered_json;

// The machine-readable report. Field order is part of the format:
//   { "formula", "safe", "max_clause_size", "prime_implicates",
//     "mifap", "witness" }
// so reports stay byte-identical across runs.
inline ordered_json report_json(const IssueSet& issues, const Formula& constraint,
                                bool safe, int max_clause_size,
                                const std::vector<Clause>& implicates,
                                const std::optional<PartialAssignment>& mifap,
                                const ParadoxWitness* witness) {
    ordered_json j;
    j["formula"] = to_string(constraint, issues);
    j["safe"] = safe;
    j["max_clause_size"] = max_clause_size;
    auto& primes = j["prime_implicates"] = ordered_json::array();
    for (const Clause& c : implicates) primes.push_back(c.to_string(issues));
    if (mifap) {
        ordered_json bindings = ordered_json::object();
        for (const auto& [issue, value] : mifap->bindings()) {
            bindings[issues.name(issue)] = value ? 1 : 0;
        }
        j["mifap"] = std::move(bindings);
    } else {
        j["mifap"] = nullptr;
    }
    if (witness) {
        ordered_json w = ordered_json::object();
        auto& voters = w["voters"] = ordered_json::array();
        for (const Ballot& b : witness->profile().ballots()) {
            ordered_json row = ordered_json::array();
            for (int j2 = 0; j2 < b.size(); ++j2) row.push_back(b.bit(j2) ? 1 : 0);
            voters.push_back(std::move(row));
        }
        ordered_json outcome = ordered_json::array();
        for (int j2 = 0; j2 < witness->outcome().size(); ++j2) {
            outcome.push_back(witness->outcome().bit(j2) ? 1 : 0);
        }
        w["outcome"] = std::move(outcome);
        w["violated"] = witness->violated().to_string(issues);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline ordered_json report_json(const SafetyVerdict& verdict, const ParadoxWitness* witness) {
    return report_json(verdict.issues, verdict.constraint, verdict.safe,
                       verdict.max_clause_size, verdict.implicates, verdict.mifap, witness);
}

inline std::string dump_report(const ordered_json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline void print_row(std::ostringstream& out, const std::string& label, int label_width,
                      const std::vector<std::string>& cells,
                      const std::vector<std::size_t>& widths) {
    out << label;
    for (std::size_t i = label.size(); i < static_cast<std::size_t>(label_width); ++i) {
        out << ' ';
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
        out << "  ";
        for (std::size_t i = cells[c].size(); i < widths[c]; ++i) out << ' ';
        out << cells[c];
    }
    out << "\n";
}

}  // namespace detail

/// The profile as a voter/issue table with a majority row, shown over
/// `columns` (all issues when empty).
inline std::string profile_table(const IssueSet& issues, const Profile& profile,
                                 const Ballot& outcome, std::vector<int> columns = {}) {
    if (columns.empty()) {
        for (int j = 0; j < issues.count(); ++j) columns.push_back(j);
    }
    std::vector<std::string> header;
    std::vector<std::size_t> widths;
    for (int j : columns) {
        header.push_back(issues.name(j));
        widths.push_back(issues.name(j).size());
    }
    const int label_width = 10;  // fits "voter NN" and "majority"
    std::ostringstream out;
    detail::print_row(out, "", label_width, header, widths);
    for (int v = 0; v < profile.voters(); ++v) {
        std::vector<std::string> cells;
        for (int j : columns) cells.push_back(profile.ballot(v).bit(j) ? "1" : "0");
        detail::print_row(out, "voter " + std::to_string(v + 1), label_width, cells, widths);
    }
    std::vector<std::string> cells;
    for (int j : columns) cells.push_back(outcome.bit(j) ? "1" : "0");
    detail::print_row(out, "majority", label_width, cells, widths);
    return out.str();
}

inline std::string witness_text(const ParadoxWitness& w) {
    std::ostringstream out;
    out << "paradox: every voter satisfies the constraint, the majority outcome does not\n"
        << "constraint: " << to_string(w.constraint(), w.issues()) << "\n\n"
        << profile_table(w.issues(), w.profile(), w.outcome()) << "\n"
        << "violated prime implicate: " << w.violated().to_string(w.issues()) << "\n";
    return out.str();
}

inline std::string scenario_text(const Scenario& s, const ParadoxWitness& w) {
    std::ostringstream out;
    out << "scenario: " << s.name << "\n"
        << "title: " << s.title << "\n";
    if (!s.note.empty()) out << "note: " << s.note << "\n";
    out << "issues:";
    for (const auto& n : s.issues.names()) out << ' ' << n;
    out << "\nconstraint: " << to_string(s.constraint, s.issues) << "\n\n"
        << profile_table(s.issues, s.profile, w.outcome(), s.display_columns) << "\n";
    if (!s.display_columns.empty() &&
        s.display_columns.size() < static_cast<std::size_t>(s.issues.count())) {
        out << "(table shows the usual columns; full outcome: " << w.outcome().to_string()
            << ")\n";
    }
    out << "violated prime implicate: " << w.violated().to_string(s.issues) << "\n"
        << "paradox: all " << s.profile.voters()
        << " voters are rational, the majority outcome is not\n";
    return out.str();
}

}  // namespace binagg
