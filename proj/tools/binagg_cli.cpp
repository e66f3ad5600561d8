// binagg: decide whether the majority rule can break an integrity
// constraint, build explicit paradoxical profiles, verify profiles against
// constraints, and reproduce the classic aggregation paradoxes.
//
// Exit codes: 0 safe / no paradox / success, 2 usage or input error,
// 3 enumeration budget exceeded, 10 paradox found or constraint unsafe,
// 11 paradox requested for a safe constraint, 12 irrational voters listed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <binagg/binagg.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitParadox = 10;
constexpr int kExitSafeConstraint = 11;
constexpr int kExitIrrational = 12;

struct Options {
    bool json = false;
    long long budget = binagg::kDefaultProfileBudget;
    int voters = 3;
    std::string output;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw binagg::Error("cannot write '" + opt.output + "'");
    out << text;
}

binagg::FormulaFile load_formula_file(const std::string& path) {
    std::istringstream in(binagg::read_text_file(path));
    return binagg::read_formula_file(in);
}

binagg::ProfileFile load_profile_file(const std::string& path) {
    std::istringstream in(binagg::read_text_file(path));
    return binagg::read_profile_file(in);
}

binagg::Agenda load_agenda_file(const std::string& path) {
    std::istringstream in(binagg::read_text_file(path));
    return binagg::read_agenda_file(in);
}

void require_odd(int voters) {
    if (voters < 1) throw binagg::InvalidArgumentError("voter count must be positive");
    if (voters % 2 == 0) throw binagg::EvenVotersError(voters);
}

// Recover the top-level conjuncts of a constraint for file output.
std::vector<binagg::Formula> flatten_conjunction(const binagg::Formula& f) {
    if (f.kind() != binagg::Connective::And) return {f};
    std::vector<binagg::Formula> parts = flatten_conjunction(f.lhs());
    parts.push_back(f.rhs());
    return parts;
}

int run_check(const Options& opt, const std::string& formula_path) {
    auto file = load_formula_file(formula_path);
    auto verdict = binagg::classify(file.constraint(), file.issues);
    if (opt.json) {
        emit(opt, binagg::dump_report(binagg::report_json(verdict, nullptr)));
    } else {
        emit(opt, binagg::explain(verdict));
    }
    return verdict.safe ? kExitOk : kExitParadox;
}

int run_paradox(const Options& opt, const std::string& formula_path) {
    require_odd(opt.voters);
    auto file = load_formula_file(formula_path);
    auto verdict = binagg::classify(file.constraint(), file.issues);
    if (verdict.safe) {
        std::cerr << "constraint is majority-safe; no paradox exists\n";
        return kExitSafeConstraint;
    }
    auto witness = binagg::construct_paradox(verdict, opt.voters);
    if (opt.json) {
        emit(opt, binagg::dump_report(binagg::report_json(verdict, &witness)));
    } else {
        emit(opt, binagg::witness_text(witness));
    }
    return kExitParadox;
}

int run_verify(const Options& opt, const std::string& formula_path,
               const std::string& profile_path) {
    auto formulas = load_formula_file(formula_path);
    auto profiles = load_profile_file(profile_path);
    if (!(profiles.issues == formulas.issues)) {
        throw binagg::DimensionError(
            "the profile file and the formula file name different issue sets");
    }
    auto verdict = binagg::classify(formulas.constraint(), formulas.issues);
    auto witness = binagg::check_paradox(binagg::majority_rule(), profiles.profile,
                                         formulas.constraint(), formulas.issues);
    if (opt.json) {
        emit(opt, binagg::dump_report(
                      binagg::report_json(verdict, witness ? &*witness : nullptr)));
    } else if (witness) {
        emit(opt, binagg::witness_text(*witness));
    } else {
        emit(opt, "no paradox: the majority outcome satisfies the constraint\n");
    }
    return witness ? kExitParadox : kExitOk;
}

int run_demo(const Options& opt, const std::string& name,
             const std::string& formula_out, const std::string& profile_out) {
    binagg::Scenario scenario = binagg::builtin_scenario(name);
    if (!formula_out.empty()) {
        std::ofstream out(formula_out, std::ios::binary);
        if (!out) throw binagg::Error("cannot write '" + formula_out + "'");
        binagg::write_formula_file(out, scenario.issues,
                                   flatten_conjunction(scenario.constraint),
                                   {scenario.title});
    }
    if (!profile_out.empty()) {
        std::ofstream out(profile_out, std::ios::binary);
        if (!out) throw binagg::Error("cannot write '" + profile_out + "'");
        binagg::write_profile_file(out, scenario.issues, scenario.profile,
                                   {scenario.title});
    }
    auto witness = binagg::check_paradox(binagg::majority_rule(), scenario.profile,
                                         scenario.constraint, scenario.issues);
    if (!witness) throw binagg::Error("builtin scenario failed to produce a paradox");
    if (opt.json) {
        auto verdict = binagg::classify(scenario.constraint, scenario.issues);
        emit(opt, binagg::dump_report(binagg::report_json(verdict, &*witness)));
    } else {
        emit(opt, binagg::scenario_text(scenario, *witness));
    }
    return kExitParadox;
}

int run_bruteforce(const Options& opt, const std::string& formula_path) {
    require_odd(opt.voters);
    auto file = load_formula_file(formula_path);
    auto verdict = binagg::classify(file.constraint(), file.issues);
    auto witness = binagg::brute_force_cr(binagg::majority_rule(), file.constraint(),
                                          file.issues, opt.voters, opt.budget);
    if (opt.json) {
        auto j = binagg::report_json(file.issues, file.constraint(), !witness,
                                     verdict.max_clause_size, verdict.implicates,
                                     verdict.mifap, witness ? &*witness : nullptr);
        emit(opt, binagg::dump_report(j));
    } else if (witness) {
        std::ostringstream out;
        out << "paradox found at n = " << opt.voters << ":\n\n"
            << binagg::witness_text(*witness);
        emit(opt, out.str());
    } else {
        std::ostringstream out;
        out << "certified collectively rational for n = " << opt.voters
            << ": every profile of rational ballots aggregates to a rational outcome\n";
        emit(opt, out.str());
    }
    return witness ? kExitParadox : kExitOk;
}

int run_mi_sets(const Options& opt, const std::string& agenda_path) {
    binagg::Agenda agenda = load_agenda_file(agenda_path);
    auto sets = binagg::mi_sets(agenda);
    if (opt.json) {
        binagg::ordered_json j;
        auto& entries = j["agenda"] = binagg::ordered_json::array();
        for (const auto& e : agenda.entries()) entries.push_back(e.name);
        auto& out_sets = j["mi_sets"] = binagg::ordered_json::array();
        for (const auto& s : sets) {
            binagg::ordered_json row = binagg::ordered_json::array();
            for (int i : s) row.push_back(agenda.entries()[i].name);
            out_sets.push_back(std::move(row));
        }
        emit(opt, binagg::dump_report(j));
        return kExitOk;
    }
    std::ostringstream out;
    out << "minimally inconsistent subsets: " << sets.size() << "\n";
    for (const auto& s : sets) {
        out << "  {";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0) out << ", ";
            out << agenda.entries()[s[i]].name;
        }
        out << "}\n";
    }
    emit(opt, out.str());
    return kExitOk;
}

int run_encode_pref(const Options& opt, int alternatives, const std::string& kind) {
    binagg::OrderKind order = binagg::OrderKind::Linear;
    if (kind == "weak") {
        order = binagg::OrderKind::Weak;
    } else if (kind == "partial") {
        order = binagg::OrderKind::Partial;
    } else if (kind != "linear") {
        throw binagg::InvalidArgumentError("unknown order kind '" + kind +
                                           "' (linear, weak, partial)");
    }
    binagg::AlternativeSet alts = binagg::AlternativeSet::lettered(alternatives);
    binagg::Encoding enc = binagg::encode_preferences(alts, order);
    std::vector<std::string> comments = {
        "preference aggregation over " + std::to_string(alternatives) +
        " alternatives, " + kind + " orders"};
    for (int a = 0; a < alts.count(); ++a) {
        for (int b = 0; b < alts.count(); ++b) {
            if (a != b) {
                comments.push_back(
                    enc.issues.name(binagg::pair_issue_index(alts, a, b)) + ": " +
                    alts.name(a) + " before " + alts.name(b));
            }
        }
    }
    std::ostringstream out;
    binagg::write_formula_file(out, enc.issues, flatten_conjunction(enc.constraint),
                               comments);
    emit(opt, out.str());
    return kExitOk;
}

int run_encode_ostrogorski(const Options& opt, int issue_count,
                           const std::vector<std::string>& names) {
    binagg::Encoding enc = binagg::encode_ostrogorski(issue_count, names);
    std::vector<std::string> comments = {
        "party contest over " + std::to_string(issue_count) + " policy issues",
        "A: overall support for the first party"};
    std::ostringstream out;
    binagg::write_formula_file(out, enc.issues, flatten_conjunction(enc.constraint),
                               comments);
    emit(opt, out.str());
    return kExitOk;
}

int run_encode_agenda(const Options& opt, const std::string& agenda_path) {
    binagg::Agenda agenda = load_agenda_file(agenda_path);
    binagg::Encoding enc = binagg::encode_agenda(agenda);
    std::vector<std::string> comments = {"judgment aggregation agenda encoding"};
    const binagg::IssueSet& base = agenda.base_variables();
    for (int i = 0; i < agenda.size(); ++i) {
        comments.push_back(enc.issues.name(i) + ": " +
                           binagg::to_string(agenda.entries()[i].formula, base));
    }
    std::ostringstream out;
    binagg::write_formula_file(out, enc.issues, flatten_conjunction(enc.constraint),
                               comments);
    emit(opt, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary aggregation with integrity constraints: majority-rule "
                 "safety analysis and paradox construction"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    if (const char* env = std::getenv("AGG_BUDGET")) {
        try {
            opt.budget = std::stoll(env);
        } catch (...) {
            std::cerr << "invalid AGG_BUDGET value '" << env << "'\n";
            return kExitUsage;
        }
    }
    app.add_flag("--json", opt.json, "emit the machine-readable JSON report");
    app.add_option("--budget", opt.budget, "max profiles a brute-force search may visit");
    app.add_option("--voters,-n", opt.voters, "number of voters (odd)");
    app.add_option("--output,-o", opt.output, "write the report to a file instead of stdout");

    std::string formula_path, profile_path, agenda_path, demo_name;
    int alternatives = 3;
    int policy_issues = 3;
    std::string order_kind = "linear";
    std::vector<std::string> policy_names;

    auto* check = app.add_subcommand("check", "classify a constraint as majority-safe or not");
    check->add_option("formula-file", formula_path)->required();

    auto* paradox = app.add_subcommand(
        "paradox", "construct a paradoxical profile for an unsafe constraint");
    paradox->add_option("formula-file", formula_path)->required();

    auto* verify = app.add_subcommand("verify", "test a profile against a constraint");
    verify->add_option("formula-file", formula_path)->required();
    verify->add_option("profile-file", profile_path)->required();

    auto* demo = app.add_subcommand("demo", "reproduce a classic aggregation paradox");
    demo->add_option("name", demo_name, "condorcet | discursive | ostrogorski | "
                                        "ostrogorski-strict | divided-government | mep")
        ->required();
    std::string demo_formula_out, demo_profile_out;
    demo->add_option("--formula-out", demo_formula_out,
                     "also write the scenario constraint as a formula file");
    demo->add_option("--profile-out", demo_profile_out,
                     "also write the scenario profile as a profile file");

    auto* encode = app.add_subcommand("encode", "translate a scenario into a formula file");
    encode->require_subcommand(1);
    auto* pref = encode->add_subcommand("pref", "preference aggregation constraint");
    pref->add_option("--alternatives,-a", alternatives, "number of alternatives (2..5)");
    pref->add_option("--kind,-k", order_kind, "linear | weak | partial");
    auto* ostro = encode->add_subcommand("ostrogorski", "party-contest constraint");
    ostro->add_option("--issues,-i", policy_issues, "number of policy issues (odd)");
    ostro->add_option("--names", policy_names, "policy issue names");
    auto* agenda_cmd = encode->add_subcommand("agenda", "judgment aggregation constraint");
    agenda_cmd->add_option("--file,-f", agenda_path, "agenda file")->required();

    auto* bruteforce = app.add_subcommand(
        "bruteforce", "certify collective rationality at a fixed voter count");
    bruteforce->add_option("formula-file", formula_path)->required();

    auto* misets = app.add_subcommand("mi-sets",
                                      "list the minimally inconsistent subsets of an agenda");
    misets->add_option("agenda-file", agenda_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return run_check(opt, formula_path);
        if (*paradox) return run_paradox(opt, formula_path);
        if (*verify) return run_verify(opt, formula_path, profile_path);
        if (*demo) return run_demo(opt, demo_name, demo_formula_out, demo_profile_out);
        if (*bruteforce) return run_bruteforce(opt, formula_path);
        if (*misets) return run_mi_sets(opt, agenda_path);
        if (*encode) {
            if (*pref) return run_encode_pref(opt, alternatives, order_kind);
            if (*ostro) return run_encode_ostrogorski(opt, policy_issues, policy_names);
            if (*agenda_cmd) return run_encode_agenda(opt, agenda_path);
        }
    } catch (const binagg::IrrationalVotersError& e) {
        std::cerr << e.what() << "\n";
        return kExitIrrational;
    } catch (const binagg::SafeConstraintError& e) {
        std::cerr << e.what() << "\n";
        return kExitSafeConstraint;
    } catch (const binagg::BudgetError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const binagg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
