// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if anything fails.
//
//   usage: acceptance <path-to-binagg-cli> <golden-dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <binagg/binagg.hpp>

#include "support.hpp"

using namespace binagg;
namespace ts = testing_support;

namespace {

std::string g_cli;
std::string g_golden;
int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(clock_::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok && problem_.empty()) problem_ = what;
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock_::now() -
                                                                        start_)
                      .count();
        if (problem_.empty()) {
            std::printf("PASS  criterion %d: %s  (%lld ms)\n", number_, title_.c_str(),
                        static_cast<long long>(ms));
        } else {
            std::printf("FAIL  criterion %d: %s  (%lld ms)\n      %s\n", number_,
                        title_.c_str(), static_cast<long long>(ms), problem_.c_str());
            ++g_failures;
        }
    }

private:
    using clock_ = std::chrono::steady_clock;
    int number_;
    std::string title_;
    std::string problem_;
    clock_::time_point start_;
};

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct AnalyzedFormula {
    Formula formula;
    SafetyVerdict verdict;
    bool brute_safe_n3;
};

std::vector<AnalyzedFormula> g_m3;  // all 256 functions of 3 variables
std::vector<AnalyzedFormula> g_m4;  // 500 seeded-random formulas of 4 variables

// 1. The six classic tables reproduce bit for bit and each is a paradox.
void criterion_table_reproduction() {
    Criterion c(1, "classic tables reproduce exactly");
    const std::vector<std::pair<std::string, std::vector<int>>> expected = {
        {"condorcet", {1, 1, 0}},          {"discursive", {1, 1, 0}},
        {"ostrogorski", {1, 0, 1, 0}},     {"ostrogorski-strict", {1, 1, 1, 0}},
        {"divided-government", {1, 0, 0}}, {"mep", {1, 1, 1}},
    };
    for (const auto& [name, row] : expected) {
        Scenario s = builtin_scenario(name);
        Ballot outcome = majority(s.profile);
        std::vector<int> columns = s.display_columns;
        if (columns.empty()) {
            for (int j = 0; j < s.issues.count(); ++j) columns.push_back(j);
        }
        c.require(columns.size() == row.size(), name + ": column count");
        for (std::size_t i = 0; i < row.size(); ++i) {
            c.require(outcome.bit(columns[i]) == (row[i] == 1),
                      name + ": majority row differs at shown column " + std::to_string(i));
        }
        auto witness = check_paradox(majority_rule(), s.profile, s.constraint, s.issues);
        c.require(witness.has_value(), name + ": not a paradox");

        auto cli = run_cli("demo " + name);
        c.require(cli.exit_code == 10, name + ": demo exit code");
        c.require(cli.output == slurp(g_golden + "/demo_" + name + ".txt"),
                  name + ": demo output drifted from the golden file");
    }
}

// 2. Exhaustively at m = 3: implicate-size classification == profile search.
void criterion_oracle_equivalence_m3() {
    Criterion c(2, "classification matches brute force for all 256 functions of 3 variables");
    IssueSet issues = IssueSet::numbered(3);
    for (std::uint32_t table = 0; table < 256; ++table) {
        Formula f = ts::formula_from_truth_table(table, 3);
        SafetyVerdict verdict = classify(f, issues);
        bool certified = !brute_force_cr(majority_rule(), f, issues, 3).has_value();
        c.require(verdict.safe == certified,
                  "disagreement on truth table " + std::to_string(table));
        g_m3.push_back({std::move(f), std::move(verdict), certified});
    }
}

// 3. Sampled at m = 4: 500 formulas at n = 3, the first 50 also at n = 5.
void criterion_oracle_equivalence_m4() {
    Criterion c(3, "classification matches brute force for 500 random formulas of 4 variables");
    IssueSet issues = IssueSet::numbered(4);
    std::mt19937 rng(424242);
    for (int i = 0; i < 500; ++i) {
        Formula f = ts::random_formula(rng, 4, 5);
        SafetyVerdict verdict = classify(f, issues);
        bool certified = !brute_force_cr(majority_rule(), f, issues, 3).has_value();
        c.require(verdict.safe == certified, "disagreement at n=3, formula " + std::to_string(i));
        if (i < 50) {
            bool certified5 = !brute_force_cr(majority_rule(), f, issues, 5).has_value();
            c.require(verdict.safe == certified5,
                      "disagreement at n=5, formula " + std::to_string(i));
        }
        g_m4.push_back({std::move(f), std::move(verdict), certified});
    }
}

// 4. Every unsafe formula from criteria 2-3 yields a valid constructed
// witness at n = 3, 5, 7 whose outcome extends the certificate assignment.
void criterion_witness_construction() {
    Criterion c(4, "constructed witnesses are valid for every unsafe formula at n = 3, 5, 7");
    int built = 0;
    auto check_all = [&](const std::vector<AnalyzedFormula>& corpus) {
        for (const AnalyzedFormula& a : corpus) {
            if (a.verdict.safe) continue;
            for (int n : {3, 5, 7}) {
                try {
                    ParadoxWitness w = construct_paradox(a.verdict, n);
                    for (int v = 0; v < w.profile().voters(); ++v) {
                        c.require(eval(a.formula, w.profile().ballot(v)),
                                  "irrational voter in a constructed witness");
                    }
                    c.require(!eval(a.formula, w.outcome()), "rational witness outcome");
                    for (const auto& [issue, value] : a.verdict.mifap->bindings()) {
                        c.require(w.outcome().bit(issue) == value,
                                  "outcome disagrees with the certificate assignment");
                    }
                    ++built;
                } catch (const Error& e) {
                    c.require(false, std::string("construction failed: ") + e.what());
                }
            }
        }
    };
    check_all(g_m3);
    check_all(g_m4);
    c.require(built > 0, "no unsafe formulas reached the constructor");
}

// 5. Implicates: equivalent conjunction, minimal clauses, mifap bijection.
void criterion_prime_implicates() {
    Criterion c(5, "prime implicates are equivalent, minimal, and mirror the mifap set");
    auto check_formula = [&](const Formula& f, const IssueSet& issues) {
        std::vector<Clause> primes = prime_implicates(f, issues);
        if (primes.size() == 1 && primes.front().empty()) {
            c.require(!is_satisfiable(f, issues), "falsum implicate for a satisfiable formula");
        } else {
            std::vector<Formula> parts;
            for (const Clause& cl : primes) parts.push_back(cl.to_formula());
            c.require(equivalent(Formula::conjunction(std::move(parts)), f, issues),
                      "implicate conjunction is not equivalent to the formula");
        }
        for (const Clause& cl : primes) {
            for (std::size_t drop = 0; drop < cl.literals().size(); ++drop) {
                std::vector<Literal> fewer = cl.literals();
                fewer.erase(fewer.begin() + drop);
                c.require(!entails(f, Clause(std::move(fewer)).to_formula(), issues),
                          "non-minimal implicate survived");
            }
        }
        std::vector<PartialAssignment> mifaps = mifap_assignments(f, issues);
        c.require(mifaps.size() == primes.size(), "mifap and implicate counts differ");
        for (std::size_t i = 0; i < mifaps.size() && i < primes.size(); ++i) {
            c.require(mifaps[i].size() == primes[i].size(), "mifap/implicate size mismatch");
            if (!mifaps[i].empty()) {
                c.require(mifaps[i].negated_clause() == primes[i],
                          "mifap does not negate to its implicate");
            }
        }
    };

    IssueSet three = IssueSet::numbered(3);
    check_formula(parse("p1 & p2 -> p3", three), three);
    check_formula(parse("p1 & p2", three), three);
    check_formula(parse("(p1 | p2) & (~p1 | p3)", three), three);
    check_formula(parse("p1 | ~p1", three), three);
    check_formula(parse("p1 & ~p1", three), three);
    check_formula(parse("~p1", three), three);
    Encoding ostro = encode_ostrogorski(3);
    check_formula(ostro.constraint, ostro.issues);

    IssueSet m3 = IssueSet::numbered(3);
    for (const AnalyzedFormula& a : g_m3) check_formula(a.formula, m3);
    IssueSet m4 = IssueSet::numbered(4);
    for (const AnalyzedFormula& a : g_m4) check_formula(a.formula, m4);
}

// 6. Preference encoder: model counts, order structure, majority cycle.
void criterion_preference_encoder() {
    Criterion c(6, "linear orders encode exactly and the majority cycle appears");
    Encoding two = encode_preferences(AlternativeSet::lettered(2), OrderKind::Linear);
    c.require(models(two.constraint, two.issues).size() == 2, "|Mod| != 2 for 2 alternatives");

    AlternativeSet alts = AlternativeSet::lettered(3);
    Encoding three = encode_preferences(alts, OrderKind::Linear);
    std::vector<Ballot> orders = models(three.constraint, three.issues);
    c.require(orders.size() == 6, "|Mod| != 6 for 3 alternatives");

    // Every model is a linear order: irreflexive, complete, antisymmetric,
    // transitive; distinct models give distinct orders.
    for (const Ballot& b : orders) {
        for (int a = 0; a < 3; ++a) {
            c.require(!b.bit(pair_issue_index(alts, a, a)), "reflexive model");
            for (int d = 0; d < 3; ++d) {
                if (a == d) continue;
                bool ad = b.bit(pair_issue_index(alts, a, d));
                bool da = b.bit(pair_issue_index(alts, d, a));
                c.require(ad != da, "incomplete or symmetric model");
                for (int e = 0; e < 3; ++e) {
                    if (e == a || e == d) continue;
                    if (ad && b.bit(pair_issue_index(alts, d, e))) {
                        c.require(b.bit(pair_issue_index(alts, a, e)), "intransitive model");
                    }
                }
            }
        }
    }

    auto witness = brute_force_cr(majority_rule(), three.constraint, three.issues, 3);
    c.require(witness.has_value(), "no majority paradox over linear preferences");
}

// 7. mi-set enumeration: the dilemma agenda exactly, random agendas vs naive.
void criterion_mi_sets() {
    Criterion c(7, "mi-set enumeration is exact");
    IssueSet base({"a", "b"});
    Formula va = Formula::var(0), vb = Formula::var(1);
    Agenda dilemma =
        Agenda::close(base, {{"alpha", va}, {"beta", vb}, {"both", va & vb}});
    std::vector<std::vector<int>> expected = {
        {0, 1}, {1, 4}, {2, 3}, {3, 4}, {4, 5}, {0, 2, 5},
    };
    c.require(mi_sets(dilemma) == expected, "dilemma mi-sets differ");

    std::mt19937 rng(20240825);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 10; ++trial) {
        int base_count = 2 + trial % 3;
        IssueSet vars = IssueSet::numbered(base_count);
        std::vector<AgendaEntry> entries;
        int wanted = 2 + trial % 2;
        for (int e = 0; e < wanted; ++e) {
            Formula f = ts::random_formula(rng, base_count, 2);
            bool duplicate = false;
            for (const auto& known : entries) duplicate = duplicate || known.formula == f;
            if (!duplicate) entries.push_back({"e" + std::to_string(e), f});
        }
        if (entries.empty()) continue;
        try {
            Agenda agenda = Agenda::close(vars, entries);
            if (agenda.size() > 6) continue;
            auto got = mi_sets(agenda);
            auto naive = ts::oracle_mi_sets(agenda);
            std::sort(got.begin(), got.end());
            std::sort(naive.begin(), naive.end());
            c.require(got == naive, "mi-sets differ from the all-subsets oracle");
            ++checked;
        } catch (const InvalidArgumentError&) {
            // Closure clash; draw another agenda.
        }
    }
    c.require(checked == 10, "not enough random agendas were checked");
}

// 8. 2-CNF constraints never produce a majority witness on rational profiles.
void criterion_two_cnf_safety() {
    Criterion c(8, "2-CNF constraints never witness a paradox (100 x 100 random profiles)");
    std::mt19937 rng(20240826);
    std::uniform_int_distribution<int> m_pick(2, 6);
    const int voters[] = {3, 5, 7, 9};
    for (int i = 0; i < 100; ++i) {
        int m = m_pick(rng);
        IssueSet issues = IssueSet::numbered(m);
        Formula f = ts::random_two_cnf(rng, m);
        std::vector<Ballot> rational = models(f, issues);
        while (rational.empty()) {
            f = ts::random_two_cnf(rng, m);
            rational = models(f, issues);
        }
        for (int rep = 0; rep < 100; ++rep) {
            int n = voters[rep % 4];
            Profile p = ts::random_rational_profile(rng, rational, n);
            auto witness = check_paradox(majority_rule(), p, f, issues);
            c.require(!witness.has_value(), "a 2-CNF constraint produced a witness");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <binagg-cli> <golden-dir>\n");
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];

    criterion_table_reproduction();
    criterion_oracle_equivalence_m3();
    criterion_oracle_equivalence_m4();
    criterion_witness_construction();
    criterion_prime_implicates();
    criterion_preference_encoder();
    criterion_mi_sets();
    criterion_two_cnf_safety();

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
