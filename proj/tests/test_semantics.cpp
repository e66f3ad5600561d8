#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <binagg/binagg.hpp>

#include "support.hpp"

using namespace binagg;

TEST_CASE("model enumeration is exact and lexicographic") {
    IssueSet issues = IssueSet::numbered(3);
    Formula f = parse("p1 & ~p2", issues);
    std::vector<Ballot> expected = {Ballot{1, 0, 0}, Ballot{1, 0, 1}};
    CHECK(models(f, issues) == expected);

    CHECK(models(Formula::constant(false), issues).empty());
    CHECK(models(Formula::constant(true), issues).size() == 8);
}

TEST_CASE("models agree with eval, exhaustively for small m") {
    std::mt19937 rng(20240812);
    for (int m = 1; m <= 4; ++m) {
        IssueSet issues = IssueSet::numbered(m);
        for (int trial = 0; trial < 60; ++trial) {
            Formula f = testing_support::random_formula(rng, m, 4);
            std::vector<Ballot> mods = models(f, issues);
            std::size_t hit = 0;
            for (std::uint32_t i = 0; i < (1u << m); ++i) {
                Ballot b = Ballot::from_lex_index(i, m);
                bool in_models = hit < mods.size() && mods[hit] == b;
                if (in_models) ++hit;
                REQUIRE(eval(f, b) == in_models);
            }
            REQUIRE(hit == mods.size());
        }
    }
}

TEST_CASE("linear orders over three alternatives have six models") {
    AlternativeSet alts = AlternativeSet::lettered(3);
    Encoding enc = encode_preferences(alts, OrderKind::Linear);
    CHECK(models(enc.constraint, enc.issues).size() == 6);
}

TEST_CASE("entailment") {
    IssueSet issues = IssueSet::numbered(2);
    CHECK(entails(parse("p1 & p2", issues), parse("p1", issues), issues));
    CHECK(entails(parse("p1", issues), parse("p1 | p2", issues), issues));
    CHECK_FALSE(entails(parse("p1 | p2", issues), parse("p1", issues), issues));

    Encoding ostro = encode_ostrogorski(3);
    CHECK(entails(ostro.constraint, parse("A | ~E | ~F", ostro.issues), ostro.issues));

    // A formula may not mention issues outside the given set.
    CHECK_THROWS_AS(entails(Formula::var(5), Formula::var(0), issues), DimensionError);
}

TEST_CASE("issue enumeration limits are enforced") {
    IssueSet small = IssueSet::numbered(5);
    CHECK_THROWS_AS(models(Formula::var(0), small, 4), IssueLimitError);
    CHECK_NOTHROW(models(Formula::var(0), small, 5));
    // The hard ceiling caps any requested limit.
    CHECK_THROWS_AS(models(Formula::var(0), IssueSet::numbered(kHardIssueLimit + 1), 99),
                    IssueLimitError);
}

TEST_CASE("truth table bulk evaluation matches per-ballot eval") {
    std::mt19937 rng(77);
    for (int m : {1, 3, 6, 7}) {
        IssueSet issues = IssueSet::numbered(m);
        for (int trial = 0; trial < 25; ++trial) {
            Formula f = testing_support::random_formula(rng, m, 5);
            TruthTable t = TruthTable::of(f, m);
            for (std::uint32_t i = 0; i < t.size(); ++i) {
                REQUIRE(t.bit(i) == eval(f, Ballot::from_lex_index(i, m)));
            }
        }
    }
}

TEST_CASE("tautology and satisfiability checks") {
    IssueSet issues = IssueSet::numbered(2);
    CHECK(is_tautology(parse("p1 | ~p1", issues), issues));
    CHECK_FALSE(is_tautology(parse("p1", issues), issues));
    CHECK(is_satisfiable(parse("p1 & p2", issues), issues));
    CHECK_FALSE(is_satisfiable(parse("p1 & ~p1", issues), issues));
}
