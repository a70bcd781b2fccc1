#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "primestar/errors.hpp"
#include "primestar/refuter.hpp"

using namespace primestar;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(PRIMESTAR_TEST_DATA_DIR) + "/dfa/" + name);
    REQUIRE_MESSAGE(in, "missing test file " << name);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

DfaSpec load(const std::string& name) { return parse_dfa(read_file(name)); }

bool oracle_contains(Language lang, const std::string& w, unsigned b) {
    return lang == Language::PbStar ? oracle::star_member(w, b) : oracle::factor_in_pb(w, b);
}

/// Re-scan every string up to the counterexample and confirm none disagrees earlier.
void check_shortest(const DfaSpec& dfa, Language lang, const Counterexample& c) {
    const std::string w = c.word();
    REQUIRE(dfa_accepts(dfa, w) == c.dfa_verdict);
    REQUIRE(oracle_contains(lang, w, dfa.base) == c.oracle_verdict);
    REQUIRE(c.dfa_verdict != c.oracle_verdict);
    for (unsigned len = 0; len <= w.size(); ++len) {
        for (const auto& s : oracle::all_strings(dfa.base, len)) {
            if (len == w.size() && s >= w) break;
            REQUIRE_MESSAGE(dfa_accepts(dfa, s) == oracle_contains(lang, s, dfa.base), s);
        }
    }
}

}  // namespace

TEST_CASE("parse_dfa accepts the corpus") {
    const auto all = load("accept_all.dfa");
    CHECK(all.base == 2);
    CHECK(all.state_count == 1);
    CHECK(all.accepting[0]);

    const auto tail = load("decimal_odd_tail.dfa");
    CHECK(tail.base == 10);
    CHECK(tail.transitions.size() == 20);

    const auto trie = load("star_agree6.dfa");
    CHECK(trie.state_count == 128);
}

TEST_CASE("parse_dfa errors") {
    auto error_line = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_dfa(text);
        } catch (const ValidationError& e) {
            return e.position();
        }
        FAIL("expected a validation error");
        return 999;
    };
    const std::string head = "base 2\nstates 2\nstart 0\naccept 1\n";

    // missing transition row
    CHECK_THROWS_WITH_AS(parse_dfa(head + "trans 0 0 0\ntrans 0 1 1\ntrans 1 0 0\n"),
                         doctest::Contains("incomplete"), ValidationError);
    // target index equal to the state count
    CHECK(error_line(head + "trans 0 0 0\ntrans 0 1 2\n") == 6);
    CHECK(error_line(head + "trans 0 0 0\ntrans 0 0 1\n") == 6);  // duplicate
    CHECK(error_line("base 2\nstates x\n") == 2);
    CHECK(error_line("states 2\n") == 1);
    CHECK(error_line("base 1\n") == 1);
    CHECK(error_line("base 2\nstates 2\nstart 2\n") == 3);
    CHECK(error_line(head + "trans 0 2 0\n") == 5);
    CHECK(error_line(head + "trans 0 1\n") == 5);
    CHECK_THROWS_AS(parse_dfa("base 2\nstates 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_dfa(""), ValidationError);
}

TEST_CASE("parse_dfa skips comments and blank lines, and round-trips") {
    const std::string text =
        "# header\n\nbase 2\n  states 1\nstart 0\n# none accepted\naccept\ntrans 0 1 0\ntrans 0 0 0\n";
    const auto dfa = parse_dfa(text);
    CHECK_FALSE(dfa.accepting[0]);
    for (const char* name : {"accept_all.dfa", "ends_in_one.dfa", "leading_one.dfa",
                             "decimal_odd_tail.dfa", "star_agree6.dfa"}) {
        const auto original = load(name);
        const auto again = parse_dfa(dfa_to_text(original));
        CHECK(again.transitions == original.transitions);
        CHECK(again.accepting == original.accepting);
        CHECK(again.start == original.start);
    }
}

TEST_CASE("dfa_accepts examples") {
    const auto all = load("accept_all.dfa");
    const auto none = load("reject_all.dfa");
    const auto tail = load("ends_in_one.dfa");
    CHECK(dfa_accepts(all, ""));
    CHECK_FALSE(dfa_accepts(none, ""));
    CHECK(dfa_accepts(all, "0110101"));
    CHECK_FALSE(dfa_accepts(tail, "10"));
    CHECK(dfa_accepts(tail, "101"));
    CHECK_THROWS_AS(dfa_accepts(tail, "12"), ValidationError);
}

TEST_CASE("find_counterexample on the trivial automata") {
    auto accept_all = find_counterexample(load("accept_all.dfa"), Language::PbStar, 18);
    REQUIRE(accept_all.counterexample);
    CHECK(accept_all.counterexample->word() == "0");
    CHECK(accept_all.counterexample->dfa_verdict);
    CHECK_FALSE(accept_all.counterexample->oracle_verdict);

    auto reject_all = find_counterexample(load("reject_all.dfa"), Language::PbStar, 18);
    REQUIRE(reject_all.counterexample);
    CHECK(reject_all.counterexample->word().empty());
    CHECK(reject_all.counterexample->oracle_verdict);

    // "" is outside P_b, so the reject-all machine first fails on "10"
    auto pb = find_counterexample(load("reject_all.dfa"), Language::Pb, 18);
    REQUIRE(pb.counterexample);
    CHECK(pb.counterexample->word() == "10");
}

TEST_CASE("find_counterexample returns verified shortest disagreements") {
    for (const char* name : {"accept_all.dfa", "reject_all.dfa", "ends_in_one.dfa",
                             "leading_one.dfa", "decimal_odd_tail.dfa", "star_agree6.dfa"}) {
        const auto dfa = load(name);
        for (Language lang : {Language::Pb, Language::PbStar}) {
            const auto search = find_counterexample(dfa, lang, dfa.base == 2 ? 12 : 4);
            REQUIRE_MESSAGE(search.counterexample, name);
            check_shortest(dfa, lang, *search.counterexample);
        }
    }
    const auto trie = find_counterexample(load("star_agree6.dfa"), Language::PbStar, 18);
    REQUIRE(trie.counterexample);
    CHECK(trie.counterexample->word() == "1000011");  // 67
    CHECK(trie.explored_length == 7);
}

TEST_CASE("find_counterexample reports an exhausted bound honestly") {
    const auto search = find_counterexample(load("star_agree6.dfa"), Language::PbStar, 6);
    CHECK_FALSE(search.counterexample);
    CHECK(search.explored_length == 6);
    CHECK(search.strings_checked == 127);
}

TEST_CASE("pumping_refutation for b = 2, p = 1") {
    const auto r = pumping_refutation(2, 1, 20, 100);
    CHECK(r.pumping_bound == 2);
    CHECK(r.N == 5);
    CHECK(r.fbN == 3);
    CHECK(r.s.str() == "1100001");
    CHECK(r.s_in_star);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].x.empty());
    CHECK(r.rows[0].y == "1");
    CHECK(r.rows[0].z == "100001");
    CHECK_FALSE(r.rows[0].pumped_down_in_star);
    CHECK(r.complete());
}

TEST_CASE("pumping_refutation for b = 2, p = 2") {
    const auto r = pumping_refutation(2, 2, 20, 100);
    CHECK(r.N == 9);
    CHECK(r.fbN == 15);
    CHECK(r.s.str() == "1111000000001");
    CHECK(r.s_in_star);
    REQUIRE(r.rows.size() == 3);
    for (const auto& row : r.rows) CHECK_FALSE(row.pumped_down_in_star);
    CHECK(r.complete());
}

TEST_CASE("pumping_refutation for b = 10, p = 1") {
    // f_10(n) for n = 1..6 is 1, 1, 3, 7, 7, 22; the first value above 10 is at n = 6
    const auto r = pumping_refutation(10, 1, 20, 100);
    CHECK(r.N == 6);
    CHECK(r.fbN == 22);
    CHECK(r.s.str() == "22000001");
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].x + r.rows[0].z == "2000001");
    CHECK(r.complete());
}

TEST_CASE("refutation rows are complete and consistent with the witness family") {
    struct Case {
        unsigned b, p;
    };
    for (Case c : {Case{2, 1}, Case{2, 2}, Case{2, 3}, Case{3, 1}, Case{3, 2}, Case{10, 1}, Case{5, 1}}) {
        const auto r = pumping_refutation(c.b, c.p, 40, 10'000);
        REQUIRE(r.fbN > r.pumping_bound);
        REQUIRE(r.s.size() >= c.p + 1);
        REQUIRE(r.rows.size() == c.p * (c.p + 1) / 2);
        REQUIRE(r.s_in_star);
        REQUIRE(r.complete());
        REQUIRE(in_pb(r.s.str(), c.b).member);

        Natural power;
        mpz_ui_pow_ui(power.get_mpz_t(), c.b, r.N);
        for (const auto& row : r.rows) {
            REQUIRE(row.x + row.y + row.z == r.s.str());
            REQUIRE(row.y.size() >= 1);
            REQUIRE(row.x.size() + row.y.size() <= c.p);
            const std::string xz = row.x + row.z;
            if (xz.front() == '0') continue;
            const Natural value = from_base(xz, c.b) - 1;
            REQUIRE(value % power == 0);
            const Natural k = value / power;
            REQUIRE(k >= 0);
            REQUIRE(k < r.fbN);
        }
    }
}

TEST_CASE("pumping_refutation propagates search budgets") {
    CHECK_THROWS_AS(pumping_refutation(2, 2, 8, 100), ScanExhausted);
    CHECK_THROWS_AS(pumping_refutation(2, 0, 8, 100), DomainError);
}

TEST_CASE("pumping_counterexample defeats small automata") {
    const auto all = load("accept_all.dfa");
    const auto r1 = pumping_refutation(2, 1, 20, 100);
    const auto c1 = pumping_counterexample(all, r1);
    REQUIRE(c1);
    CHECK(c1->word() == "100001");
    CHECK(c1->dfa_verdict);
    CHECK_FALSE(oracle::star_member(c1->word(), 2));

    const auto none = load("reject_all.dfa");
    const auto c0 = pumping_counterexample(none, r1);
    REQUIRE(c0);
    CHECK(c0->word() == "1100001");
    CHECK(c0->oracle_verdict);

    for (const char* name : {"ends_in_one.dfa", "leading_one.dfa"}) {
        const auto dfa = load(name);
        const auto r = pumping_refutation(2, static_cast<unsigned>(dfa.state_count), 40, 10'000);
        const auto c = pumping_counterexample(dfa, r);
        REQUIRE_MESSAGE(c, name);
        CHECK(dfa_accepts(dfa, c->word()) != in_pb_star(c->word(), 2).member);
    }
}

TEST_CASE("refutation and search JSON") {
    const auto r = pumping_refutation(2, 2, 20, 100);
    const auto j = nlohmann::json::parse(refutation_to_json(r));
    CHECK(j["s"] == "1111000000001");
    CHECK(j["N"] == "9");
    CHECK(j["fbN"] == "15");
    CHECK(j["row_count"] == 3);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["verdict"] == "rejected");
    CHECK(j["complete"] == true);

    const auto s = nlohmann::json::parse(search_to_json(find_counterexample(load("accept_all.dfa"), Language::PbStar, 5)));
    CHECK(s["found"] == true);
    CHECK(s["counterexample"]["word"] == "0");
    CHECK(s["language"] == "PbStar");
}
