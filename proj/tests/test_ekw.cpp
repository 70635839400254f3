#include <doctest.h>

#include "rx/crosscheck.hpp"
#include "rx/ekw.hpp"
#include "rx/oracle.hpp"

using namespace rx;

TEST_SUITE_BEGIN("ekw");

namespace {

EkwConfig cfg(RegexPtr e, std::vector<RegexPtr> k, size_t pos) {
    return EkwConfig{std::move(e), std::move(k), pos};
}

bool same(const EkwConfig& a, const EkwConfig& b) { return cmp(a, b) == 0; }

} // namespace

TEST_CASE("successors of the star example") {
    Input w = U"a";
    RegexPtr astarstar = parse("a**");
    auto succ = ekw_successors(cfg(astarstar, {}, 0), w);
    REQUIRE(succ.size() == 2);
    CHECK(succ[0].rule == EkwRule::StarUnfold);
    CHECK(same(succ[0].to, cfg(parse("a*"), {astarstar}, 0)));
    CHECK(succ[1].rule == EkwRule::StarExit);
    CHECK(same(succ[1].to, cfg(eps(), {}, 0)));
}

TEST_CASE("match and stuck successors") {
    Input w = U"a";
    auto succ = ekw_successors(cfg(chr(U'a'), {}, 0), w);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].rule == EkwRule::Match);
    CHECK(same(succ[0].to, cfg(eps(), {}, 1)));

    CHECK(ekw_successors(cfg(chr(U'b'), {}, 0), w).empty());
    CHECK(ekw_successors(cfg(eps(), {}, 0), w).empty());
}

TEST_CASE("alt, seq and pop successors") {
    Input w = U"";
    RegexPtr ab = parse("a|b");
    auto succ = ekw_successors(cfg(ab, {}, 0), w);
    REQUIRE(succ.size() == 2);
    CHECK(succ[0].rule == EkwRule::Alt1);
    CHECK(succ[1].rule == EkwRule::Alt2);

    RegexPtr s = parse("ab");
    succ = ekw_successors(cfg(s, {chr(U'c')}, 0), w);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].rule == EkwRule::Seq);
    CHECK(same(succ[0].to, cfg(chr(U'a'), {chr(U'b'), chr(U'c')}, 0)));

    succ = ekw_successors(cfg(eps(), {chr(U'b')}, 0), w);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].rule == EkwRule::Pop);
    CHECK(same(succ[0].to, cfg(chr(U'b'), {}, 0)));
}

TEST_CASE("the raw transition graph contains the infinite-loop cycle") {
    // <a** | [] | a> -> <a* | [a**] | a> -> <() | [a**] | a> -> <a** | [] | a>
    Input w = U"a";
    RegexPtr astarstar = parse("a**");
    EkwConfig c0 = cfg(astarstar, {}, 0);
    auto s0 = ekw_successors(c0, w);
    REQUIRE(!s0.empty());
    EkwConfig c1 = s0[0].to;
    CHECK(same(c1, cfg(parse("a*"), {astarstar}, 0)));
    auto s1 = ekw_successors(c1, w);
    REQUIRE(s1.size() == 2);
    EkwConfig c2 = s1[1].to;   // star exit
    CHECK(same(c2, cfg(eps(), {astarstar}, 0)));
    auto s2 = ekw_successors(c2, w);
    REQUIRE(s2.size() == 1);
    CHECK(same(s2[0].to, c0));   // the cycle closes
}

TEST_CASE("accepts on the worked examples") {
    CHECK(ekw_accepts(*parse("a**b"), U"aab", 10000).outcome == EkwOutcome::Accept);
    CHECK(ekw_accepts(*parse("a**"), U"a", 10000).outcome == EkwOutcome::Accept);
    CHECK(ekw_accepts(*eps(), U"", 1).outcome == EkwOutcome::Accept);
    CHECK(ekw_accepts(*chr(U'a'), U"b", 10000).outcome == EkwOutcome::Reject);
}

TEST_CASE("budget exhaustion is reported, not misreported") {
    EkwResult r = ekw_accepts(*parse("(a*)*b"), U"aaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", 50);
    CHECK(r.outcome == EkwOutcome::BudgetExhausted);
    CHECK(r.steps >= 50);
}

TEST_CASE("raw search loops where the pruned search concludes") {
    RegexPtr e = parse("(a*)*b");
    Input w(20, U'a');
    w.push_back(U'b');
    CHECK(ekw_accepts(*e, w, 100'000, EkwPruning::None).outcome ==
          EkwOutcome::BudgetExhausted);
    CHECK(ekw_accepts(*e, w, 100'000, EkwPruning::PerPath).outcome == EkwOutcome::Accept);
    // on loop-free searches the two modes agree
    CHECK(ekw_accepts(*parse("ab|ba"), U"ba", 100'000, EkwPruning::None).outcome ==
          EkwOutcome::Accept);
}

TEST_CASE("step locality: every successor revalidates against its rule") {
    const Symbol alphabet[] = {U'a', U'b'};
    std::vector<Input> strings = enumerate_strings(2, alphabet);
    for (const RegexPtr& e : enumerate_regexes(4, alphabet)) {
        for (const Input& w : strings) {
            EkwConfig c = ekw_initial(e);
            for (const EkwStep& s : ekw_successors(c, w)) {
                switch (s.rule) {
                case EkwRule::Alt1:
                    CHECK(c.current->kind == Regex::Kind::Alt);
                    CHECK(equal(s.to.current, c.current->left));
                    break;
                case EkwRule::Alt2:
                    CHECK(c.current->kind == Regex::Kind::Alt);
                    CHECK(equal(s.to.current, c.current->right));
                    break;
                case EkwRule::Seq:
                    CHECK(c.current->kind == Regex::Kind::Seq);
                    REQUIRE(!s.to.kont.empty());
                    CHECK(equal(s.to.kont.front(), c.current->right));
                    break;
                case EkwRule::StarUnfold:
                    CHECK(c.current->kind == Regex::Kind::Star);
                    REQUIRE(!s.to.kont.empty());
                    CHECK(equal(s.to.kont.front(), c.current));
                    break;
                case EkwRule::StarExit:
                    CHECK(c.current->kind == Regex::Kind::Star);
                    CHECK(s.to.current->kind == Regex::Kind::Eps);
                    break;
                case EkwRule::Match:
                    CHECK(c.current->kind == Regex::Kind::Chr);
                    CHECK(c.pos < w.size());
                    CHECK(w[c.pos] == c.current->sym);
                    CHECK(s.to.pos == c.pos + 1);
                    break;
                case EkwRule::Pop:
                    CHECK(c.current->kind == Regex::Kind::Eps);
                    CHECK(!c.kont.empty());
                    break;
                }
            }
        }
    }
}

TEST_CASE("oracle equivalence on a small suite") {
    // the full bound-8/length-6 sweep lives in the acceptance suite
    const Symbol alphabet[] = {U'a', U'b'};
    std::vector<Input> strings = enumerate_strings(4, alphabet);
    for (const RegexPtr& e : enumerate_regexes(5, alphabet)) {
        for (const Input& w : strings) {
            EkwResult r = ekw_accepts(*e, w, UINT64_MAX);
            REQUIRE(r.outcome != EkwOutcome::BudgetExhausted);
            CHECK((r.outcome == EkwOutcome::Accept) == oracle_matches(*e, w));
        }
    }
}

TEST_CASE("trace shows cycles") {
    std::string t = ekw_trace(*parse("a**"), U"a", 10000);
    CHECK(t.find("(cycle)") != std::string::npos);
    CHECK(t.find("accept") != std::string::npos);
}

TEST_SUITE_END();
