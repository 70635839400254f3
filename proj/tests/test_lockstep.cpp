#include <doctest.h>

#include <stdexcept>

#include "rx/crosscheck.hpp"
#include "rx/lockstep.hpp"
#include "rx/oracle.hpp"
#include "rx/pwpi.hpp"
#include "support.hpp"

using namespace rx;

TEST_SUITE_BEGIN("lockstep");

TEST_CASE("evolve on the worked example") {
    Heap h = rxtest::example_heap();
    CHECK(evolve(h, {0}) == AddrSet{4, 2});
    CHECK(evolve(h, {3}) == AddrSet{4, 2});
    CHECK(evolve(h, {}) == AddrSet{});
    CHECK(evolve(h, {null_addr}) == AddrSet{});
    // character members evolve to themselves
    CHECK(evolve(h, {2}) == AddrSet{2});
}

TEST_CASE("evolve is not a closure operator") {
    Heap h = compile(*parse("ab"));
    AddrSet s{h.root()};
    AddrSet evolved = evolve(h, s);
    CHECK_FALSE(evolved.contains(h.root()));
    // S is not a subset of evolve(S)
    CHECK_FALSE(std::includes(evolved.begin(), evolved.end(), s.begin(), s.end()));
}

TEST_CASE("eps_reaches_null") {
    CHECK(eps_reaches_null(compile(*parse("a**")), {0}));
    CHECK_FALSE(eps_reaches_null(compile(*parse("ab")), {0}));
    CHECK(eps_reaches_null(compile(*parse("ab")), {null_addr}));
    Heap h = rxtest::example_heap();
    CHECK_FALSE(eps_reaches_null(h, {0}));   // every eps path stops at a or b
    CHECK(eps_reaches_null(h, {2}) == false);
}

TEST_CASE("step_char on the worked example") {
    Heap h = rxtest::example_heap();
    CHECK(step_char(h, {4, 2}, U'a') == AddrSet{3});
    CHECK(step_char(h, {4, 2}, U'b') == AddrSet{null_addr});
    CHECK(step_char(h, {}, U'a') == AddrSet{});
    CHECK(step_char(h, {null_addr}, U'a') == AddrSet{});
    CHECK_THROWS_AS(step_char(h, {0}, U'a'), std::invalid_argument);
}

TEST_CASE("acceptance on the worked examples") {
    CHECK(lockstep_accepts(rxtest::example_heap(), U"aab"));
    CHECK_FALSE(lockstep_accepts(rxtest::example_heap(), U"aa"));
    CHECK(lockstep_accepts(compile(*parse("a**")), U""));
    CHECK(lockstep_accepts(compile(*eps()), U""));
    CHECK_FALSE(lockstep_accepts(compile(*chr(U'a')), U""));
}

TEST_CASE("agreement with pwpi on a small suite, with the work bound") {
    const Symbol alphabet[] = {U'a', U'b'};
    std::vector<Input> strings = enumerate_strings(4, alphabet);
    for (const RegexPtr& e : enumerate_regexes(5, alphabet)) {
        Heap h = compile(*e);
        for (const Input& w : strings) {
            LockstepStats stats;
            bool got = lockstep_accepts(h, w, &stats);
            CHECK(got == pwpi_accepts(h, w));
            CHECK(stats.enqueued <= (w.size() + 1) * static_cast<uint64_t>(h.size()));
        }
    }
}

TEST_CASE("evolve and step_char are deterministic") {
    Heap h = rxtest::example_heap();
    for (int i = 0; i < 3; ++i) {
        CHECK(evolve(h, {0, 3}) == evolve(h, {0, 3}));
        CHECK(step_char(h, {4, 2}, U'a') == step_char(h, {4, 2}, U'a'));
    }
}

TEST_CASE("trace format") {
    std::string t = lockstep_trace(rxtest::example_heap(), U"aab");
    CHECK(t.find("{p0} =eps=> {p2,p4} =a=> {p3}") != std::string::npos);
    CHECK(t.find("accept") != std::string::npos);
}

TEST_SUITE_END();
