#pragma once

// Shared helpers for the unit and acceptance suites.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rx/heap.hpp"
#include "rx/lockstep.hpp"
#include "rx/process.hpp"

namespace rxtest {

// The a**b heap, the worked example shared across the suites:
//   p0 = seq(p1,p2) knode null; p1 = star(p3) knode p2; p2 = char b knode
//   null; p3 = star(p4) knode p1; p4 = char a knode p3.
inline rx::Heap example_heap() {
    return rx::compile(*rx::parse("a**b"));
}

// Replays the correctness factorization of the parallel-semantics proof
// alongside a run_macro micro-step sequence. At every step i the term
// must factor into messages Sends(S_i), untouched receivers pi_i, evolved
// character waiters E_i and dead messages D_i, with
//   evolve(S_0) = evolve(S_i  intersect  dom pi_i)  union  E_i
//   evolve(R_i) is a subset of the right-hand side      (R_i = visited)
//   targets of D_i are a subset of S_i union R_i
// and the multiset of waiters in the term must equal E_i's image.
struct ProcInvariantChecker {
    const rx::Heap& h;
    rx::AddrSet evolve_s0;
    std::set<rx::Addr> visited;   // R_i
    rx::AddrSet evolved;          // E_i
    uint64_t steps = 0;
    bool ok = true;
    std::string failure;

    ProcInvariantChecker(const rx::Heap& heap, const rx::AddrSet& s0)
        : h(heap), evolve_s0(rx::evolve(heap, s0)) {}

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            failure = what + " after step " + std::to_string(steps);
        }
    }

    void observe(const rx::MicroStep& step, const rx::ProcTerm& m) {
        ++steps;
        visited.insert(step.channel);
        if (h.node(step.channel).kind == rx::Node::Kind::Chr) evolved.insert(step.channel);

        std::set<rx::Addr> receivers;
        std::vector<rx::Addr> send_targets;
        std::vector<rx::SeqTerm> waiters;
        for (const rx::SeqTerm& t : m.terms) {
            switch (t.kind) {
            case rx::SeqTerm::Kind::Recv: receivers.insert(t.addr); break;
            case rx::SeqTerm::Kind::Send: send_targets.push_back(t.addr); break;
            case rx::SeqTerm::Kind::Sync: waiters.push_back(t); break;
            }
        }

        // factor the messages: live targets form S_i, the rest is D_i
        rx::AddrSet s_live;   // S_i intersect dom pi_i
        for (rx::Addr q : send_targets)
            if (receivers.contains(q)) s_live.insert(q);

        rx::AddrSet rhs = rx::evolve(h, s_live);
        rhs.insert(evolved.begin(), evolved.end());
        if (rhs != evolve_s0) fail("evolve(S0) != evolve(S_i) u E_i");

        rx::AddrSet r_set(visited.begin(), visited.end());
        for (rx::Addr q : rx::evolve(h, r_set))
            if (!rhs.contains(q)) fail("evolve(R_i) not subsumed");

        for (rx::Addr q : send_targets)
            if (q != rx::null_addr && !receivers.contains(q) && !visited.contains(q))
                fail("dead message to an unvisited node");

        std::vector<rx::SeqTerm> expected;
        for (rx::Addr p : evolved) {
            const rx::Node& n = h.node(p);
            expected.push_back(rx::sync_then(n.sym, {rx::send(h.knode(p))}));
        }
        auto less = [](const rx::SeqTerm& a, const rx::SeqTerm& b) { return rx::cmp(a, b) < 0; };
        std::sort(expected.begin(), expected.end(), less);
        std::sort(waiters.begin(), waiters.end(), less);
        if (expected != waiters) fail("waiting processes differ from E_i");
    }
};

} // namespace rxtest
