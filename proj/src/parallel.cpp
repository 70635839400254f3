#include "rx/parallel.hpp"

#include <algorithm>
#include <barrier>
#include <cassert>
#include <random>

#include "rx/pwpi.hpp"

namespace rx {

ParState::ParState(size_t nodes)
    : c(nodes), n(nodes), claim_count(nodes) {}

void ParState::schedule_root(Addr root) {
    c[static_cast<size_t>(root)].store(t);
}

AddrSet ParState::current_schedule() const {
    AddrSet s;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].load() == t) s.insert(static_cast<Addr>(i));
    return s;
}

AddrSet ParState::next_schedule() const {
    AddrSet s;
    for (size_t j = 0; j < n.size(); ++j)
        if (n[j].load() == t + 1) s.insert(static_cast<Addr>(j));
    return s;
}

AddrSet ParState::claimed() const {
    AddrSet s;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].load() == -t) s.insert(static_cast<Addr>(i));
    return s;
}

void ParState::swap_step() {
    c.swap(n);
    t += 1;
    accept_pending.store(accept_next.load());
    accept_next.store(false);
    more_c.store(false);
    any_n.store(false);
    for (auto& cc : claim_count) cc.store(0);
}

void par_task(const Heap& h, ParState& st, Addr i, Symbol a) {
    int64_t t = st.t;
    int64_t expected = t;
    // claim: exactly one concurrent claimant of a scheduled node wins
    if (!st.c[static_cast<size_t>(i)].compare_exchange_strong(expected, -t)) return;
    st.claim_count[static_cast<size_t>(i)].fetch_add(1);
    const Node& node = h.node(i);
    if (node.kind == Node::Kind::Chr) {
        if (a != end_of_input && node.sym == a) {
            Addr j = h.knode(i);
            if (j == null_addr)
                st.accept_next.store(true);
            else
                st.n[static_cast<size_t>(j)].store(t + 1);
            st.any_n.store(true);
        }
        return;   // mismatch or end of input: the attempt dies
    }
    for (Addr q : eps_successors(h, i)) {
        if (q == null_addr) {
            st.accept_pending.store(true);
            continue;
        }
        int64_t v = st.c[static_cast<size_t>(q)].load();
        if (v == t || v == -t) continue;   // already scheduled or simulated
        st.c[static_cast<size_t>(q)].store(t);   // racing stores write the same value
        st.more_c.store(true);
    }
}

// ── Worker pool ────────────────────────────────────────────────────────

struct ParallelMatcher::Round {
    explicit Round(unsigned participants) : start(participants), done(participants) {}
    std::barrier<> start, done;
    std::atomic<bool> quit{false};
    const Heap* heap = nullptr;
    ParState* st = nullptr;
    Symbol sym = end_of_input;
    std::vector<std::vector<Addr>> slices;
};

ParallelMatcher::ParallelMatcher(unsigned workers, uint64_t seed)
    : workers_(workers == 0 ? 1 : workers), seed_(seed) {
    if (workers_ > 1) {
        round_ = std::make_unique<Round>(workers_ + 1);
        round_->slices.resize(workers_);
        threads_.reserve(workers_);
        for (unsigned id = 0; id < workers_; ++id)
            threads_.emplace_back([this, id] { worker_loop(id); });
    }
}

ParallelMatcher::~ParallelMatcher() {
    if (round_) {
        round_->quit.store(true);
        round_->start.arrive_and_wait();
        for (auto& th : threads_) th.join();
    }
}

void ParallelMatcher::worker_loop(unsigned id) {
    for (;;) {
        round_->start.arrive_and_wait();
        if (round_->quit.load()) return;
        for (Addr i : round_->slices[id]) par_task(*round_->heap, *round_->st, i, round_->sym);
        round_->done.arrive_and_wait();
    }
}

void ParallelMatcher::run_rounds(const Heap& h, ParState& st, Symbol a, RoundOutcome& out,
                                 ParStats* stats) {
    uint64_t launch = 0;
    for (;;) {
        st.more_c.store(false);
        std::vector<Addr> dispatch;
        for (Addr i = 0; i < h.size(); ++i)
            if (st.c[static_cast<size_t>(i)].load() == st.t) dispatch.push_back(i);
        ++launch;
        if (!dispatch.empty()) {
            if (workers_ == 1) {
                std::mt19937_64 rng(seed_ ^ (launch * 0x9E3779B97F4A7C15ull));
                std::shuffle(dispatch.begin(), dispatch.end(), rng);
                for (Addr i : dispatch) par_task(h, st, i, a);
            } else {
                for (auto& slice : round_->slices) slice.clear();
                for (size_t k = 0; k < dispatch.size(); ++k)
                    round_->slices[k % workers_].push_back(dispatch[k]);
                for (unsigned id = 0; id < workers_; ++id) {
                    std::mt19937_64 rng(seed_ ^ (launch * 0x9E3779B97F4A7C15ull) ^
                                        ((id + 1) * 0xBF58476D1CE4E5B9ull));
                    std::shuffle(round_->slices[id].begin(), round_->slices[id].end(), rng);
                }
                round_->heap = &h;
                round_->st = &st;
                round_->sym = a;
                round_->start.arrive_and_wait();
                round_->done.arrive_and_wait();
            }
        }
        if (!st.more_c.load()) break;
    }
    out.launches = launch;
    if (stats) stats->launches += launch;
}

RoundOutcome ParallelMatcher::macro_step(const Heap& h, ParState& st, std::optional<Symbol> a,
                                         ParStats* stats) {
    assert(st.c.size() == static_cast<size_t>(h.size()));
    RoundOutcome out;
    if (stats) {
        ++stats->macro_steps;
        stats->schedule_sizes.push_back(st.current_schedule().size());
    }
    run_rounds(h, st, a.value_or(end_of_input), out, stats);
    out.claimed = st.claimed();
    out.next = st.next_schedule();
    out.accept_pending = st.accept_pending.load();
    out.accept_next = st.accept_next.load();
    if (stats) {
        for (const auto& cc : st.claim_count) {
            uint32_t k = cc.load();
            stats->claims += k;
            stats->max_claims_per_node_step = std::max(stats->max_claims_per_node_step, k);
        }
    }
    if (a) st.swap_step();
    return out;
}

bool ParallelMatcher::accepts(const Heap& h, InputView w, ParStats* stats) {
    ParState st(static_cast<size_t>(h.size()));
    st.schedule_root(h.root());
    for (Symbol a : w) {
        RoundOutcome out = macro_step(h, st, a, stats);
        // any_n stayed clear: no character matched, every attempt died
        if (out.next.empty() && !out.accept_next) return false;
    }
    macro_step(h, st, std::nullopt, stats);
    return st.accept_pending.load();
}

bool par_accepts(const Heap& h, InputView w, unsigned workers, uint64_t seed, ParStats* stats) {
    ParallelMatcher m(workers, seed);
    return m.accepts(h, w, stats);
}

std::string par_report(const Heap& h, InputView w, unsigned workers, uint64_t seed) {
    ParStats stats;
    bool ok = par_accepts(h, w, workers, seed, &stats);
    std::string out;
    out += "workers\t" + std::to_string(workers) + "\n";
    out += "seed\t" + std::to_string(seed) + "\n";
    out += "macro steps\t" + std::to_string(stats.macro_steps) + "\n";
    out += "kernel launches\t" + std::to_string(stats.launches) + "\n";
    out += "claims\t" + std::to_string(stats.claims) + "\n";
    out += "max claims per node per step\t" + std::to_string(stats.max_claims_per_node_step) + "\n";
    out += "schedule sizes\t";
    for (size_t i = 0; i < stats.schedule_sizes.size(); ++i)
        out += (i ? " " : "") + std::to_string(stats.schedule_sizes[i]);
    out += "\nresult\t";
    out += ok ? "accept" : "reject";
    out += "\n";
    return out;
}

} // namespace rx
