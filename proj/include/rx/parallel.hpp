#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rx/heap.hpp"
#include "rx/lockstep.hpp"

namespace rx {

// Shared per-run state of the counter-vector protocol. c[i] == t means
// node i is scheduled and unprocessed in macro step t; c[i] == -t means it
// has been claimed and simulated; any other value is inert (stale values
// from earlier steps are distinguished by exact magnitude, never cleared).
// n[j] == t+1 schedules node j for the next macro step. The null address
// is not carried on the vectors: a null continuation emitted during the
// current step sets accept_pending, one emitted by a character match sets
// accept_next, which the swap carries into the new step.
struct ParState {
    explicit ParState(size_t nodes);

    std::vector<std::atomic<int64_t>> c, n;
    int64_t t = 1;
    std::atomic<bool> more_c{false};
    std::atomic<bool> any_n{false};
    std::atomic<bool> accept_pending{false};
    std::atomic<bool> accept_next{false};
    // instrumentation: claims per node within the current macro step
    std::vector<std::atomic<uint32_t>> claim_count;

    void schedule_root(Addr root);
    AddrSet current_schedule() const;        // {i : c[i] == t}
    AddrSet next_schedule() const;           // {j : n[j] == t+1}
    AddrSet claimed() const;                 // {i : c[i] == -t}
    void swap_step();                        // swap c/n, ++t, carry accept flags
};

inline constexpr Symbol end_of_input = 0xFFFFFFFF;   // not a Unicode scalar

// The per-node task: claim node i (exactly one concurrent claimant of a
// scheduled node succeeds; everyone else no-ops), then either forward the
// schedule along the node's unlabeled steps or, on a character node, test
// the current symbol and schedule its knode for the next macro step.
// `a == end_of_input` makes every character test fail.
void par_task(const Heap& h, ParState& st, Addr i, Symbol a);

struct ParStats {
    uint64_t claims = 0;
    uint64_t launches = 0;               // barrier-delimited rounds
    uint64_t macro_steps = 0;
    uint32_t max_claims_per_node_step = 0;
    std::vector<size_t> schedule_sizes;  // nodes scheduled per macro step
};

struct RoundOutcome {
    AddrSet claimed;          // nodes simulated during this macro step
    AddrSet next;             // schedule collected for the next step
    bool accept_pending = false;
    bool accept_next = false;
    uint64_t launches = 0;
};

// Runs W workers over repeated barrier-delimited rounds ("kernel
// launches"), dispatching par_task for every currently scheduled node,
// until no round schedules further work; with a symbol, then swaps c/n and
// increments t. One matcher drives one match run at a time; with
// workers == 1 the tasks run inline on the calling thread.
class ParallelMatcher {
public:
    explicit ParallelMatcher(unsigned workers, uint64_t seed = 0);
    ~ParallelMatcher();

    ParallelMatcher(const ParallelMatcher&) = delete;
    ParallelMatcher& operator=(const ParallelMatcher&) = delete;

    unsigned workers() const { return workers_; }

    // One macro step: evolution rounds, then (unless at end of input) the
    // c/n swap. The outcome is snapshotted just before the swap.
    RoundOutcome macro_step(const Heap& h, ParState& st, std::optional<Symbol> a,
                            ParStats* stats = nullptr);

    bool accepts(const Heap& h, InputView w, ParStats* stats = nullptr);

private:
    struct Round;
    void worker_loop(unsigned id);
    void run_rounds(const Heap& h, ParState& st, Symbol a, RoundOutcome& out, ParStats* stats);

    unsigned workers_;
    uint64_t seed_;
    std::vector<std::thread> threads_;
    std::unique_ptr<Round> round_;   // shared round state (W > 1 only)
};

// Convenience wrapper: fresh matcher, one run.
bool par_accepts(const Heap& h, InputView w, unsigned workers, uint64_t seed,
                 ParStats* stats = nullptr);

// Text report of the instrumentation counters for one run.
std::string par_report(const Heap& h, InputView w, unsigned workers, uint64_t seed);

} // namespace rx
