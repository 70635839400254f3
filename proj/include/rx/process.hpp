#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rx/heap.hpp"
#include "rx/lockstep.hpp"

namespace rx {

// A sequential process term: an asynchronous message, a one-shot receiver
// prefix, or a character-synchronization prefix.
struct SeqTerm {
    enum class Kind : uint8_t { Send, Recv, Sync };
    Kind kind;
    Addr addr = null_addr;        // Send: target (may be null); Recv: channel
    Symbol sym = 0;               // Sync
    std::vector<SeqTerm> body;    // Recv/Sync continuation, kept sorted
};

int cmp(const SeqTerm& a, const SeqTerm& b);
bool operator==(const SeqTerm& a, const SeqTerm& b);

SeqTerm send(Addr p);
SeqTerm recv_then(Addr chan, std::vector<SeqTerm> body);
SeqTerm sync_then(Symbol a, std::vector<SeqTerm> body);

// A parallel composition as a multiset of sequential terms: the sorted
// vector is the canonical representative modulo associativity and
// commutativity, so multiset equality decides structural congruence.
struct ProcTerm {
    std::vector<SeqTerm> terms;   // sorted by cmp

    void insert(SeqTerm t);
    bool erase_one(const SeqTerm& t);
    bool contains(const SeqTerm& t) const;
    size_t count(const SeqTerm& t) const;
    bool operator==(const ProcTerm&) const = default;
};

// One application of the communication rule under parallel closure.
struct MicroStep {
    Addr channel;       // the consumed message's target
    SeqTerm receiver;   // the consumed one-shot receiver
};

// The dedicated receiver process for the node at p: alternation forwards
// to both children, sequence to its left child, star to its body and its
// knode, eps to its knode; a character node waits to synchronize on its
// symbol before forwarding to its knode.
SeqTerm translate_node(const Heap& h, Addr p);

// Receivers for every address in the heap.
ProcTerm translate_heap(const Heap& h);

ProcTerm sends_of(const AddrSet& s);

// Every enabled communication: one entry per distinct (message, receiver)
// pairing present in the multiset, with the resulting term. Messages to
// null never fire (nothing listens on null).
std::vector<std::pair<MicroStep, ProcTerm>> micro_steps(const ProcTerm& m);

// The n-way synchronization on a: enabled only when no communication is
// possible and at least one a-prefixed term is present; all a-prefixed
// terms advance simultaneously and everything else is discarded.
// std::nullopt when not enabled.
std::optional<ProcTerm> sync_step(const ProcTerm& m, Symbol a);

// Called after each micro step with the step taken and the resulting term.
using MicroObserver = std::function<void(const MicroStep&, const ProcTerm&)>;

// One macro step: feeds messages for `pending` into fresh receivers for
// the whole heap, exhausts communications under a uniformly random
// schedule, synchronizes on a, and returns the resulting message targets.
// Empty set when the synchronization cannot fire. The result does not
// depend on the schedule; the rng only picks interleavings.
AddrSet run_macro(const Heap& h, const AddrSet& pending, Symbol a, std::mt19937_64& rng,
                  const MicroObserver& observer = {});

struct ProcStats {
    uint64_t micro_steps = 0;
};

// Threads run_macro over the input from {root}; at end of input feeds the
// residual messages into fresh receivers once more and accepts iff a
// message to null shows up during that final exhaustion.
bool proc_accepts(const Heap& h, InputView w, uint64_t seed = 0, ProcStats* stats = nullptr);

// `p0! | p1.(p3! | p2!) | a.p3!`; `0` for the empty composition.
std::string print_term(const ProcTerm& m);
std::string print_term(const SeqTerm& t);

// Seeded-schedule debugging dump: every micro step and synchronization.
std::string proc_trace(const Heap& h, InputView w, uint64_t seed = 0);

} // namespace rx
