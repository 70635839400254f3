#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rx/heap.hpp"
#include "rx/lockstep.hpp"

namespace rx {

// Pointer list; index 0 is the head.
using AddrList = std::vector<Addr>;

// Cons p onto l1 iff p occurs in neither l1 nor l2; otherwise l1 unchanged.
AddrList addunique(Addr p, const AddrList& l1, const AddrList& l2);

// Body schedules the star's body child plus its knode, mirroring the
// star's two unlabeled micro steps. Literal is a known-broken variant
// that re-schedules the star node itself instead of its body, which
// loses matches (a* against "a"); kept as a regression guard.
enum class StarRule : uint8_t { Body, Literal };

// c: worklist being evolved this macro step; t: processed this macro step
// (c ++ t is duplicate-free); n: schedule for the next macro step; pos:
// input consumed. Accepting iff head of c is null and the input is spent.
struct SeqConfig {
    AddrList c, t, n;
    size_t pos = 0;
};

enum class SeqRule : uint8_t {
    Alt, Seq, Star, Eps, DropNull, Match, Mismatch, Swap, DiscardEoi, Stuck
};
const char* rule_name(SeqRule r);

struct SeqStep {
    SeqRule rule;      // Stuck when no rule applies; cfg is then unchanged
    SeqConfig cfg;
};

bool seq_accepting(const SeqConfig& cfg, InputView w);
SeqConfig seq_initial(const Heap& h);

// Applies the unique applicable transition. The rules are keyed on
// disjoint conditions, so this is a deterministic total step function.
SeqStep seq_step(const Heap& h, const SeqConfig& cfg, InputView w,
                 StarRule star_rule = StarRule::Body);

struct SeqRunStats {
    uint64_t steps = 0;
    std::vector<AddrSet> macro_sets;   // contents of n at each c/n swap
};

// Iterates seq_step from <[root]|[]|[]|w> until accepting (before a rule
// is applied) or Stuck. Always terminates.
bool seq_accepts(const Heap& h, InputView w, StarRule star_rule = StarRule::Body,
                 SeqRunStats* stats = nullptr);

// `<[p1,p2] | [p0] | [] | aab>`
std::string format(const SeqConfig& cfg, InputView w);

std::string seq_trace(const Heap& h, InputView w, StarRule star_rule = StarRule::Body);

} // namespace rx
