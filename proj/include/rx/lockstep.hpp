#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rx/heap.hpp"
#include "rx/pwpi.hpp"

namespace rx {

// Pointer set for the lockstep machines; may contain null_addr.
using AddrSet = std::set<Addr>;

struct LockstepStats {
    uint64_t enqueued = 0;   // addresses pushed onto evolve worklists
};

// The character-labeled nodes eps-reachable from s. Not a closure
// operator: members of s that are not character nodes are dropped. Null
// members contribute nothing. FIFO worklist, each address enqueued at most
// once.
AddrSet evolve(const Heap& h, const AddrSet& s, LockstepStats* stats = nullptr);

// Same result in worklist discovery order (trace output).
std::vector<Addr> evolve_ordered(const Heap& h, const AddrSet& s, LockstepStats* stats = nullptr);

// True iff null is in s or some member eps-reaches the null address.
bool eps_reaches_null(const Heap& h, const AddrSet& s);

// Advances every member that is a character node labeled a to its knode;
// everything else is deleted as an unsuccessful match. Requires s to be
// already evolved: a member that is neither a character node nor null
// throws std::invalid_argument.
AddrSet step_char(const Heap& h, const AddrSet& s, Symbol a);

// Runs {root} through evolve/step_char per input symbol; accepts at end of
// input iff null is in the final set or eps-reachable from it. (The raw
// null-in-S acceptance alone can never fire on the empty string because
// evolve's codomain is character nodes; the eps_reaches_null disjunct
// repairs that.)
bool lockstep_accepts(const Heap& h, InputView w, LockstepStats* stats = nullptr);

// `{p0} =eps=> {p2,p4} =a=> {p3}` per consumed symbol, then the
// end-of-input acceptance line.
std::string lockstep_trace(const Heap& h, InputView w);

std::string format(const AddrSet& s);

} // namespace rx
