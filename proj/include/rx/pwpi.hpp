#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rx/heap.hpp"

namespace rx {

// PWpi configuration: one address (possibly null) and the position reached
// in the input. Accepting iff the address is null and the input is spent.
struct PwConfig {
    Addr at = null_addr;
    size_t pos = 0;
    bool operator==(const PwConfig&) const = default;
};

// Unlabeled micro steps from p, in fixed order: alternation left then
// right; sequence left; star body then the star's knode; eps its knode.
// Character nodes have no unlabeled step. Results may include null.
std::vector<Addr> eps_successors(const Heap& h, Addr p);

// The labeled step: knode(p) when the node at p is the character a,
// nothing otherwise (including a character mismatch). The returned address
// may be null.
std::optional<Addr> char_successor(const Heap& h, Addr p, Symbol a);

struct PwpiResult {
    bool accepted;
    std::vector<PwConfig> witness;   // accepting run incl. both endpoints; empty on reject
    uint64_t expanded;               // distinct (address, position) states expanded
};

// Complete decision by memoized depth-first search over the finite state
// space (|dom pi|+1 addresses x |w|+1 suffixes); states on the current
// path are marked in-progress so eps-cycles are cut.
PwpiResult pwpi_run(const Heap& h, InputView w);
bool pwpi_accepts(const Heap& h, InputView w);

// Reconstructs the EKW continuation for the address p by chasing knode
// and reading back each expression.
std::vector<RegexPtr> stackof(const Heap& h, Addr p);

// `<p3 | ab>`
std::string format(const Heap& h, const PwConfig& c, InputView w);

// One `... -> ...` line per witness step; `no accepting run` on reject.
std::string pwpi_trace(const Heap& h, InputView w);

} // namespace rx
