#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rx/regex.hpp"

namespace rx {

// Node address: a dense index into the heap's node table, or the
// distinguished null address, which maps to no node.
using Addr = int32_t;
inline constexpr Addr null_addr = -1;

struct Node {
    enum class Kind : uint8_t { Eps, Chr, Alt, Seq, Star };
    Kind kind;
    Symbol sym = 0;           // Chr
    Addr left = null_addr;    // Star body; Alt/Seq left
    Addr right = null_addr;   // Alt/Seq right
};

// The address-indexed syntax-tree store with its continuation map: the
// program every machine interprets. Immutable after compile(); safe to
// share across concurrent workers.
struct Heap {
    std::vector<Node> nodes;    // address p -> node
    std::vector<Addr> knodes;   // address p -> continuation address (may be null)

    Addr root() const { return 0; }
    Addr size() const { return static_cast<Addr>(nodes.size()); }
    bool contains(Addr p) const { return p >= 0 && p < size(); }
    const Node& node(Addr p) const { return nodes[static_cast<size_t>(p)]; }
    Addr knode(Addr p) const { return knodes[static_cast<size_t>(p)]; }
};

// Lays out `e` in a fresh heap and wires the continuation map in a second
// pass. Addresses are assigned breadth-first from the root (root = 0), the
// layout of the worked example table, so heap dumps are reproducible
// byte-for-byte.
Heap compile(const Regex& e);

// True iff the subtree rooted at p spells out e, with the sub-heaps of the
// two children of every binary node disjoint (each address used at most
// once across the whole traversal).
bool models(const Heap& h, Addr p, const Regex& e);

// Verifies the four continuation-map laws at every address: alternation
// children share the parent's knode; a sequence's left child continues at
// the right child, whose knode is the parent's; a star's body continues at
// the star itself; the root's knode is null.
bool check_knode(const Heap& h);

// Reads back the expression laid out at p. Throws std::runtime_error on a
// malformed heap (dangling child, address revisited).
RegexPtr extract(const Heap& h, Addr p);

// "p0".."pN" or "null".
std::string addr_name(Addr p);
Addr parse_addr(std::string_view name);   // throws std::runtime_error

// Dump format, one row per address in address order (root first), three
// tab-separated columns:
//   addr <TAB> node <TAB> knode
// where node is one of `eps`, `char <sym>`, `alt <p> <q>`, `seq <p> <q>`,
// `star <p>`, and knode is an address or `null`.
std::string dump(const Heap& h);
Heap parse_dump(std::string_view text);   // throws std::runtime_error

} // namespace rx
