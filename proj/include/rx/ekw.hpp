#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rx/regex.hpp"

namespace rx {

// EKW configuration: focused expression, continuation list (front = top),
// and the position reached in the input (rest = suffix from pos).
// Continuations are expression values compared structurally, deliberately
// not addresses: this machine cannot tell two occurrences of the same
// subexpression apart.
struct EkwConfig {
    RegexPtr current;
    std::vector<RegexPtr> kont;
    size_t pos = 0;
};

enum class EkwRule : uint8_t { Alt1, Alt2, Seq, StarUnfold, StarExit, Match, Pop };
const char* rule_name(EkwRule r);

struct EkwStep {
    EkwRule rule;
    EkwConfig to;
};

int cmp(const EkwConfig& a, const EkwConfig& b);
bool ekw_accepting(const EkwConfig& c, InputView w);

EkwConfig ekw_initial(RegexPtr e);

// All configurations reachable in one transition, in the rule order of the
// transition table (left alternative first, star unfold before star exit).
// Empty when stuck.
std::vector<EkwStep> ekw_successors(const EkwConfig& c, InputView w);

enum class EkwOutcome : uint8_t { Accept, Reject, BudgetExhausted };

struct EkwResult {
    EkwOutcome outcome;
    uint64_t steps;   // transitions taken during the search
};

// PerPath cuts a configuration already on the current path, which makes
// the search space finite. None runs the machine raw: on star patterns
// the depth-first search can fall into the machine's infinite loops and
// only the budget stops it.
enum class EkwPruning : uint8_t { PerPath, None };

// Depth-first search for an accepting run. `budget` bounds the total
// transitions taken; hitting it before the search concludes yields
// BudgetExhausted.
EkwResult ekw_accepts(const Regex& e, InputView w, uint64_t budget,
                      EkwPruning pruning = EkwPruning::PerPath);

// `<e | [k1,k2] | rest>` using the canonical expression printer.
std::string format(const EkwConfig& c, InputView w);

// Text trace of the DFS: one line per transition taken, `(cycle)` markers
// where a successor was pruned, `backtrack` lines when a branch dies.
std::string ekw_trace(const Regex& e, InputView w, uint64_t budget);

} // namespace rx
