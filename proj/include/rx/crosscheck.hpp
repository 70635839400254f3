#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rx/engines.hpp"
#include "rx/regex.hpp"

namespace rx {

// Every abstract syntax tree with at most max_nodes nodes over the given
// alphabet, smallest first. Subtrees are shared; all consumers traverse
// structurally.
std::vector<RegexPtr> enumerate_regexes(size_t max_nodes, std::span<const Symbol> alphabet);

// Every string of length 0..max_len over the alphabet, shortest first.
std::vector<Input> enumerate_strings(size_t max_len, std::span<const Symbol> alphabet);

RegexPtr random_regex(size_t nodes, std::span<const Symbol> alphabet, std::mt19937_64& rng);
Input random_input(size_t max_len, std::span<const Symbol> alphabet, std::mt19937_64& rng);

struct CrosscheckOptions {
    size_t max_nodes = 8;
    size_t max_len = 6;
    std::vector<Symbol> alphabet = {U'a', U'b'};
    size_t random_cases = 0;        // extra random pairs beyond the bounds
    size_t random_max_nodes = 12;
    size_t random_max_len = 10;
    uint64_t seed = 0;
    unsigned jobs = 1;              // driver threads over the regex list
    size_t max_reported = 20;
    EngineOptions engine_opts{.budget = 1'000'000, .workers = 1, .seed = 0,
                              .star_rule = StarRule::Body};
    // ekw gets this budget on the enumerated suite; the suite is expected
    // to conclude (cycle pruning makes the search finite), so an
    // exhaustion here is reported as a disagreement, not skipped.
    uint64_t suite_ekw_budget = 50'000'000;
    std::vector<EngineId> engines{all_engines.begin(), all_engines.end()};
};

struct Disagreement {
    std::string pattern;
    std::string input;
    std::vector<std::pair<EngineId, MatchOutcome>> results;
};

struct CrosscheckReport {
    uint64_t cases = 0;            // (pattern, input) pairs compared
    uint64_t disagreement_count = 0;
    uint64_t budget_skips = 0;     // random cases where ekw hit its budget
    std::vector<Disagreement> disagreements;   // first max_reported, minimal first

    std::string summary() const;
};

// Runs every engine over every enumerated (pattern, input) pair plus the
// requested random pairs and collects the cases where they disagree.
CrosscheckReport crosscheck(const CrosscheckOptions& opts);

} // namespace rx
