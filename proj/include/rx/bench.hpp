#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rx/engines.hpp"

namespace rx {

// Built-in pathological pattern families. NestedStar pits (a*)*b against
// a^n b, the classic backtracking blowup; AltChain is (a|a)...(a|a)
// against a^n.
enum class BenchFamily : uint8_t { NestedStar, AltChain };

const char* family_name(BenchFamily f);
std::optional<BenchFamily> family_from_name(std::string_view name);

struct BenchCase {
    RegexPtr pattern;
    Input input;
};

BenchCase make_bench_case(BenchFamily f, size_t n);

struct BenchRecord {
    std::string pattern;
    size_t n;
    EngineId engine;
    uint64_t steps;    // the engine's instrumented counter, never wall-clock
    int64_t micros;
    MatchOutcome outcome;
};

std::vector<BenchRecord> run_bench(BenchFamily f, const std::vector<size_t>& sizes,
                                   const std::vector<EngineId>& engines,
                                   const EngineOptions& opts);

// Header `pattern,n,engine,steps,micros,outcome`, one row per record.
std::string bench_csv(const std::vector<BenchRecord>& records);

} // namespace rx
