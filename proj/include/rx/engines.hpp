#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "rx/ekw.hpp"
#include "rx/heap.hpp"
#include "rx/thompson.hpp"

namespace rx {

enum class EngineId : uint8_t { Oracle, Ekw, Pwpi, Lockstep, Thompson, Process, Parallel };

inline constexpr std::array<EngineId, 7> all_engines = {
    EngineId::Oracle,   EngineId::Ekw,     EngineId::Pwpi,    EngineId::Lockstep,
    EngineId::Thompson, EngineId::Process, EngineId::Parallel};

const char* engine_name(EngineId id);
std::optional<EngineId> engine_from_name(std::string_view name);

enum class MatchOutcome : uint8_t { Match, NoMatch, Budget };
const char* outcome_name(MatchOutcome o);

struct EngineOptions {
    uint64_t budget = 1'000'000;   // ekw search transitions
    unsigned workers = 4;          // parallel engine
    uint64_t seed = 0;             // process / parallel schedules
    StarRule star_rule = StarRule::Body;
    EkwPruning ekw_pruning = EkwPruning::PerPath;
};

struct EngineRun {
    MatchOutcome outcome;
    uint64_t steps;   // the engine's own instrumented counter
};

// Runs one engine on one (pattern, input) pair. The heap must be
// compile(e); oracle and ekw run on the expression, everything else on
// the heap.
EngineRun run_engine(EngineId id, const Heap& h, const Regex& e, InputView w,
                     const EngineOptions& opts = {});

} // namespace rx
