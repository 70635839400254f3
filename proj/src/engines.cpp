#include "rx/engines.hpp"

#include "rx/ekw.hpp"
#include "rx/lockstep.hpp"
#include "rx/oracle.hpp"
#include "rx/parallel.hpp"
#include "rx/process.hpp"
#include "rx/pwpi.hpp"

namespace rx {

const char* engine_name(EngineId id) {
    switch (id) {
    case EngineId::Oracle:   return "oracle";
    case EngineId::Ekw:      return "ekw";
    case EngineId::Pwpi:     return "pwpi";
    case EngineId::Lockstep: return "lockstep";
    case EngineId::Thompson: return "thompson";
    case EngineId::Process:  return "process";
    case EngineId::Parallel: return "parallel";
    }
    return "?";
}

std::optional<EngineId> engine_from_name(std::string_view name) {
    for (EngineId id : all_engines)
        if (name == engine_name(id)) return id;
    return std::nullopt;
}

const char* outcome_name(MatchOutcome o) {
    switch (o) {
    case MatchOutcome::Match:   return "match";
    case MatchOutcome::NoMatch: return "nomatch";
    case MatchOutcome::Budget:  return "budget";
    }
    return "?";
}

EngineRun run_engine(EngineId id, const Heap& h, const Regex& e, InputView w,
                     const EngineOptions& opts) {
    auto of = [](bool ok) { return ok ? MatchOutcome::Match : MatchOutcome::NoMatch; };
    switch (id) {
    case EngineId::Oracle: {
        uint64_t steps = 0;
        bool ok = oracle_matches(e, w, &steps);
        return {of(ok), steps};
    }
    case EngineId::Ekw: {
        EkwResult r = ekw_accepts(e, w, opts.budget, opts.ekw_pruning);
        MatchOutcome o = r.outcome == EkwOutcome::Accept            ? MatchOutcome::Match
                         : r.outcome == EkwOutcome::BudgetExhausted ? MatchOutcome::Budget
                                                                    : MatchOutcome::NoMatch;
        return {o, r.steps};
    }
    case EngineId::Pwpi: {
        PwpiResult r = pwpi_run(h, w);
        return {of(r.accepted), r.expanded};
    }
    case EngineId::Lockstep: {
        LockstepStats stats;
        bool ok = lockstep_accepts(h, w, &stats);
        return {of(ok), stats.enqueued};
    }
    case EngineId::Thompson: {
        SeqRunStats stats;
        bool ok = seq_accepts(h, w, opts.star_rule, &stats);
        return {of(ok), stats.steps};
    }
    case EngineId::Process: {
        ProcStats stats;
        bool ok = proc_accepts(h, w, opts.seed, &stats);
        return {of(ok), stats.micro_steps};
    }
    case EngineId::Parallel: {
        ParStats stats;
        bool ok = par_accepts(h, w, opts.workers, opts.seed, &stats);
        return {of(ok), stats.claims};
    }
    }
    return {MatchOutcome::NoMatch, 0};
}

} // namespace rx
