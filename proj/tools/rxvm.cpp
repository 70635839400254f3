// rxvm — regular expression matching workbench.
//
// One shared expression heap, seven interchangeable engines: a big-step
// reference oracle, a continuation machine (ekw), an address machine
// (pwpi), the generic lockstep machine, the sequential Thompson-style
// matcher, a process-calculus interpreter, and a concurrent counter-vector
// engine. `crosscheck` runs them against each other; `bench` measures the
// pathological families.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rx/bench.hpp"
#include "rx/crosscheck.hpp"
#include "rx/ekw.hpp"
#include "rx/engines.hpp"
#include "rx/heap.hpp"
#include "rx/lockstep.hpp"
#include "rx/oracle.hpp"
#include "rx/parallel.hpp"
#include "rx/process.hpp"
#include "rx/pwpi.hpp"
#include "rx/thompson.hpp"
#include "rx/utf8.hpp"

namespace {

constexpr int exit_match = 0;
constexpr int exit_nomatch = 1;
constexpr int exit_error = 2;

struct CommonFlags {
    std::string engine = "thompson";
    unsigned workers = 4;
    uint64_t seed = 0;
    uint64_t budget = 1'000'000;
    std::string star_rule = "body";
    std::string ekw_pruning = "per-path";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--engine", f.engine, "oracle|ekw|pwpi|lockstep|thompson|process|parallel")
        ->capture_default_str();
    cmd->add_option("--workers", f.workers, "parallel engine worker count")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "schedule seed (process/parallel)")
        ->capture_default_str();
    cmd->add_option("--budget", f.budget, "ekw search step budget")->capture_default_str();
    cmd->add_option("--star-rule", f.star_rule,
                    "thompson star transition: body (correct) or literal (broken variant "
                    "kept as a regression guard)")
        ->check(CLI::IsMember({"body", "literal"}))
        ->capture_default_str();
    cmd->add_option("--ekw-pruning", f.ekw_pruning,
                    "ekw cycle handling: per-path pruning, or none (raw machine, may loop "
                    "until the budget stops it)")
        ->check(CLI::IsMember({"per-path", "none"}))
        ->capture_default_str();
}

rx::EngineOptions engine_options(const CommonFlags& f) {
    rx::EngineOptions opts;
    opts.budget = f.budget;
    opts.workers = f.workers;
    opts.seed = f.seed;
    opts.star_rule = f.star_rule == "literal" ? rx::StarRule::Literal : rx::StarRule::Body;
    opts.ekw_pruning =
        f.ekw_pruning == "none" ? rx::EkwPruning::None : rx::EkwPruning::PerPath;
    return opts;
}

int cmd_match(const std::string& pattern, const std::vector<std::string>& inputs,
              const CommonFlags& flags) {
    auto id = rx::engine_from_name(flags.engine);
    if (!id) {
        std::cerr << "rxvm: unknown engine: " << flags.engine << "\n";
        return exit_error;
    }
    rx::RegexPtr e = rx::parse(pattern);
    rx::Heap h = rx::compile(*e);
    rx::EngineOptions opts = engine_options(flags);

    auto run_one = [&](const std::string& text) -> rx::MatchOutcome {
        return rx::run_engine(*id, h, *e, rx::decode_utf8(text), opts).outcome;
    };

    bool any = false;
    if (!inputs.empty()) {
        for (const std::string& text : inputs) {
            rx::MatchOutcome o = run_one(text);
            if (o == rx::MatchOutcome::Budget) {
                std::cerr << "rxvm: ekw budget exhausted on \"" << text << "\"\n";
                return exit_error;
            }
            any = any || o == rx::MatchOutcome::Match;
        }
    } else {
        // one candidate string per line; matching lines are reported
        std::string line;
        while (std::getline(std::cin, line)) {
            rx::MatchOutcome o = run_one(line);
            if (o == rx::MatchOutcome::Budget) {
                std::cerr << "rxvm: ekw budget exhausted on \"" << line << "\"\n";
                return exit_error;
            }
            if (o == rx::MatchOutcome::Match) {
                any = true;
                std::cout << line << "\n";
            }
        }
    }
    return any ? exit_match : exit_nomatch;
}

int cmd_trace(const std::string& pattern, const std::string& input, const CommonFlags& flags) {
    auto id = rx::engine_from_name(flags.engine);
    if (!id) {
        std::cerr << "rxvm: unknown engine: " << flags.engine << "\n";
        return exit_error;
    }
    rx::RegexPtr e = rx::parse(pattern);
    rx::Heap h = rx::compile(*e);
    rx::Input w = rx::decode_utf8(input);
    switch (*id) {
    case rx::EngineId::Ekw:
        std::cout << rx::ekw_trace(*e, w, flags.budget);
        return exit_match;
    case rx::EngineId::Pwpi:
        std::cout << rx::pwpi_trace(h, w);
        return exit_match;
    case rx::EngineId::Lockstep:
        std::cout << rx::lockstep_trace(h, w);
        return exit_match;
    case rx::EngineId::Thompson:
        std::cout << rx::seq_trace(h, w, engine_options(flags).star_rule);
        return exit_match;
    case rx::EngineId::Process:
        std::cout << rx::proc_trace(h, w, flags.seed);
        return exit_match;
    case rx::EngineId::Parallel:
        std::cout << rx::par_report(h, w, flags.workers, flags.seed);
        return exit_match;
    case rx::EngineId::Oracle:
        std::cerr << "rxvm: the oracle is a relation, not a machine; no trace\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular expression matching workbench"};
    app.require_subcommand(1);

    // match
    auto* match = app.add_subcommand("match", "full-string match (status 0 hit, 1 miss, 2 error)");
    std::string pattern;
    std::vector<std::string> inputs;
    CommonFlags match_flags;
    match->add_option("pattern", pattern, "pattern")->required();
    match->add_option("input", inputs, "candidate strings (default: one per stdin line)");
    add_common(match, match_flags);

    // compile
    auto* compile_cmd = app.add_subcommand("compile", "dump the pattern's heap table");
    std::string compile_pattern;
    compile_cmd->add_option("pattern", compile_pattern, "pattern")->required();

    // trace
    auto* trace = app.add_subcommand("trace", "step trace of one engine on one input");
    std::string trace_pattern, trace_input;
    CommonFlags trace_flags;
    trace->add_option("pattern", trace_pattern, "pattern")->required();
    trace->add_option("input", trace_input, "input string")->required();
    add_common(trace, trace_flags);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "run all engines against each other");
    rx::CrosscheckOptions copts;
    CommonFlags cross_flags;
    uint64_t cross_random = 200;
    cross->add_option("--size-bound", copts.max_nodes, "max AST nodes enumerated")
        ->capture_default_str();
    cross->add_option("--len-bound", copts.max_len, "max input length enumerated")
        ->capture_default_str();
    cross->add_option("--random", cross_random, "extra random larger cases")
        ->capture_default_str();
    cross->add_option("--jobs", copts.jobs, "driver threads")->capture_default_str();
    add_common(cross, cross_flags);

    // bench
    auto* bench = app.add_subcommand("bench", "pathological-family benchmark (CSV)");
    std::string bench_family = "nested-star";
    std::vector<size_t> bench_sizes{0, 10, 100, 1000};
    std::vector<std::string> bench_engines{"thompson", "lockstep", "parallel"};
    CommonFlags bench_flags;
    bench_flags.ekw_pruning = "none";   // the benchmark exhibits the raw search blowup
    bench->add_option("--family", bench_family, "nested-star|alt-chain")->capture_default_str();
    bench->add_option("--sizes", bench_sizes, "input sizes n")->delimiter(',');
    bench->add_option("--engines", bench_engines, "engines to run")->delimiter(',');
    add_common(bench, bench_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (match->parsed()) return cmd_match(pattern, inputs, match_flags);
        if (compile_cmd->parsed()) {
            std::cout << rx::dump(rx::compile(*rx::parse(compile_pattern)));
            return exit_match;
        }
        if (trace->parsed()) return cmd_trace(trace_pattern, trace_input, trace_flags);
        if (cross->parsed()) {
            copts.random_cases = cross_random;
            copts.seed = cross_flags.seed;
            copts.engine_opts = engine_options(cross_flags);
            copts.engine_opts.workers = 1;   // suite runs the protocol inline
            rx::CrosscheckReport report = rx::crosscheck(copts);
            std::cout << report.summary();
            return report.disagreement_count == 0 ? exit_match : exit_nomatch;
        }
        if (bench->parsed()) {
            auto family = rx::family_from_name(bench_family);
            if (!family) {
                std::cerr << "rxvm: unknown family: " << bench_family << "\n";
                return exit_error;
            }
            std::vector<rx::EngineId> ids;
            for (const std::string& name : bench_engines) {
                auto id = rx::engine_from_name(name);
                if (!id) {
                    std::cerr << "rxvm: unknown engine: " << name << "\n";
                    return exit_error;
                }
                ids.push_back(*id);
            }
            std::cout << rx::bench_csv(
                rx::run_bench(*family, bench_sizes, ids, engine_options(bench_flags)));
            return exit_match;
        }
    } catch (const rx::ParseError& err) {
        std::cerr << "rxvm: parse error: " << err.what() << "\n";
        return exit_error;
    } catch (const std::exception& err) {
        std::cerr << "rxvm: " << err.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
