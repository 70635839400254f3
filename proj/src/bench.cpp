#include "rx/bench.hpp"

#include <chrono>

#include "rx/heap.hpp"

namespace rx {

const char* family_name(BenchFamily f) {
    switch (f) {
    case BenchFamily::NestedStar: return "nested-star";
    case BenchFamily::AltChain:   return "alt-chain";
    }
    return "?";
}

std::optional<BenchFamily> family_from_name(std::string_view name) {
    if (name == "nested-star") return BenchFamily::NestedStar;
    if (name == "alt-chain") return BenchFamily::AltChain;
    return std::nullopt;
}

BenchCase make_bench_case(BenchFamily f, size_t n) {
    BenchCase c;
    switch (f) {
    case BenchFamily::NestedStar:
        c.pattern = seq(star(star(chr(U'a'))), chr(U'b'));
        c.input.assign(n, U'a');
        c.input.push_back(U'b');
        break;
    case BenchFamily::AltChain: {
        c.pattern = eps();
        for (size_t i = 0; i < n; ++i) {
            RegexPtr unit = alt(chr(U'a'), chr(U'a'));
            c.pattern = i == 0 ? unit : seq(std::move(c.pattern), std::move(unit));
        }
        c.input.assign(n, U'a');
        break;
    }
    }
    return c;
}

std::vector<BenchRecord> run_bench(BenchFamily f, const std::vector<size_t>& sizes,
                                   const std::vector<EngineId>& engines,
                                   const EngineOptions& opts) {
    std::vector<BenchRecord> out;
    for (size_t n : sizes) {
        BenchCase c = make_bench_case(f, n);
        Heap h = compile(*c.pattern);
        std::string pattern = print(c.pattern);
        for (EngineId id : engines) {
            auto t0 = std::chrono::steady_clock::now();
            EngineRun r = run_engine(id, h, *c.pattern, c.input, opts);
            auto t1 = std::chrono::steady_clock::now();
            int64_t micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            out.push_back({pattern, n, id, r.steps, micros, r.outcome});
        }
    }
    return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string out = "pattern,n,engine,steps,micros,outcome\n";
    for (const BenchRecord& r : records) {
        out += r.pattern + "," + std::to_string(r.n) + "," + engine_name(r.engine) + "," +
               std::to_string(r.steps) + "," + std::to_string(r.micros) + "," +
               outcome_name(r.outcome) + "\n";
    }
    return out;
}

} // namespace rx
