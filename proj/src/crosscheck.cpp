#include "rx/crosscheck.hpp"

#include <algorithm>
#include <cassert>
#include <thread>
#include <tuple>

#include "rx/heap.hpp"
#include "rx/utf8.hpp"

namespace rx {

std::vector<RegexPtr> enumerate_regexes(size_t max_nodes, std::span<const Symbol> alphabet) {
    std::vector<std::vector<RegexPtr>> by_size(max_nodes + 1);
    if (max_nodes >= 1) {
        by_size[1].push_back(eps());
        for (Symbol a : alphabet) by_size[1].push_back(chr(a));
    }
    for (size_t n = 2; n <= max_nodes; ++n) {
        for (const RegexPtr& e : by_size[n - 1]) by_size[n].push_back(star(e));
        for (size_t i = 1; i + 1 < n; ++i) {
            size_t j = n - 1 - i;
            for (const RegexPtr& l : by_size[i])
                for (const RegexPtr& r : by_size[j]) {
                    by_size[n].push_back(seq(l, r));
                    by_size[n].push_back(alt(l, r));
                }
        }
    }
    std::vector<RegexPtr> all;
    for (size_t n = 1; n <= max_nodes; ++n)
        all.insert(all.end(), by_size[n].begin(), by_size[n].end());
    return all;
}

std::vector<Input> enumerate_strings(size_t max_len, std::span<const Symbol> alphabet) {
    std::vector<Input> all{Input{}};
    size_t level_begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
        size_t level_end = all.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (Symbol a : alphabet) {
                Input w = all[i];
                w.push_back(a);
                all.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return all;
}

RegexPtr random_regex(size_t nodes, std::span<const Symbol> alphabet, std::mt19937_64& rng) {
    assert(nodes >= 1);
    auto pick = [&rng](size_t n) {
        return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    };
    if (nodes == 1) {
        size_t k = pick(alphabet.size() + 1);
        return k == alphabet.size() ? eps() : chr(alphabet[k]);
    }
    if (nodes == 2 || pick(3) == 0)
        return star(random_regex(nodes - 1, alphabet, rng));
    size_t left = 1 + pick(nodes - 2);
    RegexPtr l = random_regex(left, alphabet, rng);
    RegexPtr r = random_regex(nodes - 1 - left, alphabet, rng);
    return pick(2) == 0 ? seq(std::move(l), std::move(r)) : alt(std::move(l), std::move(r));
}

Input random_input(size_t max_len, std::span<const Symbol> alphabet, std::mt19937_64& rng) {
    size_t len = std::uniform_int_distribution<size_t>(0, max_len)(rng);
    Input w;
    w.reserve(len);
    for (size_t i = 0; i < len; ++i)
        w.push_back(alphabet[std::uniform_int_distribution<size_t>(0, alphabet.size() - 1)(rng)]);
    return w;
}

namespace {

struct CaseResult {
    bool disagreed = false;
    bool budget_skip = false;
    Disagreement record;
};

CaseResult check_case(const RegexPtr& e, const Heap& h, const Input& w,
                      const CrosscheckOptions& opts, uint64_t ekw_budget) {
    CaseResult res;
    EngineOptions eopts = opts.engine_opts;
    eopts.budget = ekw_budget;
    std::vector<std::pair<EngineId, MatchOutcome>> results;
    results.reserve(opts.engines.size());
    for (EngineId id : opts.engines)
        results.emplace_back(id, run_engine(id, h, *e, w, eopts).outcome);

    bool saw_match = false, saw_nomatch = false;
    for (auto& [id, o] : results) {
        if (o == MatchOutcome::Match) saw_match = true;
        if (o == MatchOutcome::NoMatch) saw_nomatch = true;
        if (o == MatchOutcome::Budget) res.budget_skip = true;
    }
    if (saw_match && saw_nomatch) {
        res.disagreed = true;
        res.record = Disagreement{print(e), encode_utf8(w), std::move(results)};
    }
    return res;
}

} // namespace

CrosscheckReport crosscheck(const CrosscheckOptions& opts) {
    std::vector<RegexPtr> regexes = enumerate_regexes(opts.max_nodes, opts.alphabet);
    std::vector<Input> strings = enumerate_strings(opts.max_len, opts.alphabet);

    CrosscheckReport report;
    unsigned jobs = std::max(1u, opts.jobs);
    std::vector<CrosscheckReport> partial(jobs);

    auto run_slice = [&](unsigned job) {
        CrosscheckReport& r = partial[job];
        for (size_t k = job; k < regexes.size(); k += jobs) {
            const RegexPtr& e = regexes[k];
            Heap h = compile(*e);
            for (const Input& w : strings) {
                ++r.cases;
                CaseResult cr = check_case(e, h, w, opts, opts.suite_ekw_budget);
                // a budget exhaustion on the enumerated suite counts as a
                // disagreement: the search must conclude here
                if (cr.budget_skip && !cr.disagreed) {
                    cr.disagreed = true;
                    cr.record = Disagreement{print(e), encode_utf8(w), {}};
                }
                if (cr.disagreed) {
                    ++r.disagreement_count;
                    if (r.disagreements.size() < opts.max_reported)
                        r.disagreements.push_back(std::move(cr.record));
                }
            }
        }
    };

    if (jobs == 1) {
        run_slice(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(run_slice, j);
        for (auto& th : pool) th.join();
    }
    for (CrosscheckReport& r : partial) {
        report.cases += r.cases;
        report.disagreement_count += r.disagreement_count;
        report.budget_skips += r.budget_skips;
        for (Disagreement& d : r.disagreements) report.disagreements.push_back(std::move(d));
    }
    // smallest counterexamples first
    std::sort(report.disagreements.begin(), report.disagreements.end(),
              [](const Disagreement& a, const Disagreement& b) {
                  auto key = [](const Disagreement& d) {
                      return std::tuple(d.pattern.size() + d.input.size(), d.pattern, d.input);
                  };
                  return key(a) < key(b);
              });
    if (report.disagreements.size() > opts.max_reported)
        report.disagreements.resize(opts.max_reported);

    // random larger cases, sequential (ekw may hit its budget here; that
    // is recorded, not failed)
    std::mt19937_64 rng(opts.seed);
    for (size_t k = 0; k < opts.random_cases; ++k) {
        size_t nodes = std::uniform_int_distribution<size_t>(1, opts.random_max_nodes)(rng);
        RegexPtr e = random_regex(nodes, opts.alphabet, rng);
        Heap h = compile(*e);
        Input w = random_input(opts.random_max_len, opts.alphabet, rng);
        ++report.cases;
        CaseResult cr = check_case(e, h, w, opts, opts.engine_opts.budget);
        if (cr.budget_skip) ++report.budget_skips;
        if (cr.disagreed) {
            ++report.disagreement_count;
            if (report.disagreements.size() < opts.max_reported)
                report.disagreements.push_back(std::move(cr.record));
        }
    }
    return report;
}

std::string CrosscheckReport::summary() const {
    std::string out = std::to_string(cases) + " cases, " + std::to_string(disagreement_count) +
                      " disagreements";
    if (budget_skips) out += ", " + std::to_string(budget_skips) + " budget-limited";
    out += "\n";
    for (const Disagreement& d : disagreements) {
        out += "  pattern " + d.pattern + " input \"" + d.input + "\":";
        if (d.results.empty()) {
            out += " ekw budget exhausted on the bounded suite";
        } else {
            for (auto& [id, o] : d.results)
                out += std::string(" ") + engine_name(id) + "=" + outcome_name(o);
        }
        out += "\n";
    }
    return out;
}

} // namespace rx
