#include "rx/ekw.hpp"

#include <set>

#include "rx/utf8.hpp"

namespace rx {

const char* rule_name(EkwRule r) {
    switch (r) {
    case EkwRule::Alt1:       return "alt1";
    case EkwRule::Alt2:       return "alt2";
    case EkwRule::Seq:        return "seq";
    case EkwRule::StarUnfold: return "star-unfold";
    case EkwRule::StarExit:   return "star-exit";
    case EkwRule::Match:      return "match";
    case EkwRule::Pop:        return "pop";
    }
    return "?";
}

int cmp(const EkwConfig& a, const EkwConfig& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? -1 : 1;
    if (int c = cmp(a.current, b.current)) return c;
    if (a.kont.size() != b.kont.size()) return a.kont.size() < b.kont.size() ? -1 : 1;
    for (size_t i = 0; i < a.kont.size(); ++i)
        if (int c = cmp(a.kont[i], b.kont[i])) return c;
    return 0;
}

bool ekw_accepting(const EkwConfig& c, InputView w) {
    return c.current->kind == Regex::Kind::Eps && c.kont.empty() && c.pos == w.size();
}

EkwConfig ekw_initial(RegexPtr e) {
    return EkwConfig{std::move(e), {}, 0};
}

std::vector<EkwStep> ekw_successors(const EkwConfig& c, InputView w) {
    std::vector<EkwStep> out;
    const Regex& e = *c.current;
    switch (e.kind) {
    case Regex::Kind::Alt:
        out.push_back({EkwRule::Alt1, {e.left, c.kont, c.pos}});
        out.push_back({EkwRule::Alt2, {e.right, c.kont, c.pos}});
        break;
    case Regex::Kind::Seq: {
        std::vector<RegexPtr> k = c.kont;
        k.insert(k.begin(), e.right);
        out.push_back({EkwRule::Seq, {e.left, std::move(k), c.pos}});
        break;
    }
    case Regex::Kind::Star: {
        std::vector<RegexPtr> k = c.kont;
        k.insert(k.begin(), c.current);
        out.push_back({EkwRule::StarUnfold, {e.left, std::move(k), c.pos}});
        out.push_back({EkwRule::StarExit, {eps(), c.kont, c.pos}});
        break;
    }
    case Regex::Kind::Chr:
        if (c.pos < w.size() && w[c.pos] == e.sym)
            out.push_back({EkwRule::Match, {eps(), c.kont, c.pos + 1}});
        break;
    case Regex::Kind::Eps:
        if (!c.kont.empty()) {
            std::vector<RegexPtr> k(c.kont.begin() + 1, c.kont.end());
            out.push_back({EkwRule::Pop, {c.kont.front(), std::move(k), c.pos}});
        }
        break;
    }
    return out;
}

namespace {

struct ConfigLess {
    bool operator()(const EkwConfig& a, const EkwConfig& b) const { return cmp(a, b) < 0; }
};

struct Dfs {
    InputView w;
    uint64_t budget;
    bool stop_at_first;
    uint64_t steps = 0;
    uint64_t accepts = 0;
    bool exhausted = false;
    std::set<EkwConfig, ConfigLess> on_path = {};
    std::string* trace = nullptr;
    int depth = 0;

    void line(const std::string& s) {
        if (trace) *trace += std::string(static_cast<size_t>(depth) * 2, ' ') + s + "\n";
    }

    // Returns true once an accepting configuration is reached (and, with
    // stop_at_first, unwinds immediately).
    bool search(const EkwConfig& c) {
        if (ekw_accepting(c, w)) {
            ++accepts;
            line("accept");
            return true;
        }
        auto [it, fresh] = on_path.emplace(c);
        if (!fresh) return false;
        bool found = false;
        for (const EkwStep& step : ekw_successors(c, w)) {
            if (steps >= budget) {
                exhausted = true;
                break;
            }
            ++steps;
            bool pruned = on_path.contains(step.to);
            line(format(c, w) + " --" + rule_name(step.rule) + "--> " + format(step.to, w) +
                 (pruned ? "  (cycle)" : ""));
            if (pruned) continue;
            ++depth;
            if (search(step.to)) found = true;
            --depth;
            if (found && stop_at_first) break;
        }
        on_path.erase(it);
        return found;
    }
};

} // namespace

EkwResult ekw_accepts(const Regex& e, InputView w, uint64_t budget, EkwPruning pruning) {
    // Iterative so the raw mode can dive machine-loop-deep without
    // touching the call stack.
    struct Frame {
        EkwConfig cfg;
        std::vector<EkwStep> succ;
        size_t next = 0;
    };
    RegexPtr root = std::make_shared<Regex>(e);
    EkwConfig init = ekw_initial(root);
    if (ekw_accepting(init, w)) return {EkwOutcome::Accept, 0};

    std::set<EkwConfig, ConfigLess> on_path;
    std::vector<Frame> stack;
    uint64_t steps = 0;
    auto enter = [&](EkwConfig c) {
        if (pruning == EkwPruning::PerPath) on_path.insert(c);
        std::vector<EkwStep> succ = ekw_successors(c, w);
        stack.push_back(Frame{std::move(c), std::move(succ), 0});
    };
    enter(init);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= f.succ.size()) {
            if (pruning == EkwPruning::PerPath) on_path.erase(f.cfg);
            stack.pop_back();
            continue;
        }
        if (steps >= budget) return {EkwOutcome::BudgetExhausted, steps};
        ++steps;
        EkwConfig to = std::move(f.succ[f.next++].to);
        if (ekw_accepting(to, w)) return {EkwOutcome::Accept, steps};
        if (pruning == EkwPruning::PerPath && on_path.contains(to)) continue;
        enter(std::move(to));
    }
    return {EkwOutcome::Reject, steps};
}

std::string format(const EkwConfig& c, InputView w) {
    std::string out = "⟨" + print(c.current) + " | [";
    for (size_t i = 0; i < c.kont.size(); ++i) {
        if (i) out += ",";
        out += print(c.kont[i]);
    }
    out += "] | " + encode_utf8(InputView(w).substr(c.pos)) + "⟩";
    return out;
}

std::string ekw_trace(const Regex& e, InputView w, uint64_t budget) {
    std::string text;
    // Full enumeration of the search space, so pruned loops show up even
    // when an accepting run exists elsewhere.
    Dfs dfs{.w = w, .budget = budget, .stop_at_first = false};
    dfs.trace = &text;
    RegexPtr root = std::make_shared<Regex>(e);
    EkwConfig init = ekw_initial(root);
    text += "start " + format(init, w) + "\n";
    dfs.search(init);
    if (dfs.exhausted) text += "budget exhausted\n";
    text += "accepting runs: " + std::to_string(dfs.accepts) + "\n";
    return text;
}

} // namespace rx
