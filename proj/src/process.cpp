#include "rx/process.hpp"

#include <algorithm>
#include <cassert>

#include "rx/utf8.hpp"

namespace rx {

int cmp(const SeqTerm& a, const SeqTerm& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.addr != b.addr) return a.addr < b.addr ? -1 : 1;
    if (a.sym != b.sym) return a.sym < b.sym ? -1 : 1;
    if (a.body.size() != b.body.size()) return a.body.size() < b.body.size() ? -1 : 1;
    for (size_t i = 0; i < a.body.size(); ++i)
        if (int c = cmp(a.body[i], b.body[i])) return c;
    return 0;
}

bool operator==(const SeqTerm& a, const SeqTerm& b) { return cmp(a, b) == 0; }

namespace {

struct TermLess {
    bool operator()(const SeqTerm& a, const SeqTerm& b) const { return cmp(a, b) < 0; }
};

std::vector<SeqTerm> sorted(std::vector<SeqTerm> ts) {
    std::sort(ts.begin(), ts.end(), TermLess{});
    return ts;
}

} // namespace

SeqTerm send(Addr p) { return SeqTerm{SeqTerm::Kind::Send, p, 0, {}}; }

SeqTerm recv_then(Addr chan, std::vector<SeqTerm> body) {
    return SeqTerm{SeqTerm::Kind::Recv, chan, 0, sorted(std::move(body))};
}

SeqTerm sync_then(Symbol a, std::vector<SeqTerm> body) {
    return SeqTerm{SeqTerm::Kind::Sync, null_addr, a, sorted(std::move(body))};
}

void ProcTerm::insert(SeqTerm t) {
    terms.insert(std::upper_bound(terms.begin(), terms.end(), t, TermLess{}), std::move(t));
}

bool ProcTerm::erase_one(const SeqTerm& t) {
    auto it = std::lower_bound(terms.begin(), terms.end(), t, TermLess{});
    if (it == terms.end() || !(*it == t)) return false;
    terms.erase(it);
    return true;
}

bool ProcTerm::contains(const SeqTerm& t) const {
    return std::binary_search(terms.begin(), terms.end(), t, TermLess{});
}

size_t ProcTerm::count(const SeqTerm& t) const {
    auto [lo, hi] = std::equal_range(terms.begin(), terms.end(), t, TermLess{});
    return static_cast<size_t>(hi - lo);
}

SeqTerm translate_node(const Heap& h, Addr p) {
    assert(h.contains(p));
    const Node& n = h.node(p);
    switch (n.kind) {
    case Node::Kind::Alt:  return recv_then(p, {send(n.left), send(n.right)});
    case Node::Kind::Seq:  return recv_then(p, {send(n.left)});
    case Node::Kind::Star: return recv_then(p, {send(n.left), send(h.knode(p))});
    case Node::Kind::Eps:  return recv_then(p, {send(h.knode(p))});
    case Node::Kind::Chr:  return recv_then(p, {sync_then(n.sym, {send(h.knode(p))})});
    }
    return send(null_addr);   // unreachable
}

ProcTerm translate_heap(const Heap& h) {
    ProcTerm m;
    m.terms.reserve(static_cast<size_t>(h.size()));
    for (Addr p = 0; p < h.size(); ++p) m.terms.push_back(translate_node(h, p));
    std::sort(m.terms.begin(), m.terms.end(), TermLess{});
    return m;
}

ProcTerm sends_of(const AddrSet& s) {
    ProcTerm m;
    for (Addr p : s) m.terms.push_back(send(p));
    std::sort(m.terms.begin(), m.terms.end(), TermLess{});
    return m;
}

std::vector<std::pair<MicroStep, ProcTerm>> micro_steps(const ProcTerm& m) {
    std::vector<std::pair<MicroStep, ProcTerm>> out;
    const SeqTerm* prev = nullptr;
    for (const SeqTerm& t : m.terms) {
        if (t.kind != SeqTerm::Kind::Recv) continue;
        if (prev && *prev == t) continue;   // identical receivers fire identically
        prev = &t;
        if (!m.contains(send(t.addr))) continue;
        ProcTerm next = m;
        next.erase_one(send(t.addr));
        next.erase_one(t);
        for (const SeqTerm& b : t.body) next.insert(b);
        out.emplace_back(MicroStep{t.addr, t}, std::move(next));
    }
    return out;
}

std::optional<ProcTerm> sync_step(const ProcTerm& m, Symbol a) {
    if (!micro_steps(m).empty()) return std::nullopt;
    ProcTerm result;
    bool any = false;
    for (const SeqTerm& t : m.terms) {
        if (t.kind == SeqTerm::Kind::Sync && t.sym == a) {
            any = true;
            for (const SeqTerm& b : t.body) result.insert(b);
        }
    }
    if (!any) return std::nullopt;
    return result;
}

namespace {

ProcTerm initial_soup(const Heap& h, const AddrSet& pending) {
    ProcTerm m = translate_heap(h);
    for (Addr p : pending) m.terms.push_back(send(p));
    std::sort(m.terms.begin(), m.terms.end(), TermLess{});
    return m;
}

} // namespace

AddrSet run_macro(const Heap& h, const AddrSet& pending, Symbol a, std::mt19937_64& rng,
                  const MicroObserver& observer) {
    ProcTerm m = initial_soup(h, pending);
    for (;;) {
        auto steps = micro_steps(m);
        if (steps.empty()) break;
        auto& [step, next] = steps[std::uniform_int_distribution<size_t>(0, steps.size() - 1)(rng)];
        m = std::move(next);
        if (observer) observer(step, m);
    }
    auto synced = sync_step(m, a);
    if (!synced) return {};
    AddrSet out;
    for (const SeqTerm& t : synced->terms) {
        assert(t.kind == SeqTerm::Kind::Send);
        out.insert(t.addr);
    }
    return out;
}

bool proc_accepts(const Heap& h, InputView w, uint64_t seed, ProcStats* stats) {
    std::mt19937_64 rng(seed);
    MicroObserver count;
    if (stats)
        count = [stats](const MicroStep&, const ProcTerm&) { ++stats->micro_steps; };
    AddrSet s{h.root()};
    for (Symbol a : w) {
        s = run_macro(h, s, a, rng, count);
        if (s.empty()) return false;
    }
    // Final exhaustion: feed the residue back in and watch for a message
    // to null, which no receiver can ever consume.
    ProcTerm m = initial_soup(h, s);
    for (;;) {
        if (m.contains(send(null_addr))) return true;
        auto steps = micro_steps(m);
        if (steps.empty()) return false;
        auto& [step, next] =
            steps[std::uniform_int_distribution<size_t>(0, steps.size() - 1)(rng)];
        m = std::move(next);
        if (stats) ++stats->micro_steps;
    }
}

std::string print_term(const SeqTerm& t) {
    switch (t.kind) {
    case SeqTerm::Kind::Send:
        return addr_name(t.addr) + "!";
    case SeqTerm::Kind::Recv:
    case SeqTerm::Kind::Sync: {
        std::string prefix =
            t.kind == SeqTerm::Kind::Recv ? addr_name(t.addr) : encode_utf8(t.sym);
        if (t.body.empty()) return prefix + ".0";
        if (t.body.size() == 1) return prefix + "." + print_term(t.body[0]);
        std::string out = prefix + ".(";
        for (size_t i = 0; i < t.body.size(); ++i) {
            if (i) out += " | ";
            out += print_term(t.body[i]);
        }
        return out + ")";
    }
    }
    return "?";
}

std::string print_term(const ProcTerm& m) {
    if (m.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < m.terms.size(); ++i) {
        if (i) out += " | ";
        out += print_term(m.terms[i]);
    }
    return out;
}

std::string proc_trace(const Heap& h, InputView w, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::string out;
    MicroObserver log = [&out](const MicroStep& step, const ProcTerm& m) {
        out += "  --" + addr_name(step.channel) + "--> " + print_term(m) + "\n";
    };
    AddrSet s{h.root()};
    out += "send " + format(s) + "\n";
    for (Symbol a : w) {
        s = run_macro(h, s, a, rng, log);
        out += "=" + encode_utf8(a) + "=> send " + format(s) + "\n";
        if (s.empty()) {
            out += "reject\n";
            return out;
        }
    }
    ProcTerm m = initial_soup(h, s);
    for (;;) {
        if (m.contains(send(null_addr))) {
            out += "null! observed: accept\n";
            return out;
        }
        auto steps = micro_steps(m);
        if (steps.empty()) {
            out += "reject\n";
            return out;
        }
        auto& [step, next] =
            steps[std::uniform_int_distribution<size_t>(0, steps.size() - 1)(rng)];
        m = std::move(next);
        log(step, m);
    }
}

} // namespace rx
