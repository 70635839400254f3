#include "rx/pwpi.hpp"

#include <cassert>

#include "rx/utf8.hpp"

namespace rx {

std::vector<Addr> eps_successors(const Heap& h, Addr p) {
    assert(h.contains(p));
    const Node& n = h.node(p);
    switch (n.kind) {
    case Node::Kind::Alt:  return {n.left, n.right};
    case Node::Kind::Seq:  return {n.left};
    case Node::Kind::Star: return {n.left, h.knode(p)};
    case Node::Kind::Eps:  return {h.knode(p)};
    case Node::Kind::Chr:  return {};
    }
    return {};
}

std::optional<Addr> char_successor(const Heap& h, Addr p, Symbol a) {
    assert(h.contains(p));
    const Node& n = h.node(p);
    if (n.kind == Node::Kind::Chr && n.sym == a) return h.knode(p);
    return std::nullopt;
}

namespace {

enum class Mark : uint8_t { Unknown, InProgress, Dead, Live };

struct Decide {
    const Heap& h;
    InputView w;
    // state index: (p+1) * (|w|+1) + pos, p = -1 for null
    std::vector<Mark> marks;
    std::vector<PwConfig> next_on_live;   // successor choice that led to acceptance
    uint64_t expanded = 0;

    size_t idx(Addr p, size_t pos) const {
        return static_cast<size_t>(p + 1) * (w.size() + 1) + pos;
    }

    bool reach(Addr p, size_t pos) {
        size_t i = idx(p, pos);
        if (marks[i] == Mark::Live) return true;
        if (marks[i] == Mark::Dead || marks[i] == Mark::InProgress) return false;
        marks[i] = Mark::InProgress;
        ++expanded;
        bool live = false;
        PwConfig next{};
        if (p == null_addr) {
            live = pos == w.size();   // accepting configuration itself
        } else {
            const Node& n = h.node(p);
            if (n.kind == Node::Kind::Chr) {
                if (pos < w.size() && n.sym == w[pos]) {
                    next = {h.knode(p), pos + 1};
                    live = reach(next.at, next.pos);
                }
            } else {
                for (Addr q : eps_successors(h, p)) {
                    if (reach(q, pos)) {
                        next = {q, pos};
                        live = true;
                        break;
                    }
                }
            }
        }
        marks[i] = live ? Mark::Live : Mark::Dead;
        if (live) next_on_live[i] = next;
        return live;
    }
};

} // namespace

PwpiResult pwpi_run(const Heap& h, InputView w) {
    size_t states = static_cast<size_t>(h.size() + 1) * (w.size() + 1);
    Decide d{h, w, std::vector<Mark>(states, Mark::Unknown), std::vector<PwConfig>(states), 0};
    PwpiResult r;
    r.accepted = d.reach(h.root(), 0);
    r.expanded = d.expanded;
    if (r.accepted) {
        PwConfig c{h.root(), 0};
        r.witness.push_back(c);
        while (c.at != null_addr) {
            c = d.next_on_live[d.idx(c.at, c.pos)];
            r.witness.push_back(c);
        }
    }
    return r;
}

bool pwpi_accepts(const Heap& h, InputView w) {
    return pwpi_run(h, w).accepted;
}

std::vector<RegexPtr> stackof(const Heap& h, Addr p) {
    std::vector<RegexPtr> stack;
    while (h.knode(p) != null_addr) {
        p = h.knode(p);
        stack.push_back(extract(h, p));
    }
    return stack;
}

std::string format(const Heap& h, const PwConfig& c, InputView w) {
    (void)h;
    return "⟨" + addr_name(c.at) + " | " + encode_utf8(InputView(w).substr(c.pos)) + "⟩";
}

std::string pwpi_trace(const Heap& h, InputView w) {
    PwpiResult r = pwpi_run(h, w);
    if (!r.accepted) return "no accepting run\n";
    std::string out;
    for (size_t i = 0; i + 1 < r.witness.size(); ++i)
        out += format(h, r.witness[i], w) + " -> " + format(h, r.witness[i + 1], w) + "\n";
    return out;
}

} // namespace rx
