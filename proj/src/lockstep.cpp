#include "rx/lockstep.hpp"

#include <deque>
#include <stdexcept>

#include "rx/utf8.hpp"

namespace rx {

std::vector<Addr> evolve_ordered(const Heap& h, const AddrSet& s, LockstepStats* stats) {
    std::vector<Addr> out;
    std::vector<bool> seen(static_cast<size_t>(h.size()), false);
    std::deque<Addr> work;
    for (Addr p : s) {
        if (p == null_addr || seen[static_cast<size_t>(p)]) continue;
        seen[static_cast<size_t>(p)] = true;
        work.push_back(p);
        if (stats) ++stats->enqueued;
    }
    while (!work.empty()) {
        Addr p = work.front();
        work.pop_front();
        if (h.node(p).kind == Node::Kind::Chr) {
            out.push_back(p);
            continue;
        }
        for (Addr q : eps_successors(h, p)) {
            if (q == null_addr || seen[static_cast<size_t>(q)]) continue;
            seen[static_cast<size_t>(q)] = true;
            work.push_back(q);
            if (stats) ++stats->enqueued;
        }
    }
    return out;
}

AddrSet evolve(const Heap& h, const AddrSet& s, LockstepStats* stats) {
    std::vector<Addr> ordered = evolve_ordered(h, s, stats);
    return AddrSet(ordered.begin(), ordered.end());
}

bool eps_reaches_null(const Heap& h, const AddrSet& s) {
    if (s.contains(null_addr)) return true;
    std::vector<bool> seen(static_cast<size_t>(h.size()), false);
    std::deque<Addr> work;
    for (Addr p : s) {
        if (seen[static_cast<size_t>(p)]) continue;
        seen[static_cast<size_t>(p)] = true;
        work.push_back(p);
    }
    while (!work.empty()) {
        Addr p = work.front();
        work.pop_front();
        for (Addr q : eps_successors(h, p)) {
            if (q == null_addr) return true;
            if (seen[static_cast<size_t>(q)]) continue;
            seen[static_cast<size_t>(q)] = true;
            work.push_back(q);
        }
    }
    return false;
}

AddrSet step_char(const Heap& h, const AddrSet& s, Symbol a) {
    AddrSet next;
    for (Addr p : s) {
        if (p == null_addr) continue;   // null has no labeled step
        if (h.node(p).kind != Node::Kind::Chr)
            throw std::invalid_argument("step_char: unevolved member " + addr_name(p));
        if (auto q = char_successor(h, p, a)) next.insert(*q);
    }
    return next;
}

bool lockstep_accepts(const Heap& h, InputView w, LockstepStats* stats) {
    AddrSet s{h.root()};
    for (Symbol a : w) {
        s = step_char(h, evolve(h, s, stats), a);
        if (s.empty()) return false;
    }
    return s.contains(null_addr) || eps_reaches_null(h, s);
}

std::string format(const AddrSet& s) {
    std::string out = "{";
    bool first = true;
    for (Addr p : s) {
        if (!first) out += ",";
        first = false;
        out += addr_name(p);
    }
    return out + "}";
}

namespace {

std::string format(const std::vector<Addr>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += addr_name(s[i]);
    }
    return out + "}";
}

} // namespace

std::string lockstep_trace(const Heap& h, InputView w) {
    std::string out;
    AddrSet s{h.root()};
    for (Symbol a : w) {
        std::vector<Addr> evolved = evolve_ordered(h, s);
        AddrSet next = step_char(h, AddrSet(evolved.begin(), evolved.end()), a);
        out += format(s) + " =eps=> " + format(evolved) + " =" + encode_utf8(a) + "=> " +
               format(next) + "\n";
        s = std::move(next);
        if (s.empty()) break;
    }
    bool ok = !s.empty() && (s.contains(null_addr) || eps_reaches_null(h, s));
    out += format(s) + (ok ? " accept\n" : " reject\n");
    return out;
}

} // namespace rx
