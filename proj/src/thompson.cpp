#include "rx/thompson.hpp"

#include <algorithm>

#include "rx/utf8.hpp"

namespace rx {

AddrList addunique(Addr p, const AddrList& l1, const AddrList& l2) {
    if (std::find(l1.begin(), l1.end(), p) != l1.end() ||
        std::find(l2.begin(), l2.end(), p) != l2.end())
        return l1;
    AddrList out;
    out.reserve(l1.size() + 1);
    out.push_back(p);
    out.insert(out.end(), l1.begin(), l1.end());
    return out;
}

const char* rule_name(SeqRule r) {
    switch (r) {
    case SeqRule::Alt:        return "alt";
    case SeqRule::Seq:        return "seq";
    case SeqRule::Star:       return "star";
    case SeqRule::Eps:        return "eps";
    case SeqRule::DropNull:   return "drop-null";
    case SeqRule::Match:      return "match";
    case SeqRule::Mismatch:   return "mismatch";
    case SeqRule::Swap:       return "swap";
    case SeqRule::DiscardEoi: return "discard-eoi";
    case SeqRule::Stuck:      return "stuck";
    }
    return "?";
}

bool seq_accepting(const SeqConfig& cfg, InputView w) {
    return !cfg.c.empty() && cfg.c.front() == null_addr && cfg.pos == w.size();
}

SeqConfig seq_initial(const Heap& h) {
    return SeqConfig{{h.root()}, {}, {}, 0};
}

SeqStep seq_step(const Heap& h, const SeqConfig& cfg, InputView w, StarRule star_rule) {
    bool have_input = cfg.pos < w.size();
    if (cfg.c.empty()) {
        if (have_input && !cfg.n.empty())   // swap consumes one symbol
            return {SeqRule::Swap, {cfg.n, {}, {}, cfg.pos + 1}};
        return {SeqRule::Stuck, cfg};
    }
    Addr p = cfg.c.front();
    AddrList c(cfg.c.begin() + 1, cfg.c.end());
    if (p == null_addr) {
        if (have_input)
            return {SeqRule::DropNull, {std::move(c), cfg.t, cfg.n, cfg.pos}};
        return {SeqRule::Stuck, cfg};   // unreachable when acceptance is checked first
    }
    AddrList t = cfg.t;
    t.insert(t.begin(), p);
    const Node& node = h.node(p);
    switch (node.kind) {
    case Node::Kind::Alt:
        return {SeqRule::Alt,
                {addunique(node.right, addunique(node.left, c, cfg.t), cfg.t),
                 std::move(t), cfg.n, cfg.pos}};
    case Node::Kind::Seq:
        return {SeqRule::Seq, {addunique(node.left, c, cfg.t), std::move(t), cfg.n, cfg.pos}};
    case Node::Kind::Star: {
        Addr rescheduled = star_rule == StarRule::Body ? node.left : p;
        return {SeqRule::Star,
                {addunique(h.knode(p), addunique(rescheduled, c, cfg.t), cfg.t),
                 std::move(t), cfg.n, cfg.pos}};
    }
    case Node::Kind::Eps:
        return {SeqRule::Eps, {addunique(h.knode(p), c, cfg.t), std::move(t), cfg.n, cfg.pos}};
    case Node::Kind::Chr:
        if (!have_input)
            return {SeqRule::DiscardEoi, {std::move(c), std::move(t), cfg.n, cfg.pos}};
        if (node.sym == w[cfg.pos])
            return {SeqRule::Match,
                    {std::move(c), std::move(t), addunique(h.knode(p), cfg.n, {}), cfg.pos}};
        return {SeqRule::Mismatch, {std::move(c), std::move(t), cfg.n, cfg.pos}};
    }
    return {SeqRule::Stuck, cfg};
}

bool seq_accepts(const Heap& h, InputView w, StarRule star_rule, SeqRunStats* stats) {
    SeqConfig cfg = seq_initial(h);
    for (;;) {
        if (seq_accepting(cfg, w)) return true;
        SeqStep step = seq_step(h, cfg, w, star_rule);
        if (step.rule == SeqRule::Stuck) return false;
        if (stats) {
            ++stats->steps;
            if (step.rule == SeqRule::Swap)
                stats->macro_sets.emplace_back(cfg.n.begin(), cfg.n.end());
        }
        cfg = std::move(step.cfg);
    }
}

namespace {

std::string format(const AddrList& l) {
    std::string out = "[";
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) out += ",";
        out += addr_name(l[i]);
    }
    return out + "]";
}

} // namespace

std::string format(const SeqConfig& cfg, InputView w) {
    return "⟨" + format(cfg.c) + " | " + format(cfg.t) + " | " + format(cfg.n) + " | " +
           encode_utf8(InputView(w).substr(cfg.pos)) + "⟩";
}

std::string seq_trace(const Heap& h, InputView w, StarRule star_rule) {
    std::string out;
    SeqConfig cfg = seq_initial(h);
    for (;;) {
        if (seq_accepting(cfg, w)) {
            out += format(cfg, w) + " accept\n";
            return out;
        }
        SeqStep step = seq_step(h, cfg, w, star_rule);
        if (step.rule == SeqRule::Stuck) {
            out += format(cfg, w) + " stuck\n";
            return out;
        }
        out += format(cfg, w) + " --" + rule_name(step.rule) + "--> " + format(step.cfg, w) + "\n";
        cfg = std::move(step.cfg);
    }
}

} // namespace rx
