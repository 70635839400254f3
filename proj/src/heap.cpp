#include "rx/heap.hpp"

#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rx/utf8.hpp"

namespace rx {

Heap compile(const Regex& e) {
    Heap h;
    size_t total = ast_size(e);
    h.nodes.resize(total);
    h.knodes.assign(total, null_addr);

    // Level-order address assignment; children get the next free indices.
    Addr next = 1;
    std::deque<std::pair<const Regex*, Addr>> queue{{&e, 0}};
    while (!queue.empty()) {
        auto [r, p] = queue.front();
        queue.pop_front();
        Node& n = h.nodes[static_cast<size_t>(p)];
        switch (r->kind) {
        case Regex::Kind::Eps:
            n.kind = Node::Kind::Eps;
            break;
        case Regex::Kind::Chr:
            n.kind = Node::Kind::Chr;
            n.sym = r->sym;
            break;
        case Regex::Kind::Star:
            n.kind = Node::Kind::Star;
            n.left = next++;
            queue.emplace_back(r->left.get(), n.left);
            break;
        case Regex::Kind::Seq:
        case Regex::Kind::Alt:
            n.kind = r->kind == Regex::Kind::Seq ? Node::Kind::Seq : Node::Kind::Alt;
            n.left = next++;
            n.right = next++;
            queue.emplace_back(r->left.get(), n.left);
            queue.emplace_back(r->right.get(), n.right);
            break;
        }
    }
    assert(static_cast<size_t>(next) == total);

    // Second pass wires the continuation pointers.
    h.knodes[0] = null_addr;
    for (Addr p = 0; p < h.size(); ++p) {
        const Node& n = h.node(p);
        switch (n.kind) {
        case Node::Kind::Alt:
            h.knodes[static_cast<size_t>(n.left)] = h.knode(p);
            h.knodes[static_cast<size_t>(n.right)] = h.knode(p);
            break;
        case Node::Kind::Seq:
            h.knodes[static_cast<size_t>(n.left)] = n.right;
            h.knodes[static_cast<size_t>(n.right)] = h.knode(p);
            break;
        case Node::Kind::Star:
            h.knodes[static_cast<size_t>(n.left)] = p;
            break;
        default:
            break;
        }
    }
    return h;
}

namespace {

// Collects every address the layout of e at p uses into `used`; a revisit
// is a separation violation (or a cycle) and fails the match.
bool models_walk(const Heap& h, Addr p, const Regex& e, std::set<Addr>& used) {
    if (!h.contains(p)) return false;
    if (!used.insert(p).second) return false;
    const Node& n = h.node(p);
    switch (e.kind) {
    case Regex::Kind::Eps:
        return n.kind == Node::Kind::Eps;
    case Regex::Kind::Chr:
        return n.kind == Node::Kind::Chr && n.sym == e.sym;
    case Regex::Kind::Star:
        return n.kind == Node::Kind::Star && models_walk(h, n.left, *e.left, used);
    case Regex::Kind::Seq:
        return n.kind == Node::Kind::Seq && models_walk(h, n.left, *e.left, used) &&
               models_walk(h, n.right, *e.right, used);
    case Regex::Kind::Alt:
        return n.kind == Node::Kind::Alt && models_walk(h, n.left, *e.left, used) &&
               models_walk(h, n.right, *e.right, used);
    }
    return false;
}

} // namespace

bool models(const Heap& h, Addr p, const Regex& e) {
    std::set<Addr> used;
    return models_walk(h, p, e, used);
}

bool check_knode(const Heap& h) {
    if (h.size() == 0) return false;
    if (h.knode(h.root()) != null_addr) return false;
    for (Addr p = 0; p < h.size(); ++p) {
        const Node& n = h.node(p);
        switch (n.kind) {
        case Node::Kind::Alt:
            if (h.knode(n.left) != h.knode(p)) return false;
            if (h.knode(n.right) != h.knode(p)) return false;
            break;
        case Node::Kind::Seq:
            if (h.knode(n.left) != n.right) return false;
            if (h.knode(n.right) != h.knode(p)) return false;
            break;
        case Node::Kind::Star:
            if (h.knode(n.left) != p) return false;
            break;
        default:
            break;
        }
    }
    return true;
}

namespace {

RegexPtr extract_walk(const Heap& h, Addr p, std::set<Addr>& seen) {
    if (!h.contains(p)) throw std::runtime_error("dangling address " + addr_name(p));
    if (!seen.insert(p).second) throw std::runtime_error("address revisited: " + addr_name(p));
    const Node& n = h.node(p);
    switch (n.kind) {
    case Node::Kind::Eps:  return eps();
    case Node::Kind::Chr:  return chr(n.sym);
    case Node::Kind::Star: return star(extract_walk(h, n.left, seen));
    case Node::Kind::Seq:  return seq(extract_walk(h, n.left, seen), extract_walk(h, n.right, seen));
    case Node::Kind::Alt:  return alt(extract_walk(h, n.left, seen), extract_walk(h, n.right, seen));
    }
    throw std::runtime_error("corrupt node");
}

} // namespace

RegexPtr extract(const Heap& h, Addr p) {
    std::set<Addr> seen;
    return extract_walk(h, p, seen);
}

std::string addr_name(Addr p) {
    return p == null_addr ? "null" : "p" + std::to_string(p);
}

Addr parse_addr(std::string_view name) {
    if (name == "null") return null_addr;
    if (name.size() < 2 || name[0] != 'p')
        throw std::runtime_error("bad address: " + std::string(name));
    Addr v = 0;
    for (char ch : name.substr(1)) {
        if (ch < '0' || ch > '9') throw std::runtime_error("bad address: " + std::string(name));
        v = v * 10 + (ch - '0');
    }
    return v;
}

std::string dump(const Heap& h) {
    std::string out;
    for (Addr p = 0; p < h.size(); ++p) {
        const Node& n = h.node(p);
        out += addr_name(p);
        out += '\t';
        switch (n.kind) {
        case Node::Kind::Eps:
            out += "eps";
            break;
        case Node::Kind::Chr:
            out += "char ";
            out += encode_utf8(n.sym);
            break;
        case Node::Kind::Alt:
            out += "alt " + addr_name(n.left) + " " + addr_name(n.right);
            break;
        case Node::Kind::Seq:
            out += "seq " + addr_name(n.left) + " " + addr_name(n.right);
            break;
        case Node::Kind::Star:
            out += "star " + addr_name(n.left);
            break;
        }
        out += '\t';
        out += addr_name(h.knode(p));
        out += '\n';
    }
    return out;
}

Heap parse_dump(std::string_view text) {
    Heap h;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fail = [&](const std::string& msg) -> std::runtime_error {
            return std::runtime_error("dump line " + std::to_string(lineno) + ": " + msg);
        };
        size_t tab1 = line.find('\t');
        size_t tab2 = line.find('\t', tab1 == std::string::npos ? tab1 : tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos)
            throw fail("expected three tab-separated columns");
        Addr p = parse_addr(std::string_view(line).substr(0, tab1));
        if (p != h.size()) throw fail("rows out of order");
        std::istringstream cols{line.substr(tab1 + 1, tab2 - tab1 - 1)};
        std::string op;
        cols >> op;
        Node n;
        if (op == "eps") {
            n.kind = Node::Kind::Eps;
        } else if (op == "char") {
            n.kind = Node::Kind::Chr;
            std::string sym;
            cols >> sym;
            std::u32string decoded = decode_utf8(sym);
            if (decoded.size() != 1) throw fail("char operand must be one scalar");
            n.sym = decoded[0];
        } else if (op == "alt" || op == "seq") {
            n.kind = op == "alt" ? Node::Kind::Alt : Node::Kind::Seq;
            std::string l, r;
            cols >> l >> r;
            n.left = parse_addr(l);
            n.right = parse_addr(r);
        } else if (op == "star") {
            n.kind = Node::Kind::Star;
            std::string l;
            cols >> l;
            n.left = parse_addr(l);
        } else {
            throw fail("unknown node form: " + op);
        }
        h.nodes.push_back(n);
        h.knodes.push_back(parse_addr(std::string_view(line).substr(tab2 + 1)));
    }
    if (h.size() == 0) throw std::runtime_error("empty dump");
    for (Addr p = 0; p < h.size(); ++p) {
        const Node& n = h.node(p);
        bool ok = true;
        if (n.kind == Node::Kind::Star) ok = h.contains(n.left);
        if (n.kind == Node::Kind::Alt || n.kind == Node::Kind::Seq)
            ok = h.contains(n.left) && h.contains(n.right);
        if (!ok)
            throw std::runtime_error("dump: child address out of range at " + addr_name(p));
        if (h.knode(p) != null_addr && !h.contains(h.knode(p)))
            throw std::runtime_error("dump: knode out of range at " + addr_name(p));
    }
    return h;
}

} // namespace rx
