#include "rx/regex.hpp"

#include <cassert>
#include <utility>

#include "rx/utf8.hpp"

namespace rx {

RegexPtr eps() {
    static const RegexPtr e = std::make_shared<Regex>(Regex{Regex::Kind::Eps, 0, nullptr, nullptr});
    return e;
}

RegexPtr chr(Symbol a) {
    return std::make_shared<Regex>(Regex{Regex::Kind::Chr, a, nullptr, nullptr});
}

RegexPtr star(RegexPtr body) {
    assert(body);
    return std::make_shared<Regex>(Regex{Regex::Kind::Star, 0, std::move(body), nullptr});
}

RegexPtr seq(RegexPtr l, RegexPtr r) {
    assert(l && r);
    return std::make_shared<Regex>(Regex{Regex::Kind::Seq, 0, std::move(l), std::move(r)});
}

RegexPtr alt(RegexPtr l, RegexPtr r) {
    assert(l && r);
    return std::make_shared<Regex>(Regex{Regex::Kind::Alt, 0, std::move(l), std::move(r)});
}

int cmp(const Regex& a, const Regex& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    switch (a.kind) {
    case Regex::Kind::Eps:
        return 0;
    case Regex::Kind::Chr:
        return a.sym == b.sym ? 0 : (a.sym < b.sym ? -1 : 1);
    case Regex::Kind::Star:
        return cmp(a.left, b.left);
    case Regex::Kind::Seq:
    case Regex::Kind::Alt:
        if (int c = cmp(a.left, b.left)) return c;
        return cmp(a.right, b.right);
    }
    return 0;
}

size_t ast_size(const Regex& e) {
    switch (e.kind) {
    case Regex::Kind::Eps:
    case Regex::Kind::Chr:
        return 1;
    case Regex::Kind::Star:
        return 1 + ast_size(*e.left);
    case Regex::Kind::Seq:
    case Regex::Kind::Alt:
        return 1 + ast_size(*e.left) + ast_size(*e.right);
    }
    return 0;
}

// ── Parser ─────────────────────────────────────────────────────────────

namespace {

bool is_meta(char32_t c) {
    return c == U'(' || c == U')' || c == U'|' || c == U'*' || c == U'\\';
}

struct Parser {
    std::u32string text;
    size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    char32_t peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    // An atom (or a postfix chain based on one) starts here?
    bool at_atom() const {
        if (at_end()) return false;
        char32_t c = peek();
        return c == U'(' || c == U'\\' || !is_meta(c);
    }

    RegexPtr parse_alt() {
        RegexPtr e = parse_seq();
        while (!at_end() && peek() == U'|') {
            ++pos;
            e = alt(std::move(e), parse_seq());
        }
        return e;
    }

    RegexPtr parse_seq() {
        if (!at_atom()) {
            if (at_end()) fail("unexpected end of pattern");
            if (peek() == U'*') fail("dangling `*`");
            if (peek() == U'|') fail("dangling `|`");
            fail("unbalanced parentheses");   // bare `)`
        }
        RegexPtr e = parse_star();
        while (at_atom()) e = seq(std::move(e), parse_star());
        return e;
    }

    RegexPtr parse_star() {
        RegexPtr e = parse_atom();
        while (!at_end() && peek() == U'*') {
            ++pos;
            e = star(std::move(e));
        }
        return e;
    }

    RegexPtr parse_atom() {
        char32_t c = peek();
        if (c == U'(') {
            size_t open = pos++;
            if (!at_end() && peek() == U')') {   // `()` denotes eps
                ++pos;
                return eps();
            }
            RegexPtr e = parse_alt();
            if (at_end() || peek() != U')') {
                pos = open;
                fail("unbalanced parentheses");
            }
            ++pos;
            return e;
        }
        if (c == U'\\') {
            ++pos;
            if (at_end()) fail("illegal escape");
            return chr(text[pos++]);
        }
        assert(!is_meta(c));
        ++pos;
        return chr(c);
    }
};

// Printing precedence: alternation 0, concatenation 1, star 2, atoms 3.
int prec(const Regex& e) {
    switch (e.kind) {
    case Regex::Kind::Alt: return 0;
    case Regex::Kind::Seq: return 1;
    case Regex::Kind::Star: return 2;
    default: return 3;
    }
}

void print_to(const Regex& e, int min_prec, std::string& out) {
    bool parens = prec(e) < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
    case Regex::Kind::Eps:
        out += "()";
        break;
    case Regex::Kind::Chr:
        if (is_meta(e.sym)) out += '\\';
        out += encode_utf8(e.sym);
        break;
    case Regex::Kind::Star:
        print_to(*e.left, 2, out);
        out += '*';
        break;
    case Regex::Kind::Seq:
        print_to(*e.left, 1, out);
        print_to(*e.right, 2, out);
        break;
    case Regex::Kind::Alt:
        print_to(*e.left, 0, out);
        out += '|';
        print_to(*e.right, 1, out);
        break;
    }
    if (parens) out += ')';
}

} // namespace

RegexPtr parse(std::string_view text) {
    Parser p{decode_utf8(text)};
    RegexPtr e = p.parse_alt();
    if (!p.at_end()) {
        // parse_alt stops only at `)` here
        p.fail("unbalanced parentheses");
    }
    return e;
}

std::string print(const Regex& e) {
    std::string out;
    print_to(e, 0, out);
    return out;
}

} // namespace rx
