#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rx {

// One input character. The alphabet is the full set of Unicode scalar
// values; comparison is exact equality.
using Symbol = char32_t;

// Input strings are sequences of symbols; machines hold suffix views that
// only ever advance.
using Input = std::u32string;
using InputView = std::u32string_view;

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

// Abstract syntax: eps | a | e* | e1 e2 | e1|e2. Plain immutable tree,
// no sharing required.
struct Regex {
    enum class Kind : uint8_t { Eps, Chr, Star, Seq, Alt };
    Kind kind;
    Symbol sym = 0;   // Chr
    RegexPtr left;    // Star body; Seq/Alt left
    RegexPtr right;   // Seq/Alt right
};

RegexPtr eps();
RegexPtr chr(Symbol a);
RegexPtr star(RegexPtr body);
RegexPtr seq(RegexPtr l, RegexPtr r);
RegexPtr alt(RegexPtr l, RegexPtr r);

// Structural three-way comparison; total order used by visited sets.
int cmp(const Regex& a, const Regex& b);
inline int cmp(const RegexPtr& a, const RegexPtr& b) {
    return a.get() == b.get() ? 0 : cmp(*a, *b);
}
inline bool equal(const RegexPtr& a, const RegexPtr& b) { return cmp(a, b) == 0; }

size_t ast_size(const Regex& e);

// Raised by parse(); `pos` is the offset in Unicode scalars into the pattern.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(size_t pos_, const std::string& what_)
        : std::runtime_error(what_ + " at position " + std::to_string(pos_)), pos(pos_) {}
};

// Concrete syntax. Literals are any scalar except the metacharacters
// `( ) | * \`, which are escaped with a backslash; `()` denotes eps;
// precedence star > concatenation > alternation, the binary operators
// left-associative. Pattern text is UTF-8.
RegexPtr parse(std::string_view text);

// Canonical printer with minimal parentheses; parse(print(e)) == e.
// The canonical form of star-of-star is the bare postfix chain, e.g.
// seq(star(star(a)), b) prints as "a**b".
std::string print(const Regex& e);
inline std::string print(const RegexPtr& e) { return print(*e); }

} // namespace rx
