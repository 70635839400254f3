#pragma once

#include <cstdint>

#include "rx/regex.hpp"

namespace rx {

// Reference matcher: exhaustive derivation search over the big-step
// matching rules (Seq splits the string every way; Kleene iteration is
// restricted to a nonempty first chunk, the empty iteration being covered
// by the base rule). Memoized on (subexpression identity, suffix bounds).
// `steps`, when given, accumulates the number of subproblems evaluated.
bool oracle_matches(const Regex& e, InputView w, uint64_t* steps = nullptr);

} // namespace rx
