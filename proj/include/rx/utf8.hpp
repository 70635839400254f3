#pragma once

#include <string>
#include <string_view>

namespace rx {

// Decodes UTF-8 into Unicode scalar values. Throws std::runtime_error on
// malformed input (truncated sequence, overlong encoding, surrogate).
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view text);

} // namespace rx
