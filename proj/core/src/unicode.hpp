#pragma once

#include <string>
#include <string_view>

namespace semqa::uni {

bool is_punctuation(char32_t cp);
bool is_whitespace(char32_t cp);
char32_t to_lower(char32_t cp);

// Decodes UTF-8; each invalid byte becomes U+FFFD.
std::u32string decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

// Code point ending at byte position `end` (0 when none/invalid lead found).
char32_t codepoint_before(std::string_view text, std::size_t end);
// Code point starting at byte position `begin` (0 when out of range).
char32_t codepoint_at(std::string_view text, std::size_t begin);

}  // namespace semqa::uni
