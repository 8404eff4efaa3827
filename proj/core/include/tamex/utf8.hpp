#ifndef TAMEX_UTF8_HPP
#define TAMEX_UTF8_HPP

#include <string>
#include <string_view>
#include <vector>

namespace tamex::utf8 {

// Decodes a UTF-8 string into codepoints. Throws FormatError-free
// std::invalid_argument on malformed input; callers that read files wrap it.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& codepoints);
std::string encode_one(char32_t cp);

std::size_t count(std::string_view text);

// Removes every trailing terminal-punctuation character
// (U+3002 。, U+FF0E ．, '.', '!', '?'). Idempotent.
std::string strip_terminal_punctuation(std::string_view sentence);

}  // namespace tamex::utf8

#endif  // TAMEX_UTF8_HPP
