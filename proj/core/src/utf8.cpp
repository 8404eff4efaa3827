#include "tamex/utf8.hpp"

#include <stdexcept>

namespace tamex::utf8 {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

[[noreturn]] void fail(std::size_t pos) {
    throw std::invalid_argument("invalid UTF-8 at byte offset " + std::to_string(pos));
}

}  // namespace

std::vector<char32_t> decode(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char b0 = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            fail(i);
        }
        if (i + len > text.size()) fail(i);
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(text[i + k]);
            if (!is_continuation(b)) fail(i + k);
            cp = (cp << 6) | (b & 0x3F);
        }
        // Reject overlong encodings and surrogate range.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
            (cp >= 0xD800 && cp <= 0xDFFF)) {
            fail(i);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_one(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode(const std::vector<char32_t>& codepoints) {
    std::string out;
    for (char32_t cp : codepoints) out += encode_one(cp);
    return out;
}

std::size_t count(std::string_view text) { return decode(text).size(); }

std::string strip_terminal_punctuation(std::string_view sentence) {
    std::vector<char32_t> cps = decode(sentence);
    auto is_terminal = [](char32_t cp) {
        return cp == U'。' || cp == U'．' || cp == U'.' || cp == U'!' ||
               cp == U'?';
    };
    while (!cps.empty() && is_terminal(cps.back())) cps.pop_back();
    return encode(cps);
}

}  // namespace tamex::utf8
