// Minimal UTF-8 decoding. Invalid bytes decode as Latin-1 so that measuring
// or abbreviating malformed input degrades instead of failing.
#ifndef NAMESTACK_UNICODE_HPP
#define NAMESTACK_UNICODE_HPP

#include <cstdint>
#include <string_view>

namespace namestack::detail {

// Decodes the codepoint starting at s[pos] and advances pos past it.
inline char32_t utf8_next(std::string_view s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    const unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++pos;
        return b0;  // stray continuation byte, Latin-1 fallback
    }
    if (pos + len > s.size()) {
        ++pos;
        return b0;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const unsigned char b = byte(pos + i);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return b0;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += len;
    return cp;
}

// Byte length of the codepoint starting at s[pos], without decoding it.
inline std::size_t utf8_len(std::string_view s, std::size_t pos) {
    std::size_t p = pos;
    utf8_next(s, p);
    return p - pos;
}

}  // namespace namestack::detail

#endif
