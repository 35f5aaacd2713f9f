#ifndef LEXIGAUGE_UNICODE_HPP
#define LEXIGAUGE_UNICODE_HPP

// Minimal UTF-8 and code point classification helpers.
//
// Only what tokenization needs: decoding, encoding, a letter/digit test, and
// simple case mapping for Latin, Greek and Cyrillic. Anything outside the
// known punctuation/symbol blocks is treated as a word character, which is
// the right default for scripts without case.

#include <string>
#include <string_view>

namespace lexigauge::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes UTF-8. Invalid or truncated sequences decode to U+FFFD, one per
/// offending lead byte, so decoding never fails.
inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto n = s.size();
  auto cont = [&](std::size_t k) {
    return k < n && (static_cast<unsigned char>(s[k]) & 0xC0) == 0x80;
  };
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
    } else if ((b0 & 0xE0) == 0xC0 && b0 >= 0xC2 && cont(i + 1)) {
      out.push_back(((b0 & 0x1F) << 6) | (s[i + 1] & 0x3F));
      i += 2;
    } else if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
      char32_t cp = ((b0 & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
      out.push_back(cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF) ? kReplacement : cp);
      i += 3;
    } else if ((b0 & 0xF8) == 0xF0 && b0 <= 0xF4 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
      char32_t cp = ((b0 & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                    ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
      out.push_back(cp < 0x10000 || cp > 0x10FFFF ? kReplacement : cp);
      i += 4;
    } else {
      out.push_back(kReplacement);
      ++i;
    }
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
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
}

inline std::string encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

/// Number of Unicode scalar values in a UTF-8 string.
inline std::size_t length(std::string_view s) { return decode(s).size(); }

inline bool is_space(char32_t c) {
  return c == ' ' || (c >= 0x09 && c <= 0x0D) || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000 || c == 0xFEFF;
}

inline bool is_digit(char32_t c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_alpha(char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

/// Letters, digits and combining marks. Diacritic letters are word characters.
inline bool is_word_char(char32_t c) {
  if (c < 0x80) return is_ascii_alpha(c) || is_digit(c);
  if (c < 0xC0) return c == 0xAA || c == 0xB5 || c == 0xBA;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c < 0x2000) {
    // Greek and Armenian punctuation that sits inside letter blocks.
    return c != 0x37E && c != 0x387 && c != 0x55D && c != 0x589 && c != kReplacement;
  }
  if (c <= 0x2BFF) return false;  // punctuation, symbols, arrows, math, shapes
  if (c >= 0x2E00 && c <= 0x2E7F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c >= 0xFF1A && c <= 0xFF20) return false;
  if (c >= 0xFF3B && c <= 0xFF40) return false;
  if (c >= 0xFF5B && c <= 0xFF65) return false;
  if (c >= 0xFFF0 && c <= 0xFFFF) return false;
  if (c >= 0x1F000 && c <= 0x1FAFF) return false;
  return true;
}

inline char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c < 0xC0) return c;
  if (c <= 0xDE) return c == 0xD7 ? c : c + 0x20;
  if (c >= 0x100 && c <= 0x137) return c | 1;
  if (c >= 0x139 && c <= 0x148) return (c & 1) ? c + 1 : c;
  if (c >= 0x14A && c <= 0x177) return c | 1;
  if (c == 0x178) return 0xFF;
  if (c >= 0x179 && c <= 0x17E) return (c & 1) ? c + 1 : c;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

inline bool is_upper(char32_t c) { return to_lower(c) != c; }

inline std::u32string to_lower(std::u32string_view s) {
  std::u32string out(s);
  for (auto& c : out) c = to_lower(c);
  return out;
}

/// Maps accented Latin letters onto their ASCII base letters and drops
/// combining marks. Other characters pass through unchanged.
inline std::u32string fold_diacritics(std::u32string_view s) {
  // Indexed by code point - 0xC0.
  static constexpr std::u32string_view latin1 =
      U"AAAAAAACEEEEIIIIDNOOOOO×OUUUUYTsaaaaaaaceeeeiiiidnooooo÷ouuuuyty";
  static_assert(latin1.size() == 0x40);
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (c >= 0x300 && c <= 0x36F) continue;
    if (c >= 0xC0 && c <= 0xFF) {
      if (c == 0xC6 || c == 0xE6) {
        out += (c == 0xC6) ? U"AE" : U"ae";
      } else if (c == 0xDF) {
        out += U"ss";
      } else {
        out.push_back(latin1[c - 0xC0]);
      }
    } else if (c >= 0x100 && c <= 0x17F) {
      static constexpr std::u32string_view ext_a =
          U"AaAaAaCcCcCcCcDdDdEeEeEeEeEeGgGgGgGgHhHhIiIiIiIiIiJjJjKkkLlLlLlLlLlNnNnNnnNnOoOoOoOoRrRrRrSsSsSsSsTtTtTtUuUuUuUuUuUuWwYyYZzZzZzs";
      static_assert(ext_a.size() == 0x80);
      out.push_back(ext_a[c - 0x100]);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace lexigauge::unicode

#endif  // LEXIGAUGE_UNICODE_HPP
