#ifndef LEXIGAUGE_TEXTPROC_HPP
#define LEXIGAUGE_TEXTPROC_HPP

// Text segmentation primitives: words, sentences, syllables, and the token
// frequency spectrum. Every readability and diversity number in the library
// is defined relative to these rules, so they are deliberately simple,
// deterministic, and versioned through kSegmentationVersion.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexigauge/error.hpp"
#include "lexigauge/unicode.hpp"

namespace lexigauge::textproc {

inline constexpr std::string_view kSegmentationVersion = "lexigauge-seg/1";

struct TokenPolicy {
  bool keep_numbers = true;      // tokens without any letter, e.g. "2010" or "3.5"
  bool bind_hyphens = true;      // "top-tier" is one token
  bool bind_apostrophes = true;  // "yule's" is one token
  bool fold_diacritics = false;  // "señor" -> "senor"

  /// Reads `key = value` lines (`#` starts a comment). Unknown keys and
  /// non-boolean values are configuration errors.
  static TokenPolicy load(std::istream& in) {
    TokenPolicy p;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string{};
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("token policy line " + std::to_string(lineno) + ": expected key = value");
      }
      const auto key = trim(line.substr(0, eq));
      const auto val = trim(line.substr(eq + 1));
      bool b = false;
      if (val == "true" || val == "1" || val == "yes") {
        b = true;
      } else if (!(val == "false" || val == "0" || val == "no")) {
        throw ConfigError("token policy line " + std::to_string(lineno) + ": bad boolean '" + val + "'");
      }
      if (key == "keep_numbers") {
        p.keep_numbers = b;
      } else if (key == "bind_hyphens") {
        p.bind_hyphens = b;
      } else if (key == "bind_apostrophes") {
        p.bind_apostrophes = b;
      } else if (key == "fold_diacritics") {
        p.fold_diacritics = b;
      } else {
        throw ConfigError("token policy line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    }
    return p;
  }
};

struct TokenStream {
  std::vector<std::string> tokens;
  std::size_t source_char_count = 0;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

struct SentenceSplit {
  std::vector<std::string> sentences;

  std::size_t size() const noexcept { return sentences.size(); }
};

struct SyllableCount {
  std::string word;
  int syllables = 1;
};

struct FrequencySpectrum {
  std::size_t tokens = 0;  // N
  std::size_t types = 0;   // V
  /// frequency i -> number of types occurring exactly i times
  std::map<std::size_t, std::size_t> spectrum;
};

namespace detail {

inline bool is_hyphen(char32_t c) { return c == '-' || c == 0x2010 || c == 0x2011; }
inline bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019 || c == 0x02BC; }

inline bool has_letter(std::u32string_view w) {
  return std::any_of(w.begin(), w.end(),
                     [](char32_t c) { return unicode::is_word_char(c) && !unicode::is_digit(c); });
}

}  // namespace detail

/// Splits text into raw word spans with their original case. A word is a
/// maximal run of word characters, optionally joined by the policy's
/// binders (hyphen, apostrophe) and by `.` or `,` between two digits.
inline std::vector<std::u32string> segment_words(std::u32string_view text,
                                                 const TokenPolicy& policy = {}) {
  std::vector<std::u32string> words;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!unicode::is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::u32string word;
    while (i < n) {
      const char32_t c = text[i];
      if (unicode::is_word_char(c)) {
        word.push_back(c);
        ++i;
        continue;
      }
      const bool next_is_word = i + 1 < n && unicode::is_word_char(text[i + 1]);
      if (!next_is_word) break;
      const bool binds = (policy.bind_hyphens && detail::is_hyphen(c)) ||
                         (policy.bind_apostrophes && detail::is_apostrophe(c)) ||
                         ((c == '.' || c == ',') && unicode::is_digit(word.back()) &&
                          unicode::is_digit(text[i + 1]));
      if (!binds) break;
      word.push_back(detail::is_apostrophe(c) ? U'\'' : detail::is_hyphen(c) ? U'-' : c);
      ++i;
    }
    if (policy.keep_numbers || detail::has_letter(word)) words.push_back(std::move(word));
  }
  return words;
}

inline std::string normalize_token(std::u32string_view raw, const TokenPolicy& policy = {}) {
  auto lower = unicode::to_lower(raw);
  if (policy.fold_diacritics) lower = unicode::fold_diacritics(lower);
  return unicode::encode(lower);
}

/// Lowercased word tokens. Punctuation is never a token.
inline TokenStream tokenize(std::string_view text, const TokenPolicy& policy = {}) {
  const auto decoded = unicode::decode(text);
  TokenStream out;
  out.source_char_count = decoded.size();
  for (const auto& w : segment_words(decoded, policy)) {
    out.tokens.push_back(normalize_token(w, policy));
  }
  return out;
}

inline const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> list = {
      "e.g.", "i.e.", "et al.", "vs.", "cf.", "etc.", "approx.", "fig.", "figs.", "no.",
      "vol.", "pp.", "eq.", "dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "inc.", "ltd.", "co.",
      "corp.", "jr.", "sr.", "u.s.", "u.k."};
  return list;
}

/// One abbreviation per line; blank lines and `#` comments are skipped.
/// Entries are matched case-insensitively.
inline std::vector<std::string> load_abbreviations(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(unicode::encode(unicode::to_lower(unicode::decode(
        line.substr(b, line.find_last_not_of(" \t") - b + 1)))));
  }
  return out;
}

namespace detail {

inline bool is_terminator(char32_t c) { return c == '.' || c == '!' || c == '?'; }

inline bool is_closer(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}' || c == 0x201D ||
         c == 0x2019 || c == 0xBB;
}

inline bool is_opener(char32_t c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == 0x201C || c == 0x2018 || c == 0xAB;
}

inline bool ends_with_abbreviation(std::u32string_view lowered_prefix,
                                   const std::vector<std::u32string>& abbrevs) {
  for (const auto& a : abbrevs) {
    if (a.size() > lowered_prefix.size()) continue;
    if (lowered_prefix.substr(lowered_prefix.size() - a.size()) != a) continue;
    const std::size_t start = lowered_prefix.size() - a.size();
    if (start == 0 || !unicode::is_word_char(lowered_prefix[start - 1])) return true;
  }
  return false;
}

inline std::u32string trim(std::u32string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && unicode::is_space(s[b])) ++b;
  while (e > b && unicode::is_space(s[e - 1])) --e;
  return std::u32string(s.substr(b, e - b));
}

inline bool has_word_char(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return unicode::is_word_char(c); });
}

}  // namespace detail

/// Sentence boundaries fall after a run of `.`, `!` or `?` (plus any closing
/// quotes or brackets) that is followed by whitespace and then an uppercase
/// letter or digit, or by the end of the text. A single period ending a
/// listed abbreviation never splits. Text with words but no terminator is one
/// sentence.
inline SentenceSplit split_sentences(std::string_view text,
                                     const std::vector<std::string>& abbreviations = default_abbreviations()) {
  const auto t = unicode::decode(text);
  const auto lowered = unicode::to_lower(t);
  std::vector<std::u32string> abbrevs;
  abbrevs.reserve(abbreviations.size());
  for (const auto& a : abbreviations) abbrevs.push_back(unicode::to_lower(unicode::decode(a)));

  SentenceSplit out;
  auto emit = [&](std::size_t from, std::size_t to) {
    auto s = detail::trim(std::u32string_view(t).substr(from, to - from));
    if (detail::has_word_char(s)) out.sentences.push_back(unicode::encode(s));
  };

  const std::size_t n = t.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!detail::is_terminator(t[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && detail::is_terminator(t[j])) ++j;
    const bool single_period = (j - i == 1 && t[i] == '.');
    while (j < n && detail::is_closer(t[j])) ++j;

    bool boundary = false;
    if (j == n) {
      boundary = true;
    } else if (unicode::is_space(t[j])) {
      std::size_t k = j;
      while (k < n && unicode::is_space(t[k])) ++k;
      while (k < n && detail::is_opener(t[k])) ++k;
      boundary = k == n || unicode::is_upper(t[k]) || unicode::is_digit(t[k]);
    }
    if (boundary && single_period &&
        detail::ends_with_abbreviation(std::u32string_view(lowered).substr(0, i + 1), abbrevs)) {
      boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  if (start < n) {
    auto rest = detail::trim(std::u32string_view(t).substr(start));
    if (detail::has_word_char(rest)) {
      out.sentences.push_back(unicode::encode(rest));
    } else if (!out.sentences.empty() && !rest.empty()) {
      out.sentences.back() += " " + unicode::encode(rest);
    }
  }
  return out;
}

namespace detail {

inline bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

inline int vowel_runs(std::string_view w) {
  int runs = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    // Leading "y" before a vowel is a consonant (year, yes).
    const bool v = is_vowel(w[i]) && !(i == 0 && w[i] == 'y' && w.size() > 1 && is_vowel(w[1]));
    if (v && !in_run) ++runs;
    in_run = v;
  }
  return runs;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Syllables of a lowercase a-z string.
inline int syllables_core(std::string_view w) {
  int n = vowel_runs(w);
  const std::size_t len = w.size();
  if (n > 1 && len >= 3) {
    const char last = w[len - 1];
    const char prev = w[len - 2];
    const char prev2 = w[len - 3];
    if (last == 'e' && !is_vowel(prev) && !(prev == 'l' && !is_vowel(prev2))) {
      --n;  // silent final e: like, make; but table, little keep theirs
    } else if (last == 'd' && prev == 'e' && !is_vowel(prev2) && prev2 != 't' && prev2 != 'd') {
      --n;  // liked, based
    } else if (last == 's' && prev == 'e' && !is_vowel(prev2)) {
      const bool voiced = prev2 == 's' || prev2 == 'x' || prev2 == 'z' || prev2 == 'c' ||
                          prev2 == 'g' || ends_with(w, "ches") || ends_with(w, "shes") ||
                          (prev2 == 'l' && len >= 4 && !is_vowel(w[len - 4]));
      if (!voiced) --n;  // types, makes
    }
  }
  return std::max(n, 1);
}

// Derivational suffixes after a silent e: manage+ment, like+ly.
inline int syllables_part(std::string_view w) {
  static constexpr std::string_view suffixes[] = {"ments", "ment", "ness", "less", "fully", "ful", "ly"};
  for (auto suf : suffixes) {
    if (!ends_with(w, suf) || w.size() < suf.size() + 3) continue;
    const auto stem = w.substr(0, w.size() - suf.size());
    const char last = stem.back();
    const char prev = stem[stem.size() - 2];
    if (last == 'e' && !is_vowel(prev) && prev != 'l' && vowel_runs(stem) > 1) {
      return syllables_core(stem) + syllables_core(suf);
    }
  }
  return syllables_core(w);
}

}  // namespace detail

/// Heuristic English syllable count: vowel groups (y counts as a vowel)
/// adjusted for silent endings, floored at one. Numbers and acronyms
/// (all-caps words of two or more letters) count as one syllable; hyphenated
/// compounds are the sum of their parts.
inline int count_syllables(std::u32string_view raw_word) {
  if (raw_word.empty()) return 1;
  std::size_t letters = 0;
  std::size_t uppers = 0;
  for (char32_t c : raw_word) {
    if (unicode::is_digit(c)) return 1;
    if (unicode::is_word_char(c)) {
      ++letters;
      if (unicode::is_upper(c)) ++uppers;
    }
  }
  if (letters >= 2 && uppers == letters) return 1;

  const auto folded = unicode::fold_diacritics(unicode::to_lower(raw_word));
  int total = 0;
  std::string part;
  auto flush = [&] {
    if (!part.empty()) total += detail::syllables_part(part);
    part.clear();
  };
  for (char32_t c : folded) {
    if (c >= 'a' && c <= 'z') {
      part.push_back(static_cast<char>(c));
    } else if (detail::is_hyphen(c)) {
      flush();
    }
  }
  flush();
  return std::max(total, 1);
}

inline SyllableCount count_syllables(std::string_view word) {
  return {std::string(word), count_syllables(unicode::decode(word))};
}

/// Counts how many types occur exactly i times, for every i.
inline FrequencySpectrum frequency_spectrum(const std::vector<std::string>& tokens) {
  std::unordered_map<std::string_view, std::size_t> counts;
  for (const auto& t : tokens) ++counts[t];
  FrequencySpectrum fs;
  fs.tokens = tokens.size();
  fs.types = counts.size();
  for (const auto& [type, freq] : counts) ++fs.spectrum[freq];
  return fs;
}

inline FrequencySpectrum frequency_spectrum(const TokenStream& ts) { return frequency_spectrum(ts.tokens); }

}  // namespace lexigauge::textproc

#endif  // LEXIGAUGE_TEXTPROC_HPP
