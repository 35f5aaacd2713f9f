#ifndef LEXIGAUGE_METRICS_HPP
#define LEXIGAUGE_METRICS_HPP

// Per-document lexical measures: title length in characters, Flesch-Kincaid
// grade level, and Yule's K.

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"
#include "lexigauge/textproc.hpp"
#include "lexigauge/unicode.hpp"

namespace lexigauge::metrics {

enum class TitleLengthConvention {
  kAllCharacters,  // whitespace-normalized, spaces and punctuation included
  kNonWhitespace,  // every character except whitespace
};

/// Character count of a title after trimming and collapsing whitespace runs
/// to a single space. Counts Unicode scalar values, not bytes.
inline std::size_t title_length(std::string_view title,
                                TitleLengthConvention convention = TitleLengthConvention::kAllCharacters) {
  const auto cps = unicode::decode(title);
  std::size_t count = 0;
  bool pending_space = false;
  for (char32_t c : cps) {
    if (unicode::is_space(c)) {
      pending_space = count > 0;
      continue;
    }
    if (pending_space && convention == TitleLengthConvention::kAllCharacters) ++count;
    pending_space = false;
    ++count;
  }
  if (count == 0) throw DomainError("title is empty after trimming");
  return count;
}

struct ReadabilityCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
};

/// FKGL = 0.39 (words / sentences) + 11.8 (syllables / words) - 15.59
inline double fkgl_from_counts(double words, double sentences, double syllables) {
  if (!(words > 0) || !(sentences > 0)) {
    throw DomainError("FKGL needs at least one word and one sentence");
  }
  return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59;
}

inline ReadabilityCounts readability_counts(std::string_view text, const textproc::TokenPolicy& policy = {},
                                            const std::vector<std::string>& abbreviations =
                                                textproc::default_abbreviations()) {
  ReadabilityCounts c;
  for (const auto& w : textproc::segment_words(unicode::decode(text), policy)) {
    ++c.words;
    c.syllables += static_cast<std::size_t>(textproc::count_syllables(w));
  }
  c.sentences = textproc::split_sentences(text, abbreviations).size();
  return c;
}

inline double fkgl(std::string_view text, const textproc::TokenPolicy& policy = {},
                   const std::vector<std::string>& abbreviations = textproc::default_abbreviations()) {
  const auto c = readability_counts(text, policy, abbreviations);
  if (c.words == 0) throw DomainError("FKGL of a text with no words");
  return fkgl_from_counts(static_cast<double>(c.words), static_cast<double>(c.sentences),
                          static_cast<double>(c.syllables));
}

/// K = 10^4 (sum_i f(i) i^2 - N) / N^2, which is the usual
/// 10^4 [-1/N + sum_i f(i) (i/N)^2] with the sum kept in integers so that an
/// all-distinct stream gives exactly zero.
inline double yules_k(const textproc::FrequencySpectrum& fs) {
  if (fs.tokens == 0) throw DomainError("Yule's K of an empty token stream");
  std::uint64_t sum_sq = 0;
  for (const auto& [freq, types] : fs.spectrum) {
    sum_sq += static_cast<std::uint64_t>(types) * freq * freq;
  }
  const auto n = static_cast<double>(fs.tokens);
  return 1e4 * static_cast<double>(sum_sq - fs.tokens) / (n * n);
}

inline double yules_k(const textproc::TokenStream& tokens) {
  return yules_k(textproc::frequency_spectrum(tokens));
}

struct LexicalRecord {
  std::string doc_id;
  std::size_t title_length_chars = 0;
  std::optional<double> fkgl;     // absent when the abstract has no words
  std::optional<double> yules_k;  // likewise
};

struct MetricPolicy {
  textproc::TokenPolicy tokens;
  std::vector<std::string> abbreviations = textproc::default_abbreviations();
  TitleLengthConvention title_convention = TitleLengthConvention::kAllCharacters;
};

inline LexicalRecord measure(std::string doc_id, std::string_view title, std::string_view abstract,
                             const MetricPolicy& policy = {}) {
  LexicalRecord r;
  r.doc_id = std::move(doc_id);
  r.title_length_chars = title_length(title, policy.title_convention);
  const auto ts = textproc::tokenize(abstract, policy.tokens);
  if (!ts.empty()) {
    r.fkgl = fkgl(abstract, policy.tokens, policy.abbreviations);
    r.yules_k = yules_k(ts);
  }
  return r;
}

inline constexpr std::string_view kMetricCsvHeader = "doc_id,title_length_chars,fkgl,yules_k";

/// Full-precision CSV; missing values are empty fields.
inline void write_metric_csv(std::ostream& out, const std::vector<LexicalRecord>& rows) {
  out << kMetricCsvHeader << '\n';
  auto num = [](const std::optional<double>& v) { return v ? fmt::format("{}", *v) : std::string{}; };
  for (const auto& r : rows) {
    csv::write_record(out, {r.doc_id, std::to_string(r.title_length_chars), num(r.fkgl), num(r.yules_k)});
  }
}

inline std::vector<LexicalRecord> read_metric_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || csv::Record{"doc_id", "title_length_chars", "fkgl", "yules_k"} != *header) {
    throw ParseError(std::string("metric CSV must start with header ") + std::string(kMetricCsvHeader), 1);
  }
  auto parse_double = [&](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("not a number: '" + s + "'", reader.row());
  };
  std::vector<LexicalRecord> rows;
  while (auto rec = reader.next()) {
    if (rec->size() == 1 && rec->front().empty()) continue;
    if (rec->size() != 4) throw ParseError("expected 4 fields", reader.row());
    LexicalRecord r;
    r.doc_id = (*rec)[0];
    const auto& len = (*rec)[1];
    auto [ptr, ec] = std::from_chars(len.data(), len.data() + len.size(), r.title_length_chars);
    if (ec != std::errc{} || ptr != len.data() + len.size()) {
      throw ParseError("bad title length '" + len + "'", reader.row());
    }
    r.fkgl = parse_double((*rec)[2]);
    r.yules_k = parse_double((*rec)[3]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lexigauge::metrics

#endif  // LEXIGAUGE_METRICS_HPP
