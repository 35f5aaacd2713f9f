#ifndef LEXIGAUGE_INGEST_HPP
#define LEXIGAUGE_INGEST_HPP

// Bibliographic CSV ingestion, reproducible sampling, and journal-level
// descriptives (documents, authors per document, citations per document,
// annual growth).

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lexigauge/csv.hpp"
#include "lexigauge/error.hpp"

namespace lexigauge::ingest {

struct BibRecord {
  std::string id;
  std::string title;
  std::string abstract;
  std::optional<int> year;
  std::string venue;
  std::int64_t citations = 0;
  std::int64_t author_count = 0;

  bool operator==(const BibRecord&) const = default;
};

struct Corpus {
  std::string label;
  std::vector<BibRecord> records;
  std::size_t skipped_empty_title = 0;

  std::size_t size() const noexcept { return records.size(); }
};

struct Column {
  std::string name;
  bool required = true;  // absent header is a configuration error
};

/// Maps record fields onto CSV header names. Only the title column is
/// mandatory; without an id column, ids are the 1-based data row numbers.
struct ColumnMap {
  Column title{"Title"};
  std::optional<Column> id;
  std::optional<Column> abstract;
  std::optional<Column> year;
  std::optional<Column> venue;
  std::optional<Column> citations;
  std::optional<Column> author_count;

  /// Scopus export names. Missing non-title columns are tolerated.
  static ColumnMap defaults() {
    ColumnMap m;
    m.abstract = Column{"Abstract", false};
    m.year = Column{"Year", false};
    m.venue = Column{"Source title", false};
    m.citations = Column{"Cited by", false};
    m.author_count = Column{"Author count", false};
    return m;
  }
};

inline constexpr int kMinYear = 1900;
inline constexpr int kMaxYear = 2100;

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1));
}

template <typename Int>
std::optional<Int> parse_int(std::string_view raw, std::string_view what, std::size_t row) {
  const auto s = trim(raw);
  if (s.empty()) return std::nullopt;
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string(what) + " is not an integer: '" + s + "'", row);
  }
  return v;
}

}  // namespace detail

/// Parses a bibliographic CSV export into a corpus. Rows whose title is
/// blank are skipped and counted; blank lines are ignored.
inline Corpus parse_bibliographic_csv(std::istream& in, const ColumnMap& columns = ColumnMap::defaults(),
                                      std::string label = {}) {
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header) throw ConfigError("CSV input is empty (no header row)");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header->size(); ++i) index.emplace(detail::trim((*header)[i]), i);

  auto resolve = [&](const std::optional<Column>& col) -> std::optional<std::size_t> {
    if (!col) return std::nullopt;
    if (auto it = index.find(col->name); it != index.end()) return it->second;
    if (col->required) throw ConfigError("column '" + col->name + "' not found in CSV header");
    return std::nullopt;
  };
  const auto title_col = resolve(Column{columns.title.name, true});
  const auto id_col = resolve(columns.id);
  const auto abstract_col = resolve(columns.abstract);
  const auto year_col = resolve(columns.year);
  const auto venue_col = resolve(columns.venue);
  const auto cites_col = resolve(columns.citations);
  const auto authors_col = resolve(columns.author_count);

  Corpus corpus;
  corpus.label = std::move(label);
  std::unordered_set<std::string> ids;
  std::size_t data_row = 0;
  while (auto rec = reader.next()) {
    if (rec->size() == 1 && detail::trim(rec->front()).empty()) continue;
    ++data_row;
    const auto row = reader.row();
    if (rec->size() > header->size()) {
      throw ParseError("row has " + std::to_string(rec->size()) + " fields but the header has " +
                           std::to_string(header->size()),
                       row);
    }
    rec->resize(header->size());
    auto field = [&](std::optional<std::size_t> col) -> const std::string& {
      static const std::string empty;
      return col ? (*rec)[*col] : empty;
    };

    BibRecord r;
    r.title = detail::trim(field(title_col));
    if (r.title.empty()) {
      ++corpus.skipped_empty_title;
      continue;
    }
    r.id = id_col ? detail::trim(field(id_col)) : std::to_string(data_row);
    if (r.id.empty()) throw ParseError("empty record id", row);
    if (!ids.insert(r.id).second) throw ParseError("duplicate record id '" + r.id + "'", row);
    r.abstract = detail::trim(field(abstract_col));
    r.year = detail::parse_int<int>(field(year_col), "year", row);
    if (r.year && (*r.year < kMinYear || *r.year > kMaxYear)) {
      throw ParseError("year " + std::to_string(*r.year) + " outside [1900, 2100]", row);
    }
    r.venue = detail::trim(field(venue_col));
    r.citations = detail::parse_int<std::int64_t>(field(cites_col), "citation count", row).value_or(0);
    r.author_count = detail::parse_int<std::int64_t>(field(authors_col), "author count", row).value_or(0);
    if (r.citations < 0 || r.author_count < 0) throw ParseError("negative count", row);
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

/// Writes a corpus with the header names of `columns` (an "Id" column is
/// used when the map has none). Parsing the output with the same map and an
/// id column yields identical records.
inline void write_bibliographic_csv(std::ostream& out, const Corpus& corpus,
                                    const ColumnMap& columns = ColumnMap::defaults()) {
  auto name = [](const std::optional<Column>& c, std::string_view fallback) {
    return c ? c->name : std::string(fallback);
  };
  csv::write_record(out, {name(columns.id, "Id"), columns.title.name, name(columns.abstract, "Abstract"),
                          name(columns.year, "Year"), name(columns.venue, "Source title"),
                          name(columns.citations, "Cited by"), name(columns.author_count, "Author count")});
  for (const auto& r : corpus.records) {
    csv::write_record(out, {r.id, r.title, r.abstract, r.year ? std::to_string(*r.year) : std::string{}, r.venue,
                            std::to_string(r.citations), std::to_string(r.author_count)});
  }
}

/// Identity of the sampling algorithm, recorded in reports.
inline constexpr std::string_view kSamplerId = "mt19937_64/partial-fisher-yates/v1";

namespace detail {

// Unbiased draw in [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit, so samples would differ across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace detail

/// Deterministic shuffle driven by a seeded mt19937_64.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[detail::bounded(rng, i)]);
  }
}

/// Uniform sample of `n` records without replacement. The sample keeps the
/// corpus's input order, and (corpus, n, seed) fully determines it.
inline Corpus sample_corpus(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
  if (n == 0 || n > corpus.size()) {
    throw SizeError("cannot sample " + std::to_string(n) + " of " + std::to_string(corpus.size()) +
                    " records from corpus '" + corpus.label + "'");
  }
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::swap(idx[i], idx[i + detail::bounded(rng, corpus.size() - i)]);
  }
  idx.resize(n);
  std::sort(idx.begin(), idx.end());

  Corpus out;
  out.label = corpus.label;
  out.records.reserve(n);
  for (auto i : idx) out.records.push_back(corpus.records[i]);
  return out;
}

struct BiblioSummary {
  std::size_t document_count = 0;
  std::int64_t author_total = 0;
  double authors_per_document = 0;
  double citations_per_document = 0;
  double annual_growth_pct = 0;
  std::optional<std::pair<int, int>> timespan;  // first and last year with documents
};

/// Compound annual growth of yearly document counts between the first and
/// last year present, in percent.
inline double annual_growth_pct(const std::map<int, std::size_t>& per_year) {
  if (per_year.size() < 2) return 0.0;
  const auto& [first_year, first_count] = *per_year.begin();
  const auto& [last_year, last_count] = *per_year.rbegin();
  const double span = last_year - first_year;
  return (std::pow(static_cast<double>(last_count) / static_cast<double>(first_count), 1.0 / span) - 1.0) * 100.0;
}

inline BiblioSummary summarize(std::size_t documents, std::int64_t author_total, std::int64_t citation_total,
                               const std::map<int, std::size_t>& per_year) {
  if (documents == 0) throw DomainError("bibliometric descriptives of an empty corpus");
  BiblioSummary s;
  s.document_count = documents;
  s.author_total = author_total;
  s.authors_per_document = static_cast<double>(author_total) / static_cast<double>(documents);
  s.citations_per_document = static_cast<double>(citation_total) / static_cast<double>(documents);
  s.annual_growth_pct = annual_growth_pct(per_year);
  if (!per_year.empty()) s.timespan = std::pair{per_year.begin()->first, per_year.rbegin()->first};
  return s;
}

/// `per_record_author_counts` aligns with the corpus records. When a
/// distinct-author total is known (authors publishing several papers counted
/// once) pass it as `distinct_author_total`; otherwise the per-record counts
/// are summed. Records without a year are left out of the growth rate only.
inline BiblioSummary bibliometric_descriptives(const Corpus& corpus,
                                               std::span<const std::int64_t> per_record_author_counts,
                                               std::optional<std::int64_t> distinct_author_total = std::nullopt) {
  if (corpus.records.empty()) throw DomainError("bibliometric descriptives of an empty corpus");
  if (per_record_author_counts.size() != corpus.size()) {
    throw DomainError("author counts do not align with corpus records");
  }
  std::map<int, std::size_t> per_year;
  std::int64_t citations = 0;
  for (const auto& r : corpus.records) {
    citations += r.citations;
    if (r.year) ++per_year[*r.year];
  }
  const auto authors = distinct_author_total.value_or(
      std::accumulate(per_record_author_counts.begin(), per_record_author_counts.end(), std::int64_t{0}));
  return summarize(corpus.size(), authors, citations, per_year);
}

inline BiblioSummary bibliometric_descriptives(const Corpus& corpus,
                                               std::optional<std::int64_t> distinct_author_total = std::nullopt) {
  std::vector<std::int64_t> counts;
  counts.reserve(corpus.size());
  for (const auto& r : corpus.records) counts.push_back(r.author_count);
  return bibliometric_descriptives(corpus, counts, distinct_author_total);
}

}  // namespace lexigauge::ingest

#endif  // LEXIGAUGE_INGEST_HPP
