#ifndef LEXIGAUGE_CSV_HPP
#define LEXIGAUGE_CSV_HPP

// RFC 4180 reader and writer. Accepts LF or CRLF record terminators and a
// leading UTF-8 byte order mark; quoted fields may span lines.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lexigauge/error.hpp"

namespace lexigauge::csv {

using Record = std::vector<std::string>;

class Reader {
 public:
  explicit Reader(std::istream& in, char delimiter = ',') : in_(in), delim_(delimiter) {}

  /// Next record, or nullopt at end of input. Throws ParseError on an
  /// unterminated quoted field or stray characters after a closing quote.
  std::optional<Record> next() {
    if (!started_) {
      started_ = true;
      if (in_.peek() == 0xEF) {
        char bom[3];
        in_.read(bom, 3);
        if (!(in_.gcount() == 3 && bom[1] == '\xBB' && bom[2] == '\xBF')) {
          for (auto k = in_.gcount(); k > 0; --k) in_.unget();
        }
      }
    }
    if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
    ++row_;
    const std::size_t start_row = row_;
    Record rec;
    std::string field;
    enum class State { kFieldStart, kUnquoted, kQuoted, kQuoteInQuoted } state = State::kFieldStart;
    for (;;) {
      const int ci = in_.get();
      if (ci == std::char_traits<char>::eof()) {
        if (state == State::kQuoted) {
          throw ParseError("unterminated quoted field", start_row);
        }
        rec.push_back(std::move(field));
        return rec;
      }
      const char c = static_cast<char>(ci);
      switch (state) {
        case State::kFieldStart:
        case State::kUnquoted:
          if (c == '"' && state == State::kFieldStart) {
            state = State::kQuoted;
          } else if (c == delim_) {
            rec.push_back(std::move(field));
            field.clear();
            state = State::kFieldStart;
          } else if (c == '\n' || c == '\r') {
            if (c == '\r' && in_.peek() == '\n') in_.get();
            rec.push_back(std::move(field));
            return rec;
          } else {
            field.push_back(c);
            state = State::kUnquoted;
          }
          break;
        case State::kQuoted:
          if (c == '"') {
            state = State::kQuoteInQuoted;
          } else {
            if (c == '\n') ++row_;
            field.push_back(c);
          }
          break;
        case State::kQuoteInQuoted:
          if (c == '"') {
            field.push_back('"');
            state = State::kQuoted;
          } else if (c == delim_) {
            rec.push_back(std::move(field));
            field.clear();
            state = State::kFieldStart;
          } else if (c == '\n' || c == '\r') {
            if (c == '\r' && in_.peek() == '\n') in_.get();
            rec.push_back(std::move(field));
            return rec;
          } else {
            throw ParseError("unexpected character after closing quote", start_row);
          }
          break;
      }
    }
  }

  /// Physical line number where the last returned record started (1-based).
  std::size_t row() const noexcept { return row_; }

 private:
  std::istream& in_;
  char delim_;
  bool started_ = false;
  std::size_t row_ = 0;
};

inline std::vector<Record> read_all(std::istream& in) {
  Reader reader(in);
  std::vector<Record> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

inline std::string quote(std::string_view field, char delimiter = ',') {
  const bool needs = field.find_first_of(std::string{'"', '\r', '\n', delimiter}) != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_record(std::ostream& out, const Record& rec) {
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i) out << ',';
    out << quote(rec[i]);
  }
  out << '\n';
}

}  // namespace lexigauge::csv

#endif  // LEXIGAUGE_CSV_HPP
