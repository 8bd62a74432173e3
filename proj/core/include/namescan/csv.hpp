#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace namescan {

// Minimal RFC-4180 reader: quoted fields may contain the delimiter,
// doubled quotes, and embedded newlines. CRLF and LF both accepted.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in, char delimiter = ',');

  // Next record, or nullopt at end of input.
  // Throws CsvParseError on malformed quoting.
  std::optional<std::vector<std::string>> next_row();

  // 1-based index of the record most recently returned.
  std::size_t row_number() const noexcept { return row_number_; }

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t row_number_ = 0;
};

// Quote a field iff it contains the delimiter, a quote, or a newline.
std::string csv_escape(const std::string& field, char delimiter = ',');

void write_csv_row(std::ostream& out, std::span<const std::string> fields,
                   char delimiter = ',');

}  // namespace namescan
