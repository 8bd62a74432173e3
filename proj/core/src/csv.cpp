#include "namescan/csv.hpp"

#include "namescan/errors.hpp"

namespace namescan {

CsvReader::CsvReader(std::istream& in, char delimiter)
    : in_(in), delimiter_(delimiter) {}

std::optional<std::vector<std::string>> CsvReader::next_row() {
  int first = in_.peek();
  if (first == std::istream::traits_type::eof()) return std::nullopt;

  ++row_number_;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;

  for (;;) {
    int ci = in_.get();
    if (ci == std::istream::traits_type::eof()) {
      if (in_quotes)
        throw CsvParseError(row_number_, "unterminated quoted field");
      fields.push_back(std::move(field));
      return fields;
    }
    char c = static_cast<char>(ci);

    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }

    if (c == '"') {
      if (!field.empty() || field_was_quoted)
        throw CsvParseError(row_number_, "quote inside unquoted field");
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == delimiter_) {
      fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\r') {
      if (in_.peek() == '\n') in_.get();
      fields.push_back(std::move(field));
      return fields;
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(c);
    }
  }
}

std::string csv_escape(const std::string& field, char delimiter) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == delimiter || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields,
                   char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(delimiter);
    out << csv_escape(fields[i], delimiter);
  }
  out.put('\n');
}

}  // namespace namescan
