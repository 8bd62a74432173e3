#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "namescan/names.hpp"

namespace namescan {

enum class Gender { Female, Male, Unknown };

// Which normalized name field an analysis keys on.
enum class NameField { LastName, FirstName };

std::string to_string(Gender g);
std::string to_string(NameField f);

struct Person {
  // Raw fields exactly as read, for lossless round-trips.
  std::string last_name_raw;
  std::string first_name_raw;  // may be empty

  // Normalized keys; last_name is always present, first_name only when the
  // raw field was non-empty and survived normalization.
  std::string last_name;
  std::optional<std::string> first_name;

  Gender gender = Gender::Unknown;
  std::string group;                      // discipline label; never empty
  std::optional<std::string> region;      // geographic stratum
  std::optional<std::string> institution;
  std::optional<std::string> initials;    // normalized, letters only

  bool operator==(const Person&) const = default;
};

// Immutable collection of persons with a per-group index and a selected
// name field. All analyses read names through name_of().
class Roster {
 public:
  Roster() = default;

  // Validates that every person carries the selected field (throws
  // InvalidFieldSelection otherwise) and that group labels are non-empty.
  static Roster from_persons(std::vector<Person> persons,
                             NameField field = NameField::LastName);

  const std::vector<Person>& persons() const noexcept { return persons_; }
  std::size_t size() const noexcept { return persons_.size(); }
  bool empty() const noexcept { return persons_.empty(); }
  NameField field_selector() const noexcept { return field_; }

  // Group label -> indices into persons(), labels in sorted order.
  const std::map<std::string, std::vector<std::size_t>>& group_index()
      const noexcept {
    return groups_;
  }

  const std::string& name_of(const Person& p) const;
  const std::string& name_of(std::size_t index) const;

  // All selected-field names, in person order.
  std::vector<std::string> names() const;
  // Selected-field names of one group (empty vector if label unknown).
  std::vector<std::string> group_names(const std::string& label) const;

  // Same persons keyed on another field (re-validates).
  Roster with_field(NameField field) const;

  bool operator==(const Roster& other) const;

 private:
  std::vector<Person> persons_;
  std::map<std::string, std::vector<std::size_t>> groups_;
  NameField field_ = NameField::LastName;
};

// Maps canonical column meanings to actual header names in the input.
struct ColumnMapping {
  std::string last_name = "last_name";
  std::string first_name = "first_name";
  std::string gender = "gender";
  std::string group = "group";
  std::string region = "region";
  std::string institution = "institution";
  std::string initials = "initials";
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
  std::size_t rows_dropped = 0;
  // Reason -> count; reasons are short stable strings
  // ("empty last_name", "empty first_name", "unnormalizable last_name", ...).
  std::map<std::string, std::size_t> drop_reasons;
};

struct IngestResult {
  Roster roster;
  IngestReport report;
};

// Reads a delimited table with a header row. Required columns: last_name and
// group (plus first_name when field == FirstName). Rows whose selected name
// fails normalization are dropped and counted; structural problems throw
// (SchemaError for the header, CsvParseError for malformed rows).
IngestResult ingest_roster(std::istream& in,
                           const NormalizationPolicy& policy = {},
                           const ColumnMapping& columns = {},
                           NameField field = NameField::LastName,
                           char delimiter = ',');

// Writes the canonical 7-column roster CSV; ingest(write(r)) == r.
void write_roster_csv(std::ostream& out, const Roster& roster,
                      char delimiter = ',');

// Collapses duplicate appointments: persons with the same (last_name,
// initials, group) key are counted once; first occurrence wins. Initials
// fall back to the first letter of the normalized first name when absent.
Roster dedup_uk(const Roster& roster);

// Number of distinct strings.
std::size_t distinct_count(std::span<const std::string> names);

}  // namespace namescan
