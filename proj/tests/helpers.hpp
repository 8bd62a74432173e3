#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "namescan/roster.hpp"

namespace testutil {

inline namescan::Person person(
    std::string last, std::string group,
    namescan::Gender gender = namescan::Gender::Unknown,
    std::optional<std::string> region = std::nullopt) {
  namescan::Person p;
  p.last_name_raw = last;
  p.last_name = last;
  p.group = std::move(group);
  p.gender = gender;
  p.region = std::move(region);
  return p;
}

// Roster from (last_name, group) pairs; names must already be normalized.
inline namescan::Roster make_roster(
    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::vector<namescan::Person> persons;
  persons.reserve(rows.size());
  for (const auto& [last, group] : rows) persons.push_back(person(last, group));
  return namescan::Roster::from_persons(std::move(persons));
}

inline namescan::IngestResult ingest_string(
    const std::string& csv, const namescan::NormalizationPolicy& policy = {},
    const namescan::ColumnMapping& columns = {},
    namescan::NameField field = namescan::NameField::LastName,
    char delimiter = ',') {
  std::istringstream in(csv);
  return namescan::ingest_roster(in, policy, columns, field, delimiter);
}

}  // namespace testutil
