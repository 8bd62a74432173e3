#include "namescan/roster.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "namescan/csv.hpp"
#include "namescan/errors.hpp"

namespace namescan {

std::string to_string(Gender g) {
  switch (g) {
    case Gender::Female: return "F";
    case Gender::Male: return "M";
    default: return "";
  }
}

std::string to_string(NameField f) {
  return f == NameField::LastName ? "last_name" : "first_name";
}

Roster Roster::from_persons(std::vector<Person> persons, NameField field) {
  Roster r;
  r.field_ = field;
  r.persons_ = std::move(persons);
  for (std::size_t i = 0; i < r.persons_.size(); ++i) {
    const Person& p = r.persons_[i];
    if (p.group.empty()) throw InvalidConfig("person with empty group label");
    if (p.last_name.empty())
      throw InvalidFieldSelection("person with empty normalized last_name");
    if (field == NameField::FirstName &&
        (!p.first_name || p.first_name->empty()))
      throw InvalidFieldSelection(
          "first_name selected but not every person has one");
    r.groups_[p.group].push_back(i);
  }
  return r;
}

const std::string& Roster::name_of(const Person& p) const {
  return field_ == NameField::LastName ? p.last_name : *p.first_name;
}

const std::string& Roster::name_of(std::size_t index) const {
  return name_of(persons_[index]);
}

std::vector<std::string> Roster::names() const {
  std::vector<std::string> out;
  out.reserve(persons_.size());
  for (const Person& p : persons_) out.push_back(name_of(p));
  return out;
}

std::vector<std::string> Roster::group_names(const std::string& label) const {
  std::vector<std::string> out;
  auto it = groups_.find(label);
  if (it == groups_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(name_of(i));
  return out;
}

Roster Roster::with_field(NameField field) const {
  return from_persons(persons_, field);
}

bool Roster::operator==(const Roster& other) const {
  return field_ == other.field_ && persons_ == other.persons_;
}

namespace {

Gender parse_gender(const std::string& s) {
  if (s.size() == 1) {
    char c = s[0];
    if (c == 'F' || c == 'f') return Gender::Female;
    if (c == 'M' || c == 'm') return Gender::Male;
  }
  return Gender::Unknown;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

IngestResult ingest_roster(std::istream& in, const NormalizationPolicy& policy,
                           const ColumnMapping& columns, NameField field,
                           char delimiter) {
  CsvReader reader(in, delimiter);
  auto header = reader.next_row();
  if (!header) throw SchemaError("empty input: no header row");

  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header->size(); ++i) {
    std::string h = trim((*header)[i]);
    if (!h.empty() && col.emplace(h, i).second == false)
      throw SchemaError("duplicate column \"" + h + "\"");
  }
  auto find = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = col.find(name);
    if (it == col.end()) return std::nullopt;
    return it->second;
  };

  auto c_last = find(columns.last_name);
  auto c_group = find(columns.group);
  if (!c_last)
    throw SchemaError("missing required column \"" + columns.last_name + "\"");
  if (!c_group)
    throw SchemaError("missing required column \"" + columns.group + "\"");
  auto c_first = find(columns.first_name);
  if (field == NameField::FirstName && !c_first)
    throw SchemaError("missing required column \"" + columns.first_name +
                      "\" (selected name field)");
  auto c_gender = find(columns.gender);
  auto c_region = find(columns.region);
  auto c_inst = find(columns.institution);
  auto c_init = find(columns.initials);

  IngestResult out;
  std::vector<Person> persons;
  auto drop = [&](const char* reason) {
    ++out.report.rows_dropped;
    ++out.report.drop_reasons[reason];
  };

  while (auto row = reader.next_row()) {
    // A lone trailing newline yields one empty field; skip such rows.
    if (row->size() == 1 && (*row)[0].empty()) continue;
    ++out.report.rows_read;
    if (row->size() != header->size())
      throw CsvParseError(reader.row_number(),
                          "expected " + std::to_string(header->size()) +
                              " fields, got " + std::to_string(row->size()));
    auto get = [&](std::optional<std::size_t> c) -> std::string {
      return c ? trim((*row)[*c]) : std::string();
    };

    Person p;
    p.last_name_raw = get(c_last);
    p.first_name_raw = get(c_first);
    p.group = get(c_group);
    if (p.group.empty()) {
      drop("empty group");
      continue;
    }
    if (p.last_name_raw.empty()) {
      drop("empty last_name");
      continue;
    }
    try {
      p.last_name = normalize_name(p.last_name_raw, policy);
    } catch (const EmptyAfterNormalization&) {
      drop("unnormalizable last_name");
      continue;
    }
    if (!p.first_name_raw.empty()) {
      try {
        p.first_name = normalize_name(p.first_name_raw, policy);
      } catch (const EmptyAfterNormalization&) {
        p.first_name.reset();
      }
    }
    if (field == NameField::FirstName && !p.first_name) {
      drop(p.first_name_raw.empty() ? "empty first_name"
                                    : "unnormalizable first_name");
      continue;
    }
    p.gender = c_gender ? parse_gender(get(c_gender)) : Gender::Unknown;
    if (auto v = get(c_region); !v.empty()) p.region = v;
    if (auto v = get(c_inst); !v.empty()) p.institution = v;
    if (auto v = get(c_init); !v.empty()) p.initials = normalize_initials(v);
    if (p.initials && p.initials->empty()) p.initials.reset();

    persons.push_back(std::move(p));
    ++out.report.rows_kept;
  }

  out.roster = Roster::from_persons(std::move(persons), field);
  return out;
}

void write_roster_csv(std::ostream& out, const Roster& roster,
                      char delimiter) {
  static const std::vector<std::string> kHeader = {
      "last_name", "first_name", "gender",  "group",
      "region",    "institution", "initials"};
  write_csv_row(out, kHeader, delimiter);
  std::vector<std::string> row(7);
  for (const Person& p : roster.persons()) {
    row[0] = p.last_name_raw;
    row[1] = p.first_name_raw;
    row[2] = to_string(p.gender);
    row[3] = p.group;
    row[4] = p.region.value_or("");
    row[5] = p.institution.value_or("");
    row[6] = p.initials.value_or("");
    write_csv_row(out, row, delimiter);
  }
}

Roster dedup_uk(const Roster& roster) {
  std::vector<Person> kept;
  std::unordered_set<std::string> seen;
  kept.reserve(roster.size());
  for (const Person& p : roster.persons()) {
    std::string initials;
    if (p.initials)
      initials = *p.initials;
    else if (p.first_name)
      initials = p.first_name->substr(0, 1);
    // \x1f never occurs in normalized fields or labels read from CSV.
    std::string key = p.last_name + '\x1f' + initials + '\x1f' + p.group;
    if (seen.insert(std::move(key)).second) kept.push_back(p);
  }
  return Roster::from_persons(std::move(kept), roster.field_selector());
}

std::size_t distinct_count(std::span<const std::string> names) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(names.size() * 2);
  for (const std::string& n : names) seen.insert(n);
  return seen.size();
}

}  // namespace namescan
