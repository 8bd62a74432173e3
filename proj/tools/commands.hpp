#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "namescan/errors.hpp"
#include "namescan/roster.hpp"

namespace namescan::cli {

// Flags shared by every roster-reading command.
struct IngestOpts {
  std::string input;
  std::string field = "last_name";
  std::string delimiter = ",";
  ColumnMapping columns;
  bool keep_parenthetical = false;
  bool keep_hyphenated = false;
  bool keep_case = false;
  bool keep_non_letters = false;
  bool dedup = false;

  NormalizationPolicy policy() const {
    NormalizationPolicy p;
    p.drop_parenthetical = !keep_parenthetical;
    p.hyphen_keep_first = !keep_hyphenated;
    p.uppercase = !keep_case;
    p.strip_non_letters = !keep_non_letters;
    return p;
  }
  NameField name_field() const {
    if (field == "last_name") return NameField::LastName;
    if (field == "first_name") return NameField::FirstName;
    throw InvalidConfig("--field must be last_name or first_name");
  }
  char delim() const {
    if (delimiter.size() != 1)
      throw InvalidConfig("--delimiter must be a single character");
    return delimiter[0];
  }
};

void add_ingest_options(CLI::App* cmd, IngestOpts& opts);

// Reads and normalizes the roster (applies --dedup when set).
IngestResult load_roster(const IngestOpts& opts);

std::ifstream open_input(const std::string& path);
void write_file(const std::filesystem::path& path, const std::string& content);
std::filesystem::path prepare_out_dir(const std::string& dir);

// Subcommand registration; callbacks run during CLI::App::parse.
void register_analyze(CLI::App& app);
void register_simulate(CLI::App& app);
void register_diagnose(CLI::App& app);
void register_qvalues(CLI::App& app);

}  // namespace namescan::cli
