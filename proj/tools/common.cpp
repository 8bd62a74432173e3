#include <iostream>

#include "commands.hpp"

namespace namescan::cli {

void add_ingest_options(CLI::App* cmd, IngestOpts& opts) {
  cmd->add_option("-i,--input", opts.input, "Roster CSV file")
      ->required();
  cmd->add_option("--field", opts.field,
                  "Name field to analyze: last_name or first_name")
      ->check(CLI::IsMember({"last_name", "first_name"}))
      ->capture_default_str();
  cmd->add_option("--delimiter", opts.delimiter, "Field delimiter")
      ->capture_default_str();
  cmd->add_option("--col-last-name", opts.columns.last_name,
                  "Header name of the last-name column")
      ->capture_default_str();
  cmd->add_option("--col-first-name", opts.columns.first_name,
                  "Header name of the first-name column")
      ->capture_default_str();
  cmd->add_option("--col-gender", opts.columns.gender,
                  "Header name of the gender column")
      ->capture_default_str();
  cmd->add_option("--col-group", opts.columns.group,
                  "Header name of the group column")
      ->capture_default_str();
  cmd->add_option("--col-region", opts.columns.region,
                  "Header name of the region column")
      ->capture_default_str();
  cmd->add_option("--col-institution", opts.columns.institution,
                  "Header name of the institution column")
      ->capture_default_str();
  cmd->add_option("--col-initials", opts.columns.initials,
                  "Header name of the initials column")
      ->capture_default_str();
  cmd->add_flag("--keep-parenthetical", opts.keep_parenthetical,
                "Do not drop parenthetical spans from names");
  cmd->add_flag("--keep-hyphenated", opts.keep_hyphenated,
                "Keep full hyphenated names instead of the first part");
  cmd->add_flag("--keep-case", opts.keep_case,
                "Do not uppercase names");
  cmd->add_flag("--keep-non-letters", opts.keep_non_letters,
                "Keep characters outside A-Z after transliteration");
  cmd->add_flag("--dedup", opts.dedup,
                "Collapse duplicate (last name, initials, group) records");
}

IngestResult load_roster(const IngestOpts& opts) {
  std::ifstream in = open_input(opts.input);
  IngestResult result = ingest_roster(in, opts.policy(), opts.columns,
                                      opts.name_field(), opts.delim());
  if (opts.dedup) result.roster = dedup_uk(result.roster);
  return result;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  return in;
}

void write_file(const std::filesystem::path& path,
                const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open \"" + path.string() + "\" for writing");
  out << content;
  if (!out) throw IoError("failed writing \"" + path.string() + "\"");
  std::cerr << "wrote " << path.string() << "\n";
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec)
    throw IoError("cannot create output directory \"" + dir +
                  "\": " + ec.message());
  return p;
}

}  // namespace namescan::cli
