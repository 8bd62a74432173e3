#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "namescan/multiplicity.hpp"
#include "namescan/roster.hpp"
#include "namescan/strata.hpp"
#include "namescan/synthlab.hpp"

namespace namescan {

struct ReportRow {
  std::string group;
  std::string code;  // reserved identifier column; mirrors the label
  std::int64_t n_people = 0;
  std::int64_t n_distinct = 0;
  std::optional<double> p;  // empty when skipped
  std::optional<double> q;
  bool highly_significant = false;
  bool skipped = false;
  std::int64_t n_leq = 0;
  std::int64_t n_sims = 0;
  std::uint64_t seed = 0;
};

struct ReportSection {
  std::string stratum;  // "all", "common", "F", "M", macro or region label
  std::int64_t pool_size = 0;
  std::int64_t pool_distinct = 0;
  std::optional<double> pi0_hat;
  std::optional<double> lambda_star;
  std::vector<ReportRow> rows;  // tested rows by p ascending, then skipped
};

// Everything that determines the numbers; deliberately no wall-clock
// timestamp and no worker count, so identical inputs and seeds produce
// byte-identical reports.
struct AnalysisParams {
  std::string input;
  std::string field = "last_name";
  std::int64_t n_sims = 100000;
  std::int64_t min_group_size = 50;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  std::string stratify;  // "", "macro-region" or "region"
  bool gender_split = false;
  bool dedup = false;
  std::string common_names_path;
  std::vector<std::string> excluded_groups;
  std::int64_t qvalue_bootstrap = 100;
  std::optional<double> pi0_override;
  NormalizationPolicy policy;
};

struct AnalysisReport {
  AnalysisParams params;
  IngestReport ingest;
  std::vector<ReportSection> sections;
  std::optional<RegionSummary> region_summary;
};

// Builds a sorted section from classified results; the q-value report is
// optional (pass nullptr when the section holds no tested group).
ReportSection make_section(std::string stratum,
                           std::span<const ClassifiedResult> classified,
                           const QValueReport* qreport);

// Human-table formatting: "-" for absent values, three decimals, values
// rounding below 0.001 render as "<0.001".
std::string format_p(const std::optional<double>& v);
// Shortest round-trip decimal representation (machine outputs).
std::string format_full(double v);

// Deterministic JSON (stable key order, shortest-round-trip numbers).
std::string to_json(const AnalysisReport& report);

// Machine-precision per-section table.
std::string section_csv(const ReportSection& section);
// Side-by-side table across sections (three-decimal display values).
std::string comparison_csv(const AnalysisReport& report);
// Region sweep per-cell table (machine precision).
std::string region_cells_csv(const RegionSummary& summary);
// Region sweep per-group roll-up ("flagged/tested" counts).
std::string region_groups_csv(const RegionSummary& summary);
// Power sweep table.
std::string power_curve_csv(std::span<const PowerPoint> points);
// q-value table for the standalone command.
std::string qvalues_csv(const QValueReport& report);

}  // namespace namescan
