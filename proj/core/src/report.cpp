#include "namescan/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "namescan/csv.hpp"

namespace namescan {

using ordered_json = nlohmann::ordered_json;

std::string format_full(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_p(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", *v);
  if (std::string_view(buf) == "0.000") return "<0.001";
  return buf;
}

ReportSection make_section(std::string stratum,
                           std::span<const ClassifiedResult> classified,
                           const QValueReport* qreport) {
  ReportSection section;
  section.stratum = std::move(stratum);
  if (qreport) {
    section.pi0_hat = qreport->pi0_hat;
    section.lambda_star = qreport->lambda_star;
  }
  section.rows.reserve(classified.size());
  for (const ClassifiedResult& c : classified) {
    const ScarcityResult& r = c.scarcity;
    section.pool_size = r.pool_size;
    section.pool_distinct = r.pool_distinct;
    ReportRow row;
    row.group = r.group;
    row.code = r.group;
    row.n_people = r.n_people;
    row.n_distinct = r.n_distinct;
    row.p = r.p_hat;
    row.q = c.q;
    row.highly_significant = c.highly_significant;
    row.skipped = r.skipped;
    row.n_leq = r.n_leq;
    row.n_sims = r.n_sims;
    row.seed = r.seed;
    section.rows.push_back(std::move(row));
  }
  std::sort(section.rows.begin(), section.rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.skipped != b.skipped) return !a.skipped;  // tested first
              if (!a.skipped && a.p != b.p) return a.p < b.p;
              return a.group < b.group;
            });
  return section;
}

namespace {

ordered_json json_opt(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

ordered_json row_to_json(const ReportRow& row) {
  ordered_json j;
  j["group"] = row.group;
  j["code"] = row.code;
  j["n_people"] = row.n_people;
  j["n_distinct"] = row.n_distinct;
  j["p"] = json_opt(row.p);
  j["q"] = json_opt(row.q);
  j["highly_significant"] = row.highly_significant;
  j["skipped"] = row.skipped;
  j["n_leq"] = row.n_leq;
  j["n_sims"] = row.n_sims;
  j["seed"] = row.seed;
  return j;
}

ordered_json section_to_json(const ReportSection& s) {
  ordered_json j;
  j["stratum"] = s.stratum;
  j["pool_size"] = s.pool_size;
  j["pool_distinct"] = s.pool_distinct;
  j["pi0_hat"] = json_opt(s.pi0_hat);
  j["lambda_star"] = json_opt(s.lambda_star);
  j["rows"] = ordered_json::array();
  for (const ReportRow& row : s.rows) j["rows"].push_back(row_to_json(row));
  return j;
}

}  // namespace

std::string to_json(const AnalysisReport& report) {
  ordered_json j;
  ordered_json params;
  params["input"] = report.params.input;
  params["field"] = report.params.field;
  params["n_sims"] = report.params.n_sims;
  params["min_group_size"] = report.params.min_group_size;
  params["seed"] = report.params.seed;
  params["alpha"] = report.params.alpha;
  params["stratify"] = report.params.stratify.empty()
                           ? ordered_json(nullptr)
                           : ordered_json(report.params.stratify);
  params["gender_split"] = report.params.gender_split;
  params["dedup"] = report.params.dedup;
  params["common_names"] = report.params.common_names_path.empty()
                               ? ordered_json(nullptr)
                               : ordered_json(report.params.common_names_path);
  params["excluded_groups"] = report.params.excluded_groups;
  params["qvalue_bootstrap"] = report.params.qvalue_bootstrap;
  params["pi0_override"] = json_opt(report.params.pi0_override);
  params["normalization"] = {
      {"drop_parenthetical", report.params.policy.drop_parenthetical},
      {"hyphen_keep_first", report.params.policy.hyphen_keep_first},
      {"uppercase", report.params.policy.uppercase},
      {"strip_non_letters", report.params.policy.strip_non_letters},
  };
  j["parameters"] = std::move(params);

  ordered_json ingest;
  ingest["rows_read"] = report.ingest.rows_read;
  ingest["rows_kept"] = report.ingest.rows_kept;
  ingest["rows_dropped"] = report.ingest.rows_dropped;
  ordered_json reasons = ordered_json::object();
  for (const auto& [reason, count] : report.ingest.drop_reasons)
    reasons[reason] = count;
  ingest["drop_reasons"] = std::move(reasons);
  j["ingest"] = std::move(ingest);

  j["sections"] = ordered_json::array();
  for (const ReportSection& s : report.sections)
    j["sections"].push_back(section_to_json(s));

  if (report.region_summary) {
    const RegionSummary& rs = *report.region_summary;
    ordered_json sweep;
    sweep["alpha"] = rs.alpha;
    sweep["cells"] = ordered_json::array();
    for (const RegionCell& cell : rs.cells) {
      ordered_json c;
      c["region"] = cell.region;
      c["group"] = cell.result.group;
      c["n_people"] = cell.result.n_people;
      c["n_distinct"] = cell.result.n_distinct;
      c["p"] = json_opt(cell.result.p_hat);
      c["skipped"] = cell.result.skipped;
      c["seed"] = cell.result.seed;
      sweep["cells"].push_back(std::move(c));
    }
    ordered_json groups = ordered_json::object();
    for (const auto& [label, gs] : rs.by_group) {
      ordered_json g;
      g["regions_tested"] = gs.regions_tested;
      g["regions_flagged"] = gs.regions_flagged;
      g["proportion_flagged"] = json_opt(gs.proportion_flagged);
      groups[label] = std::move(g);
    }
    sweep["groups"] = std::move(groups);
    j["region_summary"] = std::move(sweep);
  } else {
    j["region_summary"] = nullptr;
  }

  return j.dump(2) + "\n";
}

std::string section_csv(const ReportSection& section) {
  std::ostringstream out;
  static const std::vector<std::string> kHeader = {
      "group", "code",   "n_people", "n_distinct", "p",    "q",
      "highly_significant", "skipped", "n_leq", "n_sims", "seed"};
  write_csv_row(out, kHeader);
  std::vector<std::string> row(11);
  for (const ReportRow& r : section.rows) {
    row[0] = r.group;
    row[1] = r.code;
    row[2] = std::to_string(r.n_people);
    row[3] = std::to_string(r.n_distinct);
    row[4] = r.p ? format_full(*r.p) : "-";
    row[5] = r.q ? format_full(*r.q) : "-";
    row[6] = r.highly_significant ? "true" : "false";
    row[7] = r.skipped ? "true" : "false";
    row[8] = std::to_string(r.n_leq);
    row[9] = std::to_string(r.n_sims);
    row[10] = std::to_string(r.seed);
    write_csv_row(out, row);
  }
  return out.str();
}

std::string comparison_csv(const AnalysisReport& report) {
  // Row per group observed anywhere; one p/q/flag column triple per section.
  std::vector<std::string> groups;
  for (const ReportSection& s : report.sections)
    for (const ReportRow& r : s.rows)
      if (std::find(groups.begin(), groups.end(), r.group) == groups.end())
        groups.push_back(r.group);
  std::sort(groups.begin(), groups.end());

  std::ostringstream out;
  std::vector<std::string> header = {"group"};
  for (const ReportSection& s : report.sections) {
    header.push_back("p_" + s.stratum);
    header.push_back("q_" + s.stratum);
    header.push_back("sig_" + s.stratum);
  }
  write_csv_row(out, header);

  std::vector<std::string> row;
  for (const std::string& g : groups) {
    row.clear();
    row.push_back(g);
    for (const ReportSection& s : report.sections) {
      const ReportRow* found = nullptr;
      for (const ReportRow& r : s.rows)
        if (r.group == g) {
          found = &r;
          break;
        }
      if (found && !found->skipped) {
        row.push_back(format_p(found->p));
        row.push_back(format_p(found->q));
        row.push_back(found->highly_significant ? "yes" : "no");
      } else {
        row.push_back("-");
        row.push_back("-");
        row.push_back("-");
      }
    }
    write_csv_row(out, row);
  }
  return out.str();
}

std::string region_cells_csv(const RegionSummary& summary) {
  std::ostringstream out;
  static const std::vector<std::string> kHeader = {
      "region", "group", "n_people", "n_distinct", "p", "skipped", "seed"};
  write_csv_row(out, kHeader);
  std::vector<std::string> row(7);
  for (const RegionCell& cell : summary.cells) {
    row[0] = cell.region;
    row[1] = cell.result.group;
    row[2] = std::to_string(cell.result.n_people);
    row[3] = std::to_string(cell.result.n_distinct);
    row[4] = cell.result.p_hat ? format_full(*cell.result.p_hat) : "-";
    row[5] = cell.result.skipped ? "true" : "false";
    row[6] = std::to_string(cell.result.seed);
    write_csv_row(out, row);
  }
  return out.str();
}

std::string region_groups_csv(const RegionSummary& summary) {
  std::ostringstream out;
  static const std::vector<std::string> kHeader = {
      "group", "flagged_over_tested", "proportion_flagged"};
  write_csv_row(out, kHeader);
  std::vector<std::string> row(3);
  for (const auto& [label, gs] : summary.by_group) {
    row[0] = label;
    row[1] = std::to_string(gs.regions_flagged) + "/" +
             std::to_string(gs.regions_tested);
    row[2] = gs.proportion_flagged ? format_full(*gs.proportion_flagged) : "-";
    write_csv_row(out, row);
  }
  return out.str();
}

std::string power_curve_csv(std::span<const PowerPoint> points) {
  std::ostringstream out;
  static const std::vector<std::string> kHeader = {
      "rho", "n_trials", "n_detected", "detection_rate", "std_error"};
  write_csv_row(out, kHeader);
  std::vector<std::string> row(5);
  for (const PowerPoint& pt : points) {
    row[0] = format_full(pt.rho);
    row[1] = std::to_string(pt.n_trials);
    row[2] = std::to_string(pt.n_detected);
    row[3] = format_full(pt.detection_rate);
    row[4] = format_full(pt.std_error);
    write_csv_row(out, row);
  }
  return out.str();
}

std::string qvalues_csv(const QValueReport& report) {
  std::ostringstream out;
  static const std::vector<std::string> kHeader = {"label", "p", "q"};
  write_csv_row(out, kHeader);
  std::vector<std::string> row(3);
  for (const QValueEntry& e : report.entries) {
    row[0] = e.label;
    row[1] = format_full(e.p);
    row[2] = format_full(e.q);
    write_csv_row(out, row);
  }
  return out.str();
}

}  // namespace namescan
