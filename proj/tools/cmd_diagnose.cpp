#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "namescan/csv.hpp"
#include "namescan/diagnostics.hpp"
#include "namescan/report.hpp"
#include "namescan/scarcity.hpp"
#include "namescan/strata.hpp"

namespace namescan::cli {
namespace {

struct DiagnoseOpts {
  IngestOpts ingest;
  std::string out_dir = ".";
  std::int64_t top_k = 25;
  bool per_group = false;
  std::string common_names_path;
  bool logit = false;
  double epsilon = 1e-6;
  std::int64_t n_sims = 100000;
  std::int64_t min_group_size = 50;
  std::uint64_t seed = 0;
  int workers = 1;
};

void run_diagnose(const DiagnoseOpts& opts) {
  if (opts.top_k < 1) throw InvalidConfig("--top-k must be >= 1");
  const std::filesystem::path out_dir = prepare_out_dir(opts.out_dir);
  const IngestResult ingested = load_roster(opts.ingest);
  const Roster& roster = ingested.roster;
  if (roster.empty()) throw EmptyInput("roster is empty");

  nlohmann::ordered_json summary;
  summary["input"] = opts.ingest.input;
  summary["field"] = opts.ingest.field;
  summary["n_people"] = roster.size();
  summary["n_groups"] = roster.group_index().size();
  summary["n_distinct"] = distinct_count(roster.names());

  // Name frequency tables.
  {
    std::vector<FrequencyScope> scopes =
        name_frequencies(roster, FrequencyScopeKind::Whole, opts.top_k);
    if (opts.per_group) {
      std::vector<FrequencyScope> per_group =
          name_frequencies(roster, FrequencyScopeKind::PerGroup, opts.top_k);
      scopes.insert(scopes.end(), per_group.begin(), per_group.end());
    }
    std::ostringstream csv;
    static const std::vector<std::string> kHeader = {"scope", "rank", "name",
                                                     "count"};
    write_csv_row(csv, kHeader);
    std::vector<std::string> row(4);
    for (const FrequencyScope& scope : scopes) {
      for (std::size_t i = 0; i < scope.top.size(); ++i) {
        row[0] = scope.scope;
        row[1] = std::to_string(i + 1);
        row[2] = scope.top[i].name;
        row[3] = std::to_string(scope.top[i].count);
        write_csv_row(csv, row);
      }
    }
    write_file(out_dir / "frequencies.csv", csv.str());
    std::cout << "top name overall: " << scopes.front().top.front().name
              << " (" << scopes.front().top.front().count << ")\n";
  }

  // Gender composition.
  const std::map<std::string, GenderCounts> genders = women_fraction(roster);
  {
    std::ostringstream csv;
    static const std::vector<std::string> kHeader = {
        "group", "n_female", "n_male", "n_unknown", "fraction_female"};
    write_csv_row(csv, kHeader);
    std::vector<std::string> row(5);
    for (const auto& [label, counts] : genders) {
      row[0] = label.empty() ? "(all)" : label;
      row[1] = std::to_string(counts.n_female);
      row[2] = std::to_string(counts.n_male);
      row[3] = std::to_string(counts.n_unknown);
      row[4] = counts.fraction_female ? format_full(*counts.fraction_female)
                                      : "-";
      write_csv_row(csv, row);
    }
    write_file(out_dir / "gender.csv", csv.str());
  }

  if (!opts.common_names_path.empty()) {
    std::ifstream in = open_input(opts.common_names_path);
    const CommonNameList list = CommonNameList::load(in, opts.ingest.policy());
    const CommonNameStats stats = common_name_proportion(roster, list);
    std::ostringstream csv;
    static const std::vector<std::string> kHeader = {"group",
                                                     "proportion_common"};
    write_csv_row(csv, kHeader);
    std::vector<std::string> row(2);
    for (const auto& [label, prop] : stats.proportion_by_group) {
      row[0] = label;
      row[1] = format_full(prop);
      write_csv_row(csv, row);
    }
    write_file(out_dir / "common_proportion.csv", csv.str());
    summary["common_names"] = {
        {"list_size", list.size()},
        {"mean_proportion", stats.mean},
        {"percentile5", stats.percentile5},
        {"bottom_groups", stats.bottom_groups},
    };
  }

  if (opts.logit) {
    TestConfig cfg;
    cfg.n_sims = opts.n_sims;
    cfg.min_group_size = opts.min_group_size;
    cfg.seed = opts.seed;
    cfg.workers = opts.workers;
    const std::vector<ScarcityResult> results = analyze_groups(roster, cfg);

    std::vector<std::pair<double, double>> points;
    std::vector<std::string> labels;
    for (const ScarcityResult& r : results) {
      if (r.skipped) continue;
      const auto it = genders.find(r.group);
      if (it == genders.end() || !it->second.fraction_female) continue;
      points.emplace_back(*it->second.fraction_female, r.p_hat.value());
      labels.push_back(r.group);
    }
    const LogitFit fit = logit_regression(points, opts.epsilon);

    std::ostringstream csv;
    static const std::vector<std::string> kHeader = {
        "group", "fraction_female", "p", "logit_p"};
    write_csv_row(csv, kHeader);
    std::vector<std::string> row(4);
    for (std::size_t i = 0; i < fit.points.size(); ++i) {
      row[0] = labels[i];
      row[1] = format_full(fit.points[i].covariate);
      row[2] = format_full(fit.points[i].p);
      row[3] = format_full(fit.points[i].logit);
      write_csv_row(csv, row);
    }
    write_file(out_dir / "logit_points.csv", csv.str());
    summary["logit"] = {
        {"slope", fit.slope},
        {"intercept", fit.intercept},
        {"r_squared", fit.r_squared},
        {"clamp_epsilon", fit.clamp_epsilon},
        {"n_points", fit.points.size()},
        {"n_sims", opts.n_sims},
        {"seed", opts.seed},
    };
    std::cout << "logit fit: slope=" << format_full(fit.slope)
              << " intercept=" << format_full(fit.intercept)
              << " r2=" << format_full(fit.r_squared) << "\n";
  }

  write_file(out_dir / "diagnose.json", summary.dump(2) + "\n");
}

}  // namespace

void register_diagnose(CLI::App& app) {
  auto opts = std::make_shared<DiagnoseOpts>();
  CLI::App* cmd = app.add_subcommand(
      "diagnose", "Name frequencies, gender composition and logit fit");
  add_ingest_options(cmd, opts->ingest);
  cmd->add_option("-o,--out-dir", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--top-k", opts->top_k, "Names per frequency table")
      ->capture_default_str();
  cmd->add_flag("--per-group", opts->per_group,
                "Also tabulate frequencies inside every group");
  cmd->add_option("--common-list", opts->common_names_path,
                  "Common-name list for per-group commonality proportions");
  cmd->add_flag("--logit", opts->logit,
                "Regress logit(p) on the group's share of women");
  cmd->add_option("--epsilon", opts->epsilon,
                  "Clamp for p before the logit transform")
      ->capture_default_str();
  cmd->add_option("--sims", opts->n_sims,
                  "Monte Carlo replicates for the logit p-values")
      ->capture_default_str();
  cmd->add_option("--min-group-size", opts->min_group_size,
                  "Smallest group tested for the logit fit")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Base random seed")
      ->capture_default_str();
  cmd->add_option("--workers", opts->workers,
                  "Worker threads (does not affect results)")
      ->capture_default_str();
  cmd->callback([opts] { run_diagnose(*opts); });
}

}  // namespace namescan::cli
