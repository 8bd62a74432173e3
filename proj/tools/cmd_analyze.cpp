#include <cctype>
#include <iostream>
#include <memory>
#include <set>

#include "commands.hpp"
#include "namescan/multiplicity.hpp"
#include "namescan/report.hpp"
#include "namescan/rng.hpp"
#include "namescan/scarcity.hpp"
#include "namescan/strata.hpp"

namespace namescan::cli {
namespace {

struct AnalyzeOpts {
  IngestOpts ingest;
  std::string out_dir = ".";
  std::int64_t n_sims = 100000;
  std::int64_t min_group_size = 50;
  std::uint64_t seed = 0;
  int workers = 1;
  double alpha = 0.05;
  std::vector<std::string> exclude;
  std::string stratify;
  std::string macro_map_path;
  bool gender_split = false;
  std::string common_names_path;
  std::int64_t qvalue_bootstrap = 100;
  double pi0_override = -1.0;  // negative = not set
};

std::string safe_filename(const std::string& stratum) {
  std::string out;
  for (char c : stratum)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

ReportSection section_from_results(const std::string& stratum,
                                   std::span<const ScarcityResult> results,
                                   const QValueOptions& qopts, double alpha) {
  bool any_tested = false;
  for (const ScarcityResult& r : results)
    if (!r.skipped) any_tested = true;

  QValueReport qreport;
  if (any_tested) qreport = qvalues(results, qopts);
  const std::vector<ClassifiedResult> classified =
      classify(results, qreport, alpha);
  return make_section(stratum, classified, any_tested ? &qreport : nullptr);
}

ReportSection analyzed_section(const std::string& stratum,
                               const Roster& roster, const TestConfig& cfg,
                               const QValueOptions& qopts, double alpha) {
  if (roster.empty()) {
    ReportSection empty;
    empty.stratum = stratum;
    return empty;
  }
  const std::vector<ScarcityResult> results = analyze_groups(roster, cfg);
  return section_from_results(stratum, results, qopts, alpha);
}

void run_analyze(const AnalyzeOpts& opts) {
  if (opts.n_sims < 1) throw InvalidConfig("--sims must be >= 1");
  if (opts.min_group_size < 1)
    throw InvalidConfig("--min-group-size must be >= 1");
  if (opts.workers < 1) throw InvalidConfig("--workers must be >= 1");
  if (!(opts.alpha > 0.0) || opts.alpha > 1.0)
    throw InvalidConfig("--alpha outside (0, 1]");
  if (opts.qvalue_bootstrap < 1)
    throw InvalidConfig("--qvalue-bootstrap must be >= 1");
  if (!opts.stratify.empty() && opts.stratify != "macro-region" &&
      opts.stratify != "region")
    throw InvalidConfig("--stratify must be macro-region or region");

  const std::filesystem::path out_dir = prepare_out_dir(opts.out_dir);
  IngestResult ingested = load_roster(opts.ingest);

  Roster roster = std::move(ingested.roster);
  std::set<std::string> excluded(opts.exclude.begin(), opts.exclude.end());
  if (!excluded.empty()) roster = exclude_groups(roster, excluded);
  if (roster.empty())
    throw EmptyPool("no persons left to analyze after filtering");

  TestConfig cfg;
  cfg.n_sims = opts.n_sims;
  cfg.min_group_size = opts.min_group_size;
  cfg.seed = opts.seed;
  cfg.workers = opts.workers;

  QValueOptions qopts;
  qopts.n_bootstrap = static_cast<int>(opts.qvalue_bootstrap);
  qopts.seed = rng::mix(opts.seed, rng::hash_label("qvalues"));
  if (opts.pi0_override >= 0.0) qopts.pi0_override = opts.pi0_override;

  AnalysisReport report;
  report.params.input = opts.ingest.input;
  report.params.field = opts.ingest.field;
  report.params.n_sims = opts.n_sims;
  report.params.min_group_size = opts.min_group_size;
  report.params.seed = opts.seed;
  report.params.alpha = opts.alpha;
  report.params.stratify = opts.stratify;
  report.params.gender_split = opts.gender_split;
  report.params.dedup = opts.ingest.dedup;
  report.params.common_names_path = opts.common_names_path;
  report.params.excluded_groups.assign(excluded.begin(), excluded.end());
  report.params.qvalue_bootstrap = opts.qvalue_bootstrap;
  if (opts.pi0_override >= 0.0) report.params.pi0_override = opts.pi0_override;
  report.params.policy = opts.ingest.policy();
  report.ingest = ingested.report;

  report.sections.push_back(
      analyzed_section("all", roster, cfg, qopts, opts.alpha));

  if (!opts.common_names_path.empty()) {
    std::ifstream in = open_input(opts.common_names_path);
    const CommonNameList list =
        CommonNameList::load(in, opts.ingest.policy());
    const Roster filtered = filter_common(roster, list);
    report.sections.push_back(
        analyzed_section("common", filtered, cfg, qopts, opts.alpha));
  }

  if (opts.gender_split) {
    const auto [female, male] = gender_split_analyze(roster, cfg);
    report.sections.push_back(
        section_from_results("F", female, qopts, opts.alpha));
    report.sections.push_back(
        section_from_results("M", male, qopts, opts.alpha));
  }

  if (opts.stratify == "macro-region") {
    MacroRegionMap map;
    if (opts.macro_map_path.empty()) {
      map = MacroRegionMap::italian_default();
    } else {
      std::ifstream in = open_input(opts.macro_map_path);
      map = MacroRegionMap::load(in);
    }
    std::size_t unmapped = 0;
    for (const Person& p : roster.persons())
      if (!p.region || !map.macro_of(*p.region)) ++unmapped;
    if (unmapped > 0)
      std::cerr << "note: " << unmapped
                << " persons lack a mappable region and are left out of "
                   "macro-region strata\n";
    for (MacroRegion macro :
         {MacroRegion::North, MacroRegion::Center, MacroRegion::South,
          MacroRegion::Sardinia, MacroRegion::Sicily}) {
      const Roster sub = restrict(roster, [&](const Person& p) {
        if (!p.region) return false;
        const auto m = map.macro_of(*p.region);
        return m && *m == macro;
      });
      report.sections.push_back(
          analyzed_section(to_string(macro), sub, cfg, qopts, opts.alpha));
    }
  } else if (opts.stratify == "region") {
    report.region_summary = region_sweep(roster, cfg, opts.alpha);
  }

  write_file(out_dir / "report.json", to_json(report));
  for (const ReportSection& s : report.sections)
    write_file(out_dir / ("analysis_" + safe_filename(s.stratum) + ".csv"),
               section_csv(s));
  if (report.sections.size() > 1)
    write_file(out_dir / "comparison.csv", comparison_csv(report));
  if (report.region_summary) {
    write_file(out_dir / "region_cells.csv",
               region_cells_csv(*report.region_summary));
    write_file(out_dir / "region_summary.csv",
               region_groups_csv(*report.region_summary));
  }

  for (const ReportSection& s : report.sections) {
    std::int64_t tested = 0, skipped = 0, significant = 0;
    for (const ReportRow& r : s.rows) {
      if (r.skipped)
        ++skipped;
      else
        ++tested;
      if (r.highly_significant) ++significant;
    }
    std::cout << "[" << s.stratum << "] groups_tested=" << tested
              << " groups_skipped=" << skipped
              << " highly_significant=" << significant;
    if (s.pi0_hat) std::cout << " pi0_hat=" << format_full(*s.pi0_hat);
    std::cout << "\n";
  }
  if (report.region_summary) {
    std::int64_t cells = 0, flagged = 0;
    for (const RegionCell& c : report.region_summary->cells) {
      if (c.result.skipped) continue;
      ++cells;
      if (c.result.p_hat.value() <= report.region_summary->alpha) ++flagged;
    }
    std::cout << "[regions] cells_tested=" << cells
              << " cells_flagged=" << flagged << "\n";
  }
}

}  // namespace

void register_analyze(CLI::App& app) {
  auto opts = std::make_shared<AnalyzeOpts>();
  CLI::App* cmd = app.add_subcommand(
      "analyze", "Test every group for distinct-name scarcity");
  add_ingest_options(cmd, opts->ingest);
  cmd->add_option("-o,--out-dir", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--sims", opts->n_sims, "Monte Carlo replicates per group")
      ->capture_default_str();
  cmd->add_option("--min-group-size", opts->min_group_size,
                  "Smallest group that is tested rather than skipped")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Base random seed")
      ->capture_default_str();
  cmd->add_option("--workers", opts->workers,
                  "Worker threads per group (does not affect results)")
      ->capture_default_str();
  cmd->add_option("--alpha", opts->alpha, "Significance level")
      ->capture_default_str();
  cmd->add_option("--exclude-groups", opts->exclude,
                  "Group labels to remove before analysis (comma separated)")
      ->delimiter(',');
  cmd->add_option("--stratify", opts->stratify,
                  "Re-run per stratum: macro-region or region")
      ->check(CLI::IsMember({"macro-region", "region"}));
  cmd->add_option("--macro-map", opts->macro_map_path,
                  "Custom region,macro-region CSV (default: Italian regions)");
  cmd->add_flag("--gender-split", opts->gender_split,
                "Also analyze female-only and male-only rosters");
  cmd->add_option("--filter-common", opts->common_names_path,
                  "Common-name list; adds a section restricted to it");
  cmd->add_option("--qvalue-bootstrap", opts->qvalue_bootstrap,
                  "Bootstrap resamples for the pi0 tuning parameter")
      ->capture_default_str();
  cmd->add_option("--pi0", opts->pi0_override,
                  "Force the null proportion (1.0 reduces to plain "
                  "Benjamini-Hochberg)");
  cmd->callback([opts] { run_analyze(*opts); });
}

}  // namespace namescan::cli
