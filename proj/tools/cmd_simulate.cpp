#include <iostream>
#include <memory>
#include <sstream>

#include "commands.hpp"
#include "namescan/report.hpp"
#include "namescan/synthlab.hpp"

namespace namescan::cli {
namespace {

struct SimulateOpts {
  std::string config_path;
  std::string out_dir = ".";
  bool power = false;
  std::vector<double> rho_grid = {0.0, 0.05, 0.1, 0.2, 0.4};
  int trials = 100;
  double alpha = 0.05;
  std::string target_group;
  std::int64_t n_sims = 10000;
  std::int64_t min_group_size = 50;
  std::uint64_t seed = 0;
  int workers = 1;
};

void run_simulate(const SimulateOpts& opts) {
  const std::filesystem::path out_dir = prepare_out_dir(opts.out_dir);
  std::ifstream in = open_input(opts.config_path);
  const SynthConfig cfg = load_synth_config(in);

  const Roster roster = generate(cfg);
  {
    std::ostringstream csv;
    write_roster_csv(csv, roster);
    write_file(out_dir / "roster.csv", csv.str());
  }

  if (cfg.common_list_size > 0) {
    const CommonNameList list = common_names(cfg);
    std::ostringstream txt;
    for (const std::string& name : list.names()) txt << name << "\n";
    write_file(out_dir / "common_names.txt", txt.str());
  }

  std::cout << "generated " << roster.size() << " persons in "
            << roster.group_index().size() << " groups\n";

  if (opts.power) {
    TestConfig test_cfg;
    test_cfg.n_sims = opts.n_sims;
    test_cfg.min_group_size = opts.min_group_size;
    test_cfg.seed = opts.seed;
    test_cfg.workers = opts.workers;
    std::string target = opts.target_group;
    if (target.empty()) {
      if (roster.group_index().empty())
        throw InvalidConfig("no groups to target");
      target = roster.group_index().begin()->first;
    }
    const std::vector<PowerPoint> points = power_curve(
        cfg, opts.rho_grid, opts.trials, test_cfg, opts.alpha, target);
    write_file(out_dir / "power_curve.csv", power_curve_csv(points));
    for (const PowerPoint& pt : points)
      std::cout << "rho=" << format_full(pt.rho)
                << " detection_rate=" << format_full(pt.detection_rate)
                << " (" << pt.n_detected << "/" << pt.n_trials << ")\n";
  }
}

}  // namespace

void register_simulate(CLI::App& app) {
  auto opts = std::make_shared<SimulateOpts>();
  CLI::App* cmd = app.add_subcommand(
      "simulate", "Generate synthetic rosters and run power sweeps");
  cmd->add_option("-c,--config", opts->config_path,
                  "Generator configuration (key = value lines)")
      ->required();
  cmd->add_option("-o,--out-dir", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_flag("--power-curve", opts->power,
                "Sweep the nepotism rate and report detection rates");
  cmd->add_option("--rho-grid", opts->rho_grid,
                  "Nepotism rates for the sweep (comma separated)")
      ->delimiter(',');
  cmd->add_option("--trials", opts->trials, "Trials per sweep point")
      ->capture_default_str();
  cmd->add_option("--alpha", opts->alpha, "Detection threshold")
      ->capture_default_str();
  cmd->add_option("--target-group", opts->target_group,
                  "Group receiving the injection (default: first label)");
  cmd->add_option("--sims", opts->n_sims,
                  "Monte Carlo replicates per sweep test")
      ->capture_default_str();
  cmd->add_option("--min-group-size", opts->min_group_size,
                  "Smallest testable group for the sweep")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Base seed for the sweep tests")
      ->capture_default_str();
  cmd->add_option("--workers", opts->workers,
                  "Worker threads (does not affect results)")
      ->capture_default_str();
  cmd->callback([opts] { run_simulate(*opts); });
}

}  // namespace namescan::cli
