#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "namescan/roster.hpp"
#include "namescan/scarcity.hpp"
#include "namescan/strata.hpp"

namespace namescan {

// Name-frequency laws. Ranks are 1-based; rank 1 is the most common name.
struct ZipfLaw {
  double s = 1.0;
  std::int64_t alphabet = 2'000'000;
  bool operator==(const ZipfLaw&) const = default;
};
struct UniformLaw {
  std::int64_t alphabet = 10'000;
  bool operator==(const UniformLaw&) const = default;
};
struct EmpiricalLaw {
  // (normalized name, positive weight)
  std::vector<std::pair<std::string, double>> entries;
  bool operator==(const EmpiricalLaw&) const = default;
};
using NameLaw = std::variant<ZipfLaw, UniformLaw, EmpiricalLaw>;

// Nepotistic-hiring overlay: each person, in roster order, is replaced
// with probability rate by a relative of an earlier same-group (and
// same-region, when present) male colleague, inheriting that colleague's
// last name; the hire itself is male. Larger rates strictly extend the
// set of replaced persons for a fixed seed (common random numbers), so
// the distinct-name count of any group never rises with the rate.
struct NepotismSpec {
  double base_rate = 0.0;
  std::map<std::string, double> group_rate;  // per-group override
  std::set<std::string> regions;  // restrict injection; empty = everywhere

  bool operator==(const NepotismSpec&) const = default;
};

struct SynthConfig {
  std::int64_t n_people = 10000;
  std::int64_t n_groups = 20;
  std::vector<std::string> group_labels;      // default G01, G02, ...
  std::vector<std::int64_t> group_sizes;      // default near-equal split
  std::vector<std::pair<std::string, double>> regions;  // label, weight
  double female_fraction = 0.5;
  std::map<std::string, double> group_female_fraction;
  NameLaw name_law = ZipfLaw{};
  NepotismSpec nepotism;
  // Immigrant-influx overlay: persons draw a fresh name from a disjoint
  // reservoir with this probability (per-group override available).
  double immigrant_rate = 0.0;
  std::map<std::string, double> group_immigrant_rate;
  std::int64_t immigrant_alphabet = 50000;
  std::int64_t common_list_size = 7500;  // top ranks exported as "common"
  std::uint64_t seed = 0;
};

// Rank r of a law as a canonical letters-only name (stable encoding).
std::string synthetic_name(std::int64_t rank);
// Reservoir name i; the reservoir never collides with synthetic_name().
std::string immigrant_name(std::int64_t index);

// Roster without the nepotism overlay (immigrant influx included).
Roster generate_base(const SynthConfig& cfg);
// Full generator: base roster plus nepotism overlay when configured.
Roster generate(const SynthConfig& cfg);
// Applies the overlay to an existing roster with an explicit stream seed.
Roster inject_nepotism(const Roster& base, const NepotismSpec& spec,
                       std::uint64_t seed);

// The cfg.common_list_size most common names of the configured law.
CommonNameList common_names(const SynthConfig& cfg);

struct PowerPoint {
  double rho = 0.0;
  int n_trials = 0;
  int n_detected = 0;
  double detection_rate = 0.0;
  double std_error = 0.0;  // binomial standard error of the rate
};

// Detection rate of the scarcity test on `target_group` as the nepotism
// rate sweeps rho_grid. Per trial, one base roster is generated and every
// rho reuses the same injection stream (common random numbers), then the
// group is tested against the full injected roster's pool; detection
// means p <= alpha.
std::vector<PowerPoint> power_curve(const SynthConfig& cfg,
                                    std::span<const double> rho_grid,
                                    int n_trials, const TestConfig& test_cfg,
                                    double alpha,
                                    const std::string& target_group);

// key = value text format; '#' starts a comment. Unknown keys are errors.
SynthConfig load_synth_config(std::istream& in);

}  // namespace namescan
