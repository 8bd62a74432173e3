#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "namescan/roster.hpp"

namespace namescan {

struct LogitPoint {
  double covariate = 0.0;
  double p = 0.0;      // as supplied
  double logit = 0.0;  // log(p~ / (1 - p~)) after clamping
};

struct LogitFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double clamp_epsilon = 1e-6;
  std::vector<LogitPoint> points;
};

// Ordinary least squares of logit(p) on a covariate. P-values are clamped
// into [epsilon, 1 - epsilon] before the logit so boundary values stay
// finite. Throws DegenerateDesign for fewer than two points or a constant
// covariate, InvalidPValue for p outside (0, 1].
LogitFit logit_regression(
    std::span<const std::pair<double, double>> covariate_and_p,
    double epsilon = 1e-6);

struct NameCount {
  std::string name;
  std::int64_t count = 0;

  bool operator==(const NameCount&) const = default;
};

struct FrequencyScope {
  std::string scope;  // "all" or a group label
  std::int64_t total = 0;
  std::int64_t distinct = 0;
  std::vector<NameCount> top;  // count desc, name asc; at most k entries
};

enum class FrequencyScopeKind { Whole, PerGroup };

// Top-k selected-field name counts, over the whole roster or per group.
std::vector<FrequencyScope> name_frequencies(const Roster& roster,
                                             FrequencyScopeKind kind,
                                             std::int64_t k);

struct GenderCounts {
  std::int64_t n_female = 0;
  std::int64_t n_male = 0;
  std::int64_t n_unknown = 0;
  // females / (females + males); empty when no gendered person exists.
  std::optional<double> fraction_female;
};

// Per-group gender composition (key "" holds the whole-roster totals).
std::map<std::string, GenderCounts> women_fraction(const Roster& roster);

}  // namespace namescan
