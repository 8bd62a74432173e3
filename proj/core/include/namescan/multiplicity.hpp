#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "namescan/scarcity.hpp"

namespace namescan {

struct QValueOptions {
  // Candidate tuning values; default 0.00, 0.05, ..., 0.90.
  std::vector<double> lambda_grid;
  int n_bootstrap = 100;
  std::uint64_t seed = 0;
  // Forces the null proportion instead of estimating it; 1.0 reduces the
  // procedure exactly to Benjamini-Hochberg.
  std::optional<double> pi0_override;
};

std::vector<double> default_lambda_grid();

struct QValueEntry {
  std::string label;  // may be empty when built from bare p-values
  double p = 0.0;
  double q = 0.0;
};

struct QValueReport {
  std::vector<QValueEntry> entries;  // input order preserved
  double pi0_hat = 1.0;
  double lambda_star = 0.0;  // chosen tuning value (0 when overridden)
  std::vector<double> lambda_grid;
  std::vector<double> pi0_by_lambda;
  int n_bootstrap = 0;
};

// Storey false-discovery-rate q-values with bootstrap selection of the
// pi0 tuning parameter. P-values must lie in (0, 1].
QValueReport qvalues(std::span<const double> pvalues,
                     const QValueOptions& options = {});
QValueReport qvalues(std::span<const std::string> labels,
                     std::span<const double> pvalues,
                     const QValueOptions& options = {});
// Convenience: runs on the non-skipped entries of a scarcity batch.
QValueReport qvalues(std::span<const ScarcityResult> results,
                     const QValueOptions& options = {});

struct ClassifiedResult {
  ScarcityResult scarcity;
  std::optional<double> q;  // empty when the group was skipped
  bool highly_significant = false;
};

// Joins scarcity results with their q-values and applies the two-sided
// gate: highly significant iff p <= alpha and q <= alpha. The report must
// cover exactly the non-skipped results, in order (LabelMismatch if not).
std::vector<ClassifiedResult> classify(std::span<const ScarcityResult> results,
                                       const QValueReport& report,
                                       double alpha = 0.05);

}  // namespace namescan
