#include "namescan/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "namescan/errors.hpp"
#include "namescan/rng.hpp"

namespace namescan {

std::vector<double> default_lambda_grid() {
  std::vector<double> grid;
  grid.reserve(19);
  for (int i = 0; i <= 18; ++i) grid.push_back(0.05 * i);
  return grid;
}

namespace {

void validate_pvalues(std::span<const double> p) {
  if (p.empty()) throw EmptyInput("no p-values supplied");
  for (double v : p)
    if (!(v > 0.0) || v > 1.0)
      throw InvalidPValue("p-value " + std::to_string(v) + " outside (0, 1]");
}

std::vector<double> pi0_profile(std::span<const double> p,
                                std::span<const double> grid) {
  const auto m = static_cast<double>(p.size());
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::int64_t exceed = 0;
    for (double v : p)
      if (v > grid[i]) ++exceed;
    out[i] = static_cast<double>(exceed) / (m * (1.0 - grid[i]));
  }
  return out;
}

}  // namespace

QValueReport qvalues(std::span<const double> pvalues,
                     const QValueOptions& options) {
  validate_pvalues(pvalues);
  const std::size_t m = pvalues.size();
  const double md = static_cast<double>(m);

  QValueReport report;
  report.lambda_grid =
      options.lambda_grid.empty() ? default_lambda_grid() : options.lambda_grid;
  for (double l : report.lambda_grid)
    if (l < 0.0 || l >= 1.0)
      throw InvalidConfig("lambda tuning values must lie in [0, 1)");

  if (options.pi0_override) {
    const double forced = *options.pi0_override;
    if (!(forced > 0.0) || forced > 1.0)
      throw InvalidConfig("pi0 override outside (0, 1]");
    report.pi0_hat = forced;
    report.lambda_star = 0.0;
  } else {
    if (options.n_bootstrap < 1)
      throw InvalidConfig("n_bootstrap must be >= 1");
    report.n_bootstrap = options.n_bootstrap;
    report.pi0_by_lambda = pi0_profile(pvalues, report.lambda_grid);
    const double min_pi0 = *std::min_element(report.pi0_by_lambda.begin(),
                                             report.pi0_by_lambda.end());

    // Bootstrap MSE of pi0(lambda) around the minimum plug-in estimate;
    // pick the lambda with the smallest MSE (ties -> smallest lambda).
    std::vector<double> mse(report.lambda_grid.size(), 0.0);
    std::vector<double> resample(m);
    for (int b = 0; b < options.n_bootstrap; ++b) {
      rng::Xoshiro256ss gen(
          rng::mix(options.seed, static_cast<std::uint64_t>(b)));
      for (std::size_t i = 0; i < m; ++i)
        resample[i] = pvalues[static_cast<std::size_t>(gen.bounded(m))];
      const std::vector<double> boot =
          pi0_profile(resample, report.lambda_grid);
      for (std::size_t i = 0; i < mse.size(); ++i) {
        const double diff = boot[i] - min_pi0;
        mse[i] += diff * diff;
      }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < mse.size(); ++i)
      if (mse[i] < mse[best]) best = i;
    report.lambda_star = report.lambda_grid[best];
    // Guard rails: a zero estimate would zero every q-value, and values
    // above 1 are meaningless.
    report.pi0_hat =
        std::min(1.0, std::max(1.0 / md, report.pi0_by_lambda[best]));
  }

  // q for the i-th smallest p is min over ranks j >= i of
  // pi0 * (m * p_(j) / j), via a cumulative minimum from the largest rank.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return pvalues[a] < pvalues[b];
                   });
  std::vector<double> q(m);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t r = m; r-- > 0;) {
    const double raw = report.pi0_hat *
                       (md * pvalues[order[r]] / static_cast<double>(r + 1));
    running = std::min(running, raw);
    q[order[r]] = running;
  }

  report.entries.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    report.entries[i].p = pvalues[i];
    report.entries[i].q = q[i];
  }
  return report;
}

QValueReport qvalues(std::span<const std::string> labels,
                     std::span<const double> pvalues,
                     const QValueOptions& options) {
  if (labels.size() != pvalues.size())
    throw LabelMismatch("labels and p-values differ in length");
  QValueReport report = qvalues(pvalues, options);
  for (std::size_t i = 0; i < labels.size(); ++i)
    report.entries[i].label = labels[i];
  return report;
}

QValueReport qvalues(std::span<const ScarcityResult> results,
                     const QValueOptions& options) {
  std::vector<std::string> labels;
  std::vector<double> pvals;
  for (const ScarcityResult& r : results) {
    if (r.skipped) continue;
    labels.push_back(r.group);
    pvals.push_back(r.p_hat.value());
  }
  return qvalues(labels, pvals, options);
}

std::vector<ClassifiedResult> classify(std::span<const ScarcityResult> results,
                                       const QValueReport& report,
                                       double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InvalidConfig("alpha outside (0, 1]");

  std::vector<ClassifiedResult> out;
  out.reserve(results.size());
  std::size_t next_entry = 0;
  for (const ScarcityResult& r : results) {
    ClassifiedResult c;
    c.scarcity = r;
    if (!r.skipped) {
      if (next_entry >= report.entries.size())
        throw LabelMismatch("q-value report shorter than tested results");
      const QValueEntry& e = report.entries[next_entry++];
      if (!e.label.empty() && e.label != r.group)
        throw LabelMismatch("q-value entry \"" + e.label +
                            "\" does not match group \"" + r.group + "\"");
      if (e.p != r.p_hat.value())
        throw LabelMismatch("q-value entry p differs from group p for \"" +
                            r.group + "\"");
      c.q = e.q;
      c.highly_significant = r.p_hat.value() <= alpha && e.q <= alpha;
    }
    out.push_back(std::move(c));
  }
  if (next_entry != report.entries.size())
    throw LabelMismatch("q-value report longer than tested results");
  return out;
}

}  // namespace namescan
