#include "namescan/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "namescan/errors.hpp"

namespace namescan {

LogitFit logit_regression(
    std::span<const std::pair<double, double>> covariate_and_p,
    double epsilon) {
  if (covariate_and_p.size() < 2)
    throw DegenerateDesign("need at least two points to fit a line");
  if (!(epsilon > 0.0) || epsilon >= 0.5)
    throw InvalidConfig("clamp epsilon outside (0, 0.5)");

  LogitFit fit;
  fit.clamp_epsilon = epsilon;
  fit.points.reserve(covariate_and_p.size());
  for (const auto& [w, p] : covariate_and_p) {
    if (!(p > 0.0) || p > 1.0)
      throw InvalidPValue("p-value " + std::to_string(p) + " outside (0, 1]");
    const double clamped = std::min(1.0 - epsilon, std::max(epsilon, p));
    fit.points.push_back(
        LogitPoint{w, p, std::log(clamped / (1.0 - clamped))});
  }

  const auto n = static_cast<double>(fit.points.size());
  double mean_w = 0.0, mean_y = 0.0;
  for (const LogitPoint& pt : fit.points) {
    mean_w += pt.covariate;
    mean_y += pt.logit;
  }
  mean_w /= n;
  mean_y /= n;

  double sww = 0.0, swy = 0.0, syy = 0.0;
  for (const LogitPoint& pt : fit.points) {
    const double dw = pt.covariate - mean_w;
    const double dy = pt.logit - mean_y;
    sww += dw * dw;
    swy += dw * dy;
    syy += dy * dy;
  }
  if (sww == 0.0)
    throw DegenerateDesign("covariate is constant; slope undefined");

  fit.slope = swy / sww;
  fit.intercept = mean_y - fit.slope * mean_w;

  double ss_res = 0.0;
  for (const LogitPoint& pt : fit.points) {
    const double resid = pt.logit - (fit.intercept + fit.slope * pt.covariate);
    ss_res += resid * resid;
  }
  if (syy > 0.0) {
    fit.r_squared = 1.0 - ss_res / syy;
  } else {
    // All responses equal: the horizontal line is a perfect fit.
    fit.r_squared = 1.0;
  }
  return fit;
}

std::vector<FrequencyScope> name_frequencies(const Roster& roster,
                                             FrequencyScopeKind kind,
                                             std::int64_t k) {
  if (k < 1) throw InvalidConfig("top-k must be >= 1");
  if (roster.empty()) throw EmptyInput("roster is empty");

  auto tabulate = [&](const std::string& scope,
                      std::span<const std::size_t> members) {
    std::unordered_map<std::string_view, std::int64_t> counts;
    counts.reserve(members.size() * 2);
    for (std::size_t i : members) ++counts[roster.name_of(i)];

    FrequencyScope out;
    out.scope = scope;
    out.total = static_cast<std::int64_t>(members.size());
    out.distinct = static_cast<std::int64_t>(counts.size());
    out.top.reserve(counts.size());
    for (const auto& [name, count] : counts)
      out.top.push_back(NameCount{std::string(name), count});
    std::sort(out.top.begin(), out.top.end(),
              [](const NameCount& a, const NameCount& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.name < b.name;
              });
    if (static_cast<std::int64_t>(out.top.size()) > k)
      out.top.resize(static_cast<std::size_t>(k));
    return out;
  };

  std::vector<FrequencyScope> scopes;
  if (kind == FrequencyScopeKind::Whole) {
    std::vector<std::size_t> all(roster.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    scopes.push_back(tabulate("all", all));
  } else {
    for (const auto& [label, members] : roster.group_index())
      scopes.push_back(tabulate(label, members));
  }
  return scopes;
}

std::map<std::string, GenderCounts> women_fraction(const Roster& roster) {
  std::map<std::string, GenderCounts> out;
  auto add = [](GenderCounts& c, Gender g) {
    switch (g) {
      case Gender::Female: ++c.n_female; break;
      case Gender::Male: ++c.n_male; break;
      default: ++c.n_unknown; break;
    }
  };
  for (const Person& p : roster.persons()) {
    add(out[p.group], p.gender);
    add(out[""], p.gender);
  }
  for (auto& [label, c] : out) {
    const std::int64_t gendered = c.n_female + c.n_male;
    if (gendered > 0)
      c.fraction_female =
          static_cast<double>(c.n_female) / static_cast<double>(gendered);
  }
  return out;
}

}  // namespace namescan
