#include "namescan/scarcity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <thread>

#include "namescan/errors.hpp"
#include "namescan/rng.hpp"

namespace namescan {

NamePool::NamePool(std::span<const std::string> names) {
  if (names.empty()) throw EmptyPool("name pool is empty");
  if (names.size() > static_cast<std::size_t>(
                         std::numeric_limits<std::int32_t>::max()))
    throw InstanceTooLarge("pool exceeds 2^31 names");

  // Canonical order: the pool is a multiset, so sampling results must not
  // depend on the order the names arrived in.
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end());

  ids_.resize(sorted.size());
  std::int32_t id = -1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] != sorted[i - 1]) {
      ++id;
      mult_.push_back(0);
    }
    ids_[i] = id;
    ++mult_[static_cast<std::size_t>(id)];
  }
  distinct_ = id + 1;
}

std::uint64_t group_stream_seed(std::uint64_t base_seed,
                                std::string_view group_label) {
  return rng::mix(base_seed, rng::hash_label(group_label));
}

namespace {

struct SamplerScratch {
  std::vector<std::int32_t> index;  // permutation buffer, restored per pass
  std::vector<std::int32_t> swaps;
  std::vector<std::uint64_t> marks;

  SamplerScratch(std::int64_t pool_size, std::int64_t n,
                 std::int64_t distinct)
      : index(static_cast<std::size_t>(pool_size)),
        swaps(static_cast<std::size_t>(n)),
        marks(static_cast<std::size_t>(distinct), 0) {
    std::iota(index.begin(), index.end(), 0);
  }
};

// Counts replicates in [first, last) whose sampled distinct count is
// <= l_obs. Each replicate has its own generator, so any partition of the
// replicate range yields the same total.
std::int64_t count_range(const std::vector<std::int32_t>& ids, std::int64_t n,
                         std::int64_t l_obs, std::uint64_t stream_seed,
                         std::int64_t first, std::int64_t last,
                         SamplerScratch& scratch, std::uint64_t epoch_base) {
  const auto pool_size = static_cast<std::int64_t>(ids.size());
  std::int64_t hits = 0;
  std::uint64_t epoch = epoch_base;
  for (std::int64_t r = first; r < last; ++r) {
    rng::Xoshiro256ss gen(rng::mix(stream_seed, static_cast<std::uint64_t>(r)));
    ++epoch;
    std::int64_t d = 0;
    // Partial Fisher-Yates: after i steps, index[0..i] is a uniform
    // i-prefix of a random permutation.
    for (std::int64_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::int64_t>(
          gen.bounded(static_cast<std::uint64_t>(pool_size - i)));
      const std::int64_t u = i + j;
      scratch.swaps[static_cast<std::size_t>(i)] =
          static_cast<std::int32_t>(u);
      std::swap(scratch.index[static_cast<std::size_t>(i)],
                scratch.index[static_cast<std::size_t>(u)]);
      const std::int32_t name =
          ids[static_cast<std::size_t>(
              scratch.index[static_cast<std::size_t>(i)])];
      auto& mark = scratch.marks[static_cast<std::size_t>(name)];
      if (mark != epoch) {
        mark = epoch;
        ++d;
      }
    }
    if (d <= l_obs) ++hits;
    // Undo the swaps so the next replicate starts from the identity.
    for (std::int64_t i = n - 1; i >= 0; --i)
      std::swap(scratch.index[static_cast<std::size_t>(i)],
                scratch.index[static_cast<std::size_t>(
                    scratch.swaps[static_cast<std::size_t>(i)])]);
  }
  return hits;
}

}  // namespace

ScarcityResult mc_pvalue(const NamePool& pool, std::int64_t n,
                         std::int64_t l_obs, const TestConfig& cfg) {
  if (pool.size() == 0) throw EmptyPool("name pool is empty");
  if (n < 1) throw InvalidConfig("sample size must be >= 1");
  if (n > pool.size())
    throw SampleLargerThanPool("sample size " + std::to_string(n) +
                               " exceeds pool size " +
                               std::to_string(pool.size()));
  if (l_obs < 0 || l_obs > n)
    throw InvalidObservedCount("observed distinct count " +
                               std::to_string(l_obs) + " outside [0, " +
                               std::to_string(n) + "]");
  if (cfg.n_sims < 1) throw InvalidConfig("n_sims must be >= 1");
  if (cfg.workers < 1) throw InvalidConfig("workers must be >= 1");

  const std::int64_t S = cfg.n_sims;
  const int W = static_cast<int>(std::min<std::int64_t>(cfg.workers, S));

  std::int64_t hits = 0;
  if (W == 1) {
    SamplerScratch scratch(pool.size(), n, pool.distinct());
    hits = count_range(pool.ids(), n, l_obs, cfg.seed, 0, S, scratch, 0);
  } else {
    std::vector<SamplerScratch> scratch;
    scratch.reserve(static_cast<std::size_t>(W));
    for (int w = 0; w < W; ++w)
      scratch.emplace_back(pool.size(), n, pool.distinct());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(W), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(W));
    for (int w = 0; w < W; ++w) {
      const std::int64_t first = S * w / W;
      const std::int64_t last = S * (w + 1) / W;
      threads.emplace_back([&, w, first, last] {
        counts[static_cast<std::size_t>(w)] =
            count_range(pool.ids(), n, l_obs, cfg.seed, first, last,
                        scratch[static_cast<std::size_t>(w)], 0);
      });
    }
    for (auto& t : threads) t.join();
    hits = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  }

  ScarcityResult res;
  res.n_people = n;
  res.n_distinct = l_obs;
  res.pool_size = pool.size();
  res.pool_distinct = pool.distinct();
  res.n_leq = hits;
  res.n_sims = S;
  res.seed = cfg.seed;
  res.p_hat = (1.0 + static_cast<double>(hits)) / (1.0 + static_cast<double>(S));
  return res;
}

namespace {

// log C(n, k) via a shared log-factorial table.
class LogChoose {
 public:
  explicit LogChoose(std::int64_t n_max) : lf_(n_max + 1, 0.0) {
    for (std::int64_t i = 1; i <= n_max; ++i)
      lf_[i] = lf_[i - 1] + std::log(static_cast<double>(i));
  }
  double operator()(std::int64_t n, std::int64_t k) const {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return lf_[n] - lf_[k] - lf_[n - k];
  }

 private:
  std::vector<double> lf_;
};

}  // namespace

std::vector<double> exact_distinct_distribution(
    std::span<const std::int64_t> multiplicities, std::int64_t n,
    const ExactLimits& limits) {
  const auto k = static_cast<std::int64_t>(multiplicities.size());
  if (k == 0) throw EmptyPool("empty multiplicity vector");
  std::int64_t total = 0;
  for (std::int64_t m : multiplicities) {
    if (m < 1) throw InvalidConfig("multiplicities must be >= 1");
    total += m;
  }
  if (total > limits.max_total)
    throw InstanceTooLarge("pool size " + std::to_string(total) +
                           " exceeds exact-enumeration cap " +
                           std::to_string(limits.max_total));
  if (k > limits.max_distinct)
    throw InstanceTooLarge("distinct names " + std::to_string(k) +
                           " exceed exact-enumeration cap " +
                           std::to_string(limits.max_distinct));
  if (n < 1 || n > total)
    throw SampleLargerThanPool("sample size " + std::to_string(n) +
                               " outside [1, " + std::to_string(total) + "]");

  const LogChoose lc(total);
  const auto width = static_cast<std::size_t>(k) + 1;
  auto at = [width](std::vector<double>& v, std::int64_t j,
                    std::int64_t d) -> double& {
    return v[static_cast<std::size_t>(j) * width + static_cast<std::size_t>(d)];
  };

  // cur[j][d] = P(uniform j-subset of the first `seen` persons holds
  // exactly d distinct names). Rows stay normalized, so every value lies
  // in [0, 1] and no overflow is possible.
  std::vector<double> cur(static_cast<std::size_t>(n + 1) * width, 0.0);
  std::vector<double> next(cur.size(), 0.0);

  std::int64_t seen = multiplicities[0];
  for (std::int64_t j = 0; j <= std::min(n, seen); ++j)
    at(cur, j, j > 0 ? 1 : 0) = 1.0;

  for (std::int64_t g = 1; g < k; ++g) {
    const std::int64_t m = multiplicities[static_cast<std::size_t>(g)];
    const std::int64_t prev = seen;
    seen += m;
    std::fill(next.begin(), next.end(), 0.0);
    const std::int64_t jmax = std::min(n, seen);
    for (std::int64_t j = 0; j <= jmax; ++j) {
      const std::int64_t c_lo = std::max<std::int64_t>(0, j - prev);
      const std::int64_t c_hi = std::min(j, m);
      // Hypergeometric h(c) = C(m,c) C(prev, j-c) / C(seen, j); evaluated
      // once by log-gamma, then advanced by exact ratios.
      double h = std::exp(lc(m, c_lo) + lc(prev, j - c_lo) - lc(seen, j));
      for (std::int64_t c = c_lo; c <= c_hi; ++c) {
        if (c > c_lo)
          h *= static_cast<double>(m - c + 1) * static_cast<double>(j - c + 1) /
               (static_cast<double>(c) * static_cast<double>(prev - j + c));
        if (h > 0.0) {
          const std::int64_t shift = c > 0 ? 1 : 0;
          const std::int64_t d_hi = std::min(j - c, g);
          for (std::int64_t d = 0; d <= d_hi; ++d) {
            const double v = at(cur, j - c, d);
            if (v != 0.0) at(next, j, d + shift) += h * v;
          }
        }
      }
    }
    std::swap(cur, next);
  }

  std::vector<double> dist(width);
  for (std::int64_t d = 0; d <= k; ++d) dist[static_cast<std::size_t>(d)] =
      at(cur, n, d);
  return dist;
}

double exact_pvalue(std::span<const std::int64_t> multiplicities,
                    std::int64_t n, std::int64_t l_obs,
                    const ExactLimits& limits) {
  if (l_obs < 0 || l_obs > n)
    throw InvalidObservedCount("observed distinct count " +
                               std::to_string(l_obs) + " outside [0, " +
                               std::to_string(n) + "]");
  const std::vector<double> dist =
      exact_distinct_distribution(multiplicities, n, limits);
  double p = 0.0;
  const auto top = std::min<std::int64_t>(
      l_obs, static_cast<std::int64_t>(dist.size()) - 1);
  for (std::int64_t d = 0; d <= top; ++d)
    p += dist[static_cast<std::size_t>(d)];
  return std::clamp(p, 0.0, 1.0);
}

std::vector<ScarcityResult> analyze_groups(const Roster& roster,
                                           const Roster& pool,
                                           const TestConfig& cfg) {
  if (pool.empty()) throw EmptyPool("pool roster is empty");
  if (roster.field_selector() != pool.field_selector())
    throw LabelMismatch("roster and pool use different name fields");

  const std::vector<std::string> pool_names = pool.names();
  const NamePool name_pool(pool_names);

  std::vector<ScarcityResult> out;
  out.reserve(roster.group_index().size());
  for (const auto& [label, members] : roster.group_index()) {
    std::vector<std::string> names;
    names.reserve(members.size());
    for (std::size_t i : members) names.push_back(roster.name_of(i));

    ScarcityResult res;
    res.group = label;
    res.n_people = static_cast<std::int64_t>(names.size());
    res.n_distinct = static_cast<std::int64_t>(distinct_count(names));
    res.pool_size = name_pool.size();
    res.pool_distinct = name_pool.distinct();
    res.seed = group_stream_seed(cfg.seed, label);
    if (res.n_people < cfg.min_group_size) {
      res.skipped = true;
      out.push_back(std::move(res));
      continue;
    }

    TestConfig group_cfg = cfg;
    group_cfg.seed = res.seed;
    ScarcityResult mc =
        mc_pvalue(name_pool, res.n_people, res.n_distinct, group_cfg);
    mc.group = label;
    out.push_back(std::move(mc));
  }
  return out;
}

std::vector<ScarcityResult> analyze_groups(const Roster& roster,
                                           const TestConfig& cfg) {
  return analyze_groups(roster, roster, cfg);
}

}  // namespace namescan
