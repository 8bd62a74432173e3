#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "namescan/roster.hpp"

namespace namescan {

struct TestConfig {
  std::int64_t n_sims = 100000;      // Monte Carlo replicates per group
  std::int64_t min_group_size = 50;  // groups below this are skipped
  std::uint64_t seed = 0;            // base seed for the whole analysis
  int workers = 1;                   // threads per group; result-invariant

  bool operator==(const TestConfig&) const = default;
};

struct ScarcityResult {
  std::string group;
  std::int64_t n_people = 0;
  std::int64_t n_distinct = 0;
  std::int64_t pool_size = 0;
  std::int64_t pool_distinct = 0;
  std::optional<double> p_hat;  // empty when the group was skipped
  std::int64_t n_leq = 0;       // replicates with distinct count <= observed
  std::int64_t n_sims = 0;
  std::uint64_t seed = 0;  // per-group stream seed actually used
  bool skipped = false;

  bool operator==(const ScarcityResult&) const = default;
};

// Multiset of names, canonicalized (the same multiset in any order yields
// the same pool) and interned to dense ids for fast distinct counting.
class NamePool {
 public:
  explicit NamePool(std::span<const std::string> names);

  const std::vector<std::int32_t>& ids() const noexcept { return ids_; }
  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(ids_.size());
  }
  std::int64_t distinct() const noexcept { return distinct_; }
  // Multiplicity of each name id, ids 0..distinct()-1.
  const std::vector<std::int64_t>& multiplicities() const noexcept {
    return mult_;
  }

 private:
  std::vector<std::int32_t> ids_;
  std::vector<std::int64_t> mult_;
  std::int64_t distinct_ = 0;
};

// Derives the per-group random stream from the analysis seed; exposed so
// that callers can reproduce a single group's p-value in isolation.
std::uint64_t group_stream_seed(std::uint64_t base_seed,
                                std::string_view group_label);

// Monte Carlo estimate of P(L' <= l_obs) where L' is the distinct-name
// count of a uniformly random n-subset of the pool, drawn without
// replacement. Uses the add-one estimator (1 + count) / (1 + n_sims), so
// the result is never zero. Deterministic given (pool, n, l_obs,
// cfg.seed, cfg.n_sims); independent of cfg.workers.
ScarcityResult mc_pvalue(const NamePool& pool, std::int64_t n,
                         std::int64_t l_obs, const TestConfig& cfg);

struct ExactLimits {
  std::int64_t max_total = 5000;   // pool size cap for the exact routine
  std::int64_t max_distinct = 64;  // distinct-name cap
};

// Exact distribution of the distinct-name count of a uniform n-subset of a
// pool given by name multiplicities; entry d is P(L' == d), d = 0..k.
std::vector<double> exact_distinct_distribution(
    std::span<const std::int64_t> multiplicities, std::int64_t n,
    const ExactLimits& limits = {});

// Exact P(L' <= l_obs); same pool encoding as above. Throws
// InstanceTooLarge beyond the limits.
double exact_pvalue(std::span<const std::int64_t> multiplicities,
                    std::int64_t n, std::int64_t l_obs,
                    const ExactLimits& limits = {});

// Tests every group of `roster` against the name pool of `pool` (often the
// same roster). Results ordered by group label. Each group gets its own
// stream seed derived from cfg.seed and the label, so results do not
// depend on evaluation order.
std::vector<ScarcityResult> analyze_groups(const Roster& roster,
                                           const Roster& pool,
                                           const TestConfig& cfg);
std::vector<ScarcityResult> analyze_groups(const Roster& roster,
                                           const TestConfig& cfg);

}  // namespace namescan
