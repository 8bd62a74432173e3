#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "namescan/multiplicity.hpp"
#include "namescan/roster.hpp"
#include "namescan/scarcity.hpp"

namespace namescan {

enum class MacroRegion { North, Center, South, Sardinia, Sicily };

std::string to_string(MacroRegion m);
std::optional<MacroRegion> macro_region_from_string(const std::string& s);

// Region label -> macro-region. The built-in default covers the twenty
// Italian regions; arbitrary maps load from two-column CSV "region,macro".
class MacroRegionMap {
 public:
  MacroRegionMap() = default;
  explicit MacroRegionMap(std::map<std::string, MacroRegion> entries)
      : entries_(std::move(entries)) {}

  static MacroRegionMap italian_default();
  static MacroRegionMap load(std::istream& in, char delimiter = ',');

  std::optional<MacroRegion> macro_of(const std::string& region) const;
  const std::map<std::string, MacroRegion>& entries() const noexcept {
    return entries_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, MacroRegion> entries_;
};

// Set of normalized names considered "common" (high-frequency native
// names); analyses restricted to it are insensitive to rare-name influx.
class CommonNameList {
 public:
  CommonNameList() = default;
  explicit CommonNameList(std::set<std::string> names)
      : names_(std::move(names)) {}

  // One name per line (or first CSV column); names are normalized with
  // the given policy, lines that normalize to nothing are skipped.
  static CommonNameList load(std::istream& in,
                             const NormalizationPolicy& policy = {});

  bool contains(const std::string& normalized_name) const {
    return names_.count(normalized_name) != 0;
  }
  std::size_t size() const noexcept { return names_.size(); }
  const std::set<std::string>& names() const noexcept { return names_; }

 private:
  std::set<std::string> names_;
};

// Sub-roster of the persons matching a predicate; group index and name
// field carry over. May be empty.
Roster restrict(const Roster& roster,
                const std::function<bool(const Person&)>& keep);

// Runs the scarcity test separately on the female-only and male-only
// sub-rosters (persons of unknown gender take part in neither). Each side
// equals analyze_groups() on the corresponding restriction.
std::pair<std::vector<ScarcityResult>, std::vector<ScarcityResult>>
gender_split_analyze(const Roster& roster, const TestConfig& cfg);

// Keeps only persons whose selected name is on the common list.
Roster filter_common(const Roster& roster, const CommonNameList& list);

struct CommonNameStats {
  std::map<std::string, double> proportion_by_group;
  double mean = 0.0;         // unweighted mean over groups
  double percentile5 = 0.0;  // nearest-rank 5th percentile of proportions
  std::set<std::string> bottom_groups;  // groups at or below percentile5
};

// Per-group share of persons bearing a common name.
CommonNameStats common_name_proportion(const Roster& roster,
                                       const CommonNameList& list);

// Removes whole groups by label (unknown labels are ignored).
Roster exclude_groups(const Roster& roster,
                      const std::set<std::string>& labels);

struct RegionCell {
  std::string region;
  ScarcityResult result;  // pool = that region's population
};

struct RegionGroupSummary {
  std::int64_t regions_tested = 0;
  std::int64_t regions_flagged = 0;           // p <= alpha among tested
  std::optional<double> proportion_flagged;   // empty when nothing tested
};

struct RegionSummary {
  double alpha = 0.05;
  std::vector<RegionCell> cells;  // region-major, then group label order
  std::map<std::string, RegionGroupSummary> by_group;
};

// Re-runs the test inside every region separately: each cell samples from
// its own region's name pool. Persons without a region are left out.
// Per-region streams derive from cfg.seed and the region label.
RegionSummary region_sweep(const Roster& roster, const TestConfig& cfg,
                           double alpha = 0.05);

}  // namespace namescan
