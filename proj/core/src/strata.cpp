#include "namescan/strata.hpp"

#include <algorithm>
#include <cmath>

#include "namescan/csv.hpp"
#include "namescan/errors.hpp"
#include "namescan/rng.hpp"

namespace namescan {

std::string to_string(MacroRegion m) {
  switch (m) {
    case MacroRegion::North: return "North";
    case MacroRegion::Center: return "Center";
    case MacroRegion::South: return "South";
    case MacroRegion::Sardinia: return "Sardinia";
    case MacroRegion::Sicily: return "Sicily";
  }
  return "";
}

std::optional<MacroRegion> macro_region_from_string(const std::string& s) {
  if (s == "North") return MacroRegion::North;
  if (s == "Center") return MacroRegion::Center;
  if (s == "South") return MacroRegion::South;
  if (s == "Sardinia") return MacroRegion::Sardinia;
  if (s == "Sicily") return MacroRegion::Sicily;
  return std::nullopt;
}

MacroRegionMap MacroRegionMap::italian_default() {
  std::map<std::string, MacroRegion> e;
  for (const char* r : {"Aosta Valley", "Piedmont", "Liguria", "Lombardy",
                        "Trentino-South Tyrol", "Veneto",
                        "Friuli-Venezia Giulia", "Emilia-Romagna"})
    e[r] = MacroRegion::North;
  for (const char* r : {"Tuscany", "Umbria", "Marche", "Lazio"})
    e[r] = MacroRegion::Center;
  for (const char* r : {"Abruzzo", "Molise", "Campania", "Apulia",
                        "Basilicata", "Calabria"})
    e[r] = MacroRegion::South;
  e["Sardinia"] = MacroRegion::Sardinia;
  e["Sicily"] = MacroRegion::Sicily;
  return MacroRegionMap(std::move(e));
}

MacroRegionMap MacroRegionMap::load(std::istream& in, char delimiter) {
  CsvReader reader(in, delimiter);
  std::map<std::string, MacroRegion> e;
  while (auto row = reader.next_row()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != 2)
      throw SchemaError("macro-region map rows need 2 columns, got " +
                        std::to_string(row->size()) + " at row " +
                        std::to_string(reader.row_number()));
    auto macro = macro_region_from_string((*row)[1]);
    if (!macro)
      throw SchemaError("unknown macro-region \"" + (*row)[1] + "\" at row " +
                        std::to_string(reader.row_number()));
    e[(*row)[0]] = *macro;
  }
  if (e.empty()) throw EmptyInput("macro-region map is empty");
  return MacroRegionMap(std::move(e));
}

std::optional<MacroRegion> MacroRegionMap::macro_of(
    const std::string& region) const {
  auto it = entries_.find(region);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

CommonNameList CommonNameList::load(std::istream& in,
                                    const NormalizationPolicy& policy) {
  std::set<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto comma = line.find(','); comma != std::string::npos)
      line.resize(comma);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      names.insert(normalize_name(line, policy));
    } catch (const EmptyAfterNormalization&) {
      // line carries no usable name; skip
    }
  }
  return CommonNameList(std::move(names));
}

Roster restrict(const Roster& roster,
                const std::function<bool(const Person&)>& keep) {
  std::vector<Person> kept;
  for (const Person& p : roster.persons())
    if (keep(p)) kept.push_back(p);
  return Roster::from_persons(std::move(kept), roster.field_selector());
}

std::pair<std::vector<ScarcityResult>, std::vector<ScarcityResult>>
gender_split_analyze(const Roster& roster, const TestConfig& cfg) {
  const Roster females =
      restrict(roster, [](const Person& p) { return p.gender == Gender::Female; });
  const Roster males =
      restrict(roster, [](const Person& p) { return p.gender == Gender::Male; });
  std::pair<std::vector<ScarcityResult>, std::vector<ScarcityResult>> out;
  if (!females.empty()) out.first = analyze_groups(females, cfg);
  if (!males.empty()) out.second = analyze_groups(males, cfg);
  return out;
}

Roster filter_common(const Roster& roster, const CommonNameList& list) {
  return restrict(roster, [&](const Person& p) {
    return list.contains(roster.field_selector() == NameField::LastName
                             ? p.last_name
                             : p.first_name.value());
  });
}

CommonNameStats common_name_proportion(const Roster& roster,
                                       const CommonNameList& list) {
  if (roster.empty()) throw EmptyInput("roster is empty");
  CommonNameStats stats;
  std::vector<double> props;
  for (const auto& [label, members] : roster.group_index()) {
    std::int64_t common = 0;
    for (std::size_t i : members)
      if (list.contains(roster.name_of(i))) ++common;
    const double prop =
        static_cast<double>(common) / static_cast<double>(members.size());
    stats.proportion_by_group[label] = prop;
    props.push_back(prop);
  }
  stats.mean = 0.0;
  for (double v : props) stats.mean += v;
  stats.mean /= static_cast<double>(props.size());

  std::sort(props.begin(), props.end());
  const auto g = static_cast<double>(props.size());
  auto idx = static_cast<std::size_t>(
      std::max(0.0, std::ceil(0.05 * g) - 1.0));
  stats.percentile5 = props[idx];
  for (const auto& [label, prop] : stats.proportion_by_group)
    if (prop <= stats.percentile5) stats.bottom_groups.insert(label);
  return stats;
}

Roster exclude_groups(const Roster& roster,
                      const std::set<std::string>& labels) {
  return restrict(roster,
                  [&](const Person& p) { return labels.count(p.group) == 0; });
}

RegionSummary region_sweep(const Roster& roster, const TestConfig& cfg,
                           double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InvalidConfig("alpha outside (0, 1]");

  std::set<std::string> regions;
  for (const Person& p : roster.persons())
    if (p.region) regions.insert(*p.region);

  RegionSummary summary;
  summary.alpha = alpha;
  for (const std::string& region : regions) {
    const Roster sub = restrict(roster, [&](const Person& p) {
      return p.region && *p.region == region;
    });
    TestConfig region_cfg = cfg;
    region_cfg.seed = rng::mix(cfg.seed, rng::hash_label(region));
    for (ScarcityResult& r : analyze_groups(sub, region_cfg)) {
      RegionGroupSummary& gs = summary.by_group[r.group];
      if (!r.skipped) {
        ++gs.regions_tested;
        if (r.p_hat.value() <= alpha) ++gs.regions_flagged;
      }
      summary.cells.push_back(RegionCell{region, std::move(r)});
    }
  }
  for (auto& [label, gs] : summary.by_group)
    if (gs.regions_tested > 0)
      gs.proportion_flagged = static_cast<double>(gs.regions_flagged) /
                              static_cast<double>(gs.regions_tested);
  return summary;
}

}  // namespace namescan
