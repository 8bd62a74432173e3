#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "namescan/errors.hpp"
#include "namescan/rng.hpp"
#include "namescan/strata.hpp"

using namespace namescan;
using namescan::rng::Xoshiro256ss;

TEST_CASE("the built-in macro-region map covers the twenty Italian regions") {
  const MacroRegionMap map = MacroRegionMap::italian_default();
  CHECK(map.size() == 20);

  std::map<MacroRegion, int> counts;
  for (const auto& [region, macro] : map.entries()) ++counts[macro];
  CHECK(counts[MacroRegion::North] == 8);
  CHECK(counts[MacroRegion::Center] == 4);
  CHECK(counts[MacroRegion::South] == 6);
  CHECK(counts[MacroRegion::Sardinia] == 1);
  CHECK(counts[MacroRegion::Sicily] == 1);

  CHECK(map.macro_of("Lombardy") == MacroRegion::North);
  CHECK(map.macro_of("Piedmont") == MacroRegion::North);
  CHECK(map.macro_of("Emilia-Romagna") == MacroRegion::North);
  CHECK(map.macro_of("Tuscany") == MacroRegion::Center);
  CHECK(map.macro_of("Lazio") == MacroRegion::Center);
  CHECK(map.macro_of("Campania") == MacroRegion::South);
  CHECK(map.macro_of("Calabria") == MacroRegion::South);
  CHECK(map.macro_of("Apulia") == MacroRegion::South);
  CHECK(map.macro_of("Sardinia") == MacroRegion::Sardinia);
  CHECK(map.macro_of("Sicily") == MacroRegion::Sicily);
  CHECK(!map.macro_of("Bavaria").has_value());
}

TEST_CASE("macro-region maps load from headerless two-column CSV") {
  std::istringstream in(
      "Alpha,North\n"
      "Beta,South\n"
      "Gamma,Sicily\n");
  const MacroRegionMap map = MacroRegionMap::load(in);
  CHECK(map.size() == 3);
  CHECK(map.macro_of("Beta") == MacroRegion::South);

  std::istringstream bad_macro("Alpha,Midlands\n");
  CHECK_THROWS_AS(MacroRegionMap::load(bad_macro), SchemaError);
  std::istringstream empty("");
  CHECK_THROWS_AS(MacroRegionMap::load(empty), EmptyInput);
  std::istringstream ragged("Alpha,North\nBeta\n");
  CHECK_THROWS_AS(MacroRegionMap::load(ragged), SchemaError);
}

TEST_CASE("macro-region names round-trip through strings") {
  for (MacroRegion m : {MacroRegion::North, MacroRegion::Center,
                        MacroRegion::South, MacroRegion::Sardinia,
                        MacroRegion::Sicily})
    CHECK(macro_region_from_string(to_string(m)) == m);
  CHECK(!macro_region_from_string("East").has_value());
}

TEST_CASE("restrict keeps matching persons with groups re-indexed") {
  std::vector<Person> persons;
  for (int i = 0; i < 10; ++i) {
    Person p = testutil::person("N" + std::to_string(i), i % 2 ? "A" : "B");
    p.gender = i % 3 == 0 ? Gender::Female : Gender::Male;
    persons.push_back(p);
  }
  const Roster roster = Roster::from_persons(persons);
  const Roster women = restrict(
      roster, [](const Person& p) { return p.gender == Gender::Female; });
  CHECK(women.size() == 4);  // i = 0, 3, 6, 9
  for (const Person& p : women.persons()) CHECK(p.gender == Gender::Female);
  // Restricting twice is a no-op.
  const Roster again = restrict(
      women, [](const Person& p) { return p.gender == Gender::Female; });
  CHECK(again == women);
  // An unsatisfiable predicate yields an empty roster.
  CHECK(restrict(roster, [](const Person&) { return false; }).empty());
}

TEST_CASE("common-name lists load, filter, and report proportions") {
  std::istringstream in("Rossi\nBIANCHI\nMüller\n123\n\n");
  const CommonNameList list = CommonNameList::load(in);
  CHECK(list.size() == 3);  // "123" and the blank line are skipped
  CHECK(list.contains("ROSSI"));
  CHECK(list.contains("MULLER"));
  CHECK(!list.contains("VERDI"));

  const Roster roster = testutil::make_roster({{"ROSSI", "A"},
                                               {"VERDI", "A"},
                                               {"BIANCHI", "A"},
                                               {"ROSSI", "B"},
                                               {"ESPOSITO", "B"}});
  const Roster filtered = filter_common(roster, list);
  CHECK(filtered.size() == 3);
  for (const Person& p : filtered.persons()) CHECK(list.contains(p.last_name));
  CHECK(filter_common(filtered, list) == filtered);

  const CommonNameStats stats = common_name_proportion(roster, list);
  CHECK(stats.proportion_by_group.at("A") == doctest::Approx(2.0 / 3.0));
  CHECK(stats.proportion_by_group.at("B") == doctest::Approx(0.5));
  CHECK(stats.mean == doctest::Approx((2.0 / 3.0 + 0.5) / 2.0));
}

TEST_CASE("the bottom tail of common-name proportions is flagged") {
  // Thirty groups: 28 with 4 of 5 common names, 2 designed low with 1 of 5.
  std::vector<std::pair<std::string, std::string>> rows;
  auto add_group = [&rows](const std::string& label, int common) {
    for (int i = 0; i < 5; ++i)
      rows.emplace_back(i < common ? "COMMON" + std::to_string(i)
                                   : "RARE" + label + std::to_string(i),
                        label);
  };
  for (int g = 0; g < 28; ++g) add_group("G" + std::to_string(g), 4);
  add_group("LOW1", 1);
  add_group("LOW2", 1);
  const Roster roster = testutil::make_roster(rows);

  std::set<std::string> common;
  for (int i = 0; i < 5; ++i) common.insert("COMMON" + std::to_string(i));
  const CommonNameStats stats =
      common_name_proportion(roster, CommonNameList(std::move(common)));
  // Nearest-rank 5th percentile of 30 values is the 2nd smallest.
  CHECK(stats.percentile5 == doctest::Approx(0.2));
  CHECK(stats.bottom_groups == std::set<std::string>{"LOW1", "LOW2"});
}

TEST_CASE("exclude_groups drops whole labels and ignores unknown ones") {
  const Roster roster = testutil::make_roster(
      {{"A", "X"}, {"B", "X"}, {"C", "Y"}, {"D", "Z"}});
  const Roster left = exclude_groups(roster, {"Y", "NOPE"});
  CHECK(left.size() == 3);
  CHECK(left.group_index().count("Y") == 0);
  CHECK(exclude_groups(left, {"Y"}) == left);
  CHECK(exclude_groups(roster, {}) == roster);
}

TEST_CASE("gender split equals analysis of each gender restriction") {
  std::vector<Person> persons;
  Xoshiro256ss gen(505);
  for (int i = 0; i < 240; ++i) {
    Person p = testutil::person("N" + std::to_string(gen.bounded(40)),
                                i % 2 ? "Law" : "History");
    const auto roll = gen.bounded(10);
    p.gender = roll < 4   ? Gender::Female
               : roll < 9 ? Gender::Male
                          : Gender::Unknown;
    persons.push_back(p);
  }
  const Roster roster = Roster::from_persons(persons);

  TestConfig cfg;
  cfg.n_sims = 800;
  cfg.min_group_size = 30;
  cfg.seed = 91;
  const auto [women, men] = gender_split_analyze(roster, cfg);
  const auto women_oracle = analyze_groups(
      restrict(roster,
               [](const Person& p) { return p.gender == Gender::Female; }),
      cfg);
  const auto men_oracle = analyze_groups(
      restrict(roster,
               [](const Person& p) { return p.gender == Gender::Male; }),
      cfg);
  CHECK(women == women_oracle);
  CHECK(men == men_oracle);
  // Unknown-gender persons appear on neither side.
  std::int64_t women_n = 0, men_n = 0;
  for (const auto& r : women) women_n += r.n_people;
  for (const auto& r : men) men_n += r.n_people;
  CHECK(women_n + men_n < 240);

  // An all-unknown roster produces two empty sides.
  const Roster unknowns = testutil::make_roster({{"A", "G"}, {"B", "G"}});
  const auto [w2, m2] = gender_split_analyze(unknowns, cfg);
  CHECK(w2.empty());
  CHECK(m2.empty());
}

TEST_CASE("region sweep tests every cell against its own region pool") {
  std::vector<Person> persons;
  Xoshiro256ss gen(7);
  const std::vector<std::string> regions = {"East", "West"};
  for (const std::string& region : regions) {
    for (const std::string& group : {"Law", "History"}) {
      for (int i = 0; i < 60; ++i) {
        Person p = testutil::person("N" + std::to_string(gen.bounded(25)),
                                    group, Gender::Unknown, region);
        persons.push_back(p);
      }
    }
  }
  // A few persons without a region stay out of the sweep entirely.
  persons.push_back(testutil::person("STRAY", "Law"));
  const Roster roster = Roster::from_persons(persons);

  TestConfig cfg;
  cfg.n_sims = 600;
  cfg.min_group_size = 50;
  cfg.seed = 2222;
  const RegionSummary summary = region_sweep(roster, cfg, 0.05);

  REQUIRE(summary.cells.size() == 4);
  CHECK(summary.alpha == 0.05);
  // Region-major, labels sorted within: East/History, East/Law, ...
  CHECK(summary.cells[0].region == "East");
  CHECK(summary.cells[0].result.group == "History");
  CHECK(summary.cells[1].result.group == "Law");
  CHECK(summary.cells[2].region == "West");
  for (const RegionCell& cell : summary.cells) {
    CHECK(cell.result.pool_size == 120);  // the region, not the roster
    CHECK(!cell.result.skipped);
  }
  CHECK(summary.by_group.at("Law").regions_tested == 2);
  CHECK(summary.by_group.at("History").regions_tested == 2);

  // Each cell must reproduce a direct analysis of that region alone, so
  // adding or removing other regions cannot disturb it.
  const Roster east_only = restrict(roster, [](const Person& p) {
    return p.region && *p.region == "East";
  });
  TestConfig east_cfg = cfg;
  east_cfg.seed = rng::mix(cfg.seed, rng::hash_label("East"));
  const auto direct = analyze_groups(east_only, east_cfg);
  REQUIRE(direct.size() == 2);
  CHECK(direct[0] == summary.cells[0].result);
  CHECK(direct[1] == summary.cells[1].result);

  // Sub-minimum cells are recorded as skipped, not silently dropped.
  std::vector<Person> small = persons;
  for (int i = 0; i < 10; ++i)
    small.push_back(testutil::person("S" + std::to_string(i), "Tiny",
                                     Gender::Unknown, "East"));
  const RegionSummary with_tiny =
      region_sweep(Roster::from_persons(small), cfg, 0.05);
  bool saw_tiny = false;
  for (const RegionCell& cell : with_tiny.cells)
    if (cell.result.group == "Tiny") {
      saw_tiny = true;
      CHECK(cell.result.skipped);
    }
  CHECK(saw_tiny);
  CHECK(with_tiny.by_group.at("Tiny").regions_tested == 0);
  CHECK(!with_tiny.by_group.at("Tiny").proportion_flagged.has_value());
}
