#include "namescan/synthlab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "namescan/csv.hpp"
#include "namescan/errors.hpp"
#include "namescan/rng.hpp"

namespace namescan {
namespace {

constexpr std::int64_t kMaxAlphabet = 308915776;  // 26^6

std::string encode_name(char prefix, std::int64_t v) {
  std::string s(7, 'A');
  s[0] = prefix;
  for (int pos = 6; pos >= 1; --pos) {
    s[static_cast<std::size_t>(pos)] = static_cast<char>('A' + v % 26);
    v /= 26;
  }
  return s;
}

void check_fraction(double v, const char* what) {
  if (!(v >= 0.0) || v > 1.0)
    throw InvalidConfig(std::string(what) + " outside [0, 1]");
}

// Cumulative Zipf weights are pure functions of (s, alphabet); cache them
// because sweeps regenerate rosters hundreds of times.
const std::vector<double>& zipf_cumulative(double s, std::int64_t alphabet) {
  static std::mutex mu;
  static std::map<std::pair<double, std::int64_t>,
                  std::unique_ptr<std::vector<double>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{s, alphabet}];
  if (!slot) {
    slot = std::make_unique<std::vector<double>>();
    slot->reserve(static_cast<std::size_t>(alphabet));
    double cum = 0.0;
    for (std::int64_t r = 1; r <= alphabet; ++r) {
      cum += std::pow(static_cast<double>(r), -s);
      slot->push_back(cum);
    }
  }
  return *slot;
}

// Uniform draw from a name law.
class LawSampler {
 public:
  explicit LawSampler(const NameLaw& law) : law_(&law) {
    if (const auto* z = std::get_if<ZipfLaw>(law_)) {
      if (!(z->s > 0.0)) throw InvalidConfig("zipf exponent must be > 0");
      if (z->alphabet < 1 || z->alphabet > kMaxAlphabet)
        throw InvalidConfig("zipf alphabet outside [1, 26^6]");
      cum_ = &zipf_cumulative(z->s, z->alphabet);
    } else if (const auto* u = std::get_if<UniformLaw>(law_)) {
      if (u->alphabet < 1 || u->alphabet > kMaxAlphabet)
        throw InvalidConfig("uniform alphabet outside [1, 26^6]");
    } else {
      const auto& e = std::get<EmpiricalLaw>(*law_);
      if (e.entries.empty()) throw EmptyInput("empirical law has no entries");
      own_cum_.reserve(e.entries.size());
      double cum = 0.0;
      for (const auto& [name, w] : e.entries) {
        if (name.empty()) throw InvalidConfig("empirical law entry without a name");
        if (!(w > 0.0))
          throw InvalidConfig("empirical weight for \"" + name +
                              "\" must be > 0");
        cum += w;
        own_cum_.push_back(cum);
      }
      cum_ = &own_cum_;
    }
  }

  std::string draw(rng::Xoshiro256ss& gen) const {
    if (const auto* u = std::get_if<UniformLaw>(law_)) {
      const auto rank = static_cast<std::int64_t>(
          gen.bounded(static_cast<std::uint64_t>(u->alphabet)));
      return synthetic_name(rank + 1);
    }
    const std::vector<double>& cum = *cum_;
    const double target = gen.next_double() * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    auto idx = static_cast<std::size_t>(it - cum.begin());
    if (idx >= cum.size()) idx = cum.size() - 1;
    if (std::holds_alternative<ZipfLaw>(*law_))
      return synthetic_name(static_cast<std::int64_t>(idx) + 1);
    return std::get<EmpiricalLaw>(*law_).entries[idx].first;
  }

 private:
  const NameLaw* law_;
  const std::vector<double>* cum_ = nullptr;
  std::vector<double> own_cum_;
};

struct ResolvedGroups {
  std::vector<std::string> labels;
  std::vector<std::int64_t> sizes;
};

ResolvedGroups resolve_groups(const SynthConfig& cfg) {
  if (cfg.n_people < 1) throw InvalidConfig("n_people must be >= 1");

  ResolvedGroups out;
  if (!cfg.group_labels.empty()) {
    if (cfg.n_groups != static_cast<std::int64_t>(cfg.group_labels.size()))
      throw InvalidConfig("n_groups does not match group_labels");
    out.labels = cfg.group_labels;
  } else {
    if (cfg.n_groups < 1) throw InvalidConfig("n_groups must be >= 1");
    int width = 2;
    for (std::int64_t v = cfg.n_groups; v >= 100; v /= 10) ++width;
    for (std::int64_t g = 1; g <= cfg.n_groups; ++g) {
      std::string num = std::to_string(g);
      out.labels.push_back(
          "G" + std::string(static_cast<std::size_t>(width) - num.size(), '0') +
          num);
    }
  }
  std::unordered_set<std::string> seen;
  for (const std::string& l : out.labels) {
    if (l.empty()) throw InvalidConfig("empty group label");
    if (!seen.insert(l).second)
      throw InvalidConfig("duplicate group label \"" + l + "\"");
  }

  const auto k = static_cast<std::int64_t>(out.labels.size());
  if (!cfg.group_sizes.empty()) {
    if (static_cast<std::int64_t>(cfg.group_sizes.size()) != k)
      throw InvalidConfig("group_sizes does not match the group count");
    std::int64_t sum = 0;
    for (std::int64_t s : cfg.group_sizes) {
      if (s < 1) throw InvalidConfig("group sizes must be >= 1");
      sum += s;
    }
    if (sum != cfg.n_people)
      throw InvalidConfig("group_sizes sum to " + std::to_string(sum) +
                          ", expected n_people = " +
                          std::to_string(cfg.n_people));
    out.sizes = cfg.group_sizes;
  } else {
    if (cfg.n_people < k)
      throw InvalidConfig("n_people smaller than the group count");
    const std::int64_t base = cfg.n_people / k;
    const std::int64_t rem = cfg.n_people % k;
    out.sizes.assign(static_cast<std::size_t>(k), base);
    for (std::int64_t g = 0; g < rem; ++g)
      ++out.sizes[static_cast<std::size_t>(g)];
  }
  return out;
}

void validate_config(const SynthConfig& cfg, const ResolvedGroups& groups) {
  std::unordered_set<std::string> labels(groups.labels.begin(),
                                         groups.labels.end());
  check_fraction(cfg.female_fraction, "female_fraction");
  for (const auto& [label, f] : cfg.group_female_fraction) {
    if (!labels.count(label))
      throw InvalidConfig("group_female_fraction for unknown group \"" +
                          label + "\"");
    check_fraction(f, "group_female_fraction");
  }
  std::unordered_set<std::string> region_labels;
  for (const auto& [label, w] : cfg.regions) {
    if (label.empty()) throw InvalidConfig("empty region label");
    if (!region_labels.insert(label).second)
      throw InvalidConfig("duplicate region label \"" + label + "\"");
    if (!(w > 0.0))
      throw InvalidConfig("region weight for \"" + label +
                          "\" must be > 0");
  }
  check_fraction(cfg.nepotism.base_rate, "nepotism_rate");
  for (const auto& [label, r] : cfg.nepotism.group_rate) {
    if (!labels.count(label))
      throw InvalidConfig("group_nepotism_rate for unknown group \"" + label +
                          "\"");
    check_fraction(r, "group_nepotism_rate");
  }
  for (const std::string& r : cfg.nepotism.regions)
    if (!region_labels.count(r))
      throw InvalidConfig("nepotism region \"" + r +
                          "\" is not a configured region");
  check_fraction(cfg.immigrant_rate, "immigrant_rate");
  for (const auto& [label, r] : cfg.group_immigrant_rate) {
    if (!labels.count(label))
      throw InvalidConfig("group_immigrant_rate for unknown group \"" + label +
                          "\"");
    check_fraction(r, "group_immigrant_rate");
  }
  if (cfg.immigrant_alphabet < 1 || cfg.immigrant_alphabet > kMaxAlphabet)
    throw InvalidConfig("immigrant_alphabet outside [1, 26^6]");
  if (cfg.common_list_size < 0)
    throw InvalidConfig("common_list_size must be >= 0");
}

}  // namespace

std::string synthetic_name(std::int64_t rank) {
  if (rank < 1 || rank > kMaxAlphabet)
    throw InvalidConfig("name rank outside [1, 26^6]");
  return encode_name('A', rank - 1);
}

std::string immigrant_name(std::int64_t index) {
  if (index < 0 || index >= kMaxAlphabet)
    throw InvalidConfig("reservoir index outside [0, 26^6)");
  return encode_name('Z', index);
}

Roster generate_base(const SynthConfig& cfg) {
  const ResolvedGroups groups = resolve_groups(cfg);
  validate_config(cfg, groups);
  const LawSampler law(cfg.name_law);

  rng::Xoshiro256ss name_rng(rng::mix(cfg.seed, rng::hash_label("names")));
  rng::Xoshiro256ss gender_rng(rng::mix(cfg.seed, rng::hash_label("gender")));
  rng::Xoshiro256ss region_rng(rng::mix(cfg.seed, rng::hash_label("region")));
  rng::Xoshiro256ss imm_rng(rng::mix(cfg.seed, rng::hash_label("immigrant")));

  std::vector<double> region_cum;
  region_cum.reserve(cfg.regions.size());
  double region_total = 0.0;
  for (const auto& [label, w] : cfg.regions) {
    region_total += w;
    region_cum.push_back(region_total);
  }

  std::vector<Person> persons;
  persons.reserve(static_cast<std::size_t>(cfg.n_people));
  for (std::size_t gi = 0; gi < groups.labels.size(); ++gi) {
    const std::string& label = groups.labels[gi];
    const double female = [&] {
      auto it = cfg.group_female_fraction.find(label);
      return it != cfg.group_female_fraction.end() ? it->second
                                                   : cfg.female_fraction;
    }();
    const double immigrant = [&] {
      auto it = cfg.group_immigrant_rate.find(label);
      return it != cfg.group_immigrant_rate.end() ? it->second
                                                  : cfg.immigrant_rate;
    }();
    for (std::int64_t j = 0; j < groups.sizes[gi]; ++j) {
      Person p;
      p.group = label;
      std::string name = law.draw(name_rng);
      // Reservoir draws happen for every person so that rosters differing
      // only in rates stay aligned draw-for-draw (common random numbers).
      const double u_imm = imm_rng.next_double();
      const auto r_imm = static_cast<std::int64_t>(
          imm_rng.bounded(static_cast<std::uint64_t>(cfg.immigrant_alphabet)));
      if (u_imm < immigrant) name = immigrant_name(r_imm);
      p.last_name_raw = name;
      p.last_name = std::move(name);
      p.gender =
          gender_rng.next_double() < female ? Gender::Female : Gender::Male;
      if (!cfg.regions.empty()) {
        const double target = region_rng.next_double() * region_total;
        auto it =
            std::upper_bound(region_cum.begin(), region_cum.end(), target);
        auto idx = static_cast<std::size_t>(it - region_cum.begin());
        if (idx >= cfg.regions.size()) idx = cfg.regions.size() - 1;
        p.region = cfg.regions[idx].first;
      }
      persons.push_back(std::move(p));
    }
  }
  return Roster::from_persons(std::move(persons), NameField::LastName);
}

Roster inject_nepotism(const Roster& base, const NepotismSpec& spec,
                       std::uint64_t seed) {
  check_fraction(spec.base_rate, "nepotism_rate");
  for (const auto& [label, r] : spec.group_rate)
    check_fraction(r, "group_nepotism_rate");
  bool roster_has_regions = false;
  for (const Person& p : base.persons())
    if (p.region) {
      roster_has_regions = true;
      break;
    }
  if (!spec.regions.empty() && !roster_has_regions)
    throw InvalidConfig("nepotism regions set but the roster has no regions");

  std::vector<Person> persons = base.persons();
  rng::Xoshiro256ss gen(seed);
  // Earlier male colleagues by (group, region) stratum.
  std::unordered_map<std::string, std::vector<std::size_t>> donors;
  for (std::size_t i = 0; i < persons.size(); ++i) {
    Person& p = persons[i];
    // Both draws happen unconditionally: the replacement set at a lower
    // rate is then a subset of the set at a higher rate for a fixed seed.
    const double u = gen.next_double();
    const std::uint64_t pick = gen.next();

    const double rate = [&] {
      auto it = spec.group_rate.find(p.group);
      return it != spec.group_rate.end() ? it->second : spec.base_rate;
    }();
    const bool in_scope =
        spec.regions.empty() || (p.region && spec.regions.count(*p.region));

    const std::string key = p.group + '\x1f' + p.region.value_or("");
    if (rate > 0.0 && in_scope && u < rate) {
      const auto it = donors.find(key);
      if (it != donors.end() && !it->second.empty()) {
        const std::vector<std::size_t>& pool = it->second;
        const Person& donor = persons[pool[static_cast<std::size_t>(
            pick % pool.size())]];
        p.last_name = donor.last_name;
        p.last_name_raw = donor.last_name_raw;
        p.gender = Gender::Male;  // hire from the male line
      }
    }
    if (p.gender == Gender::Male) donors[key].push_back(i);
  }
  return Roster::from_persons(std::move(persons), base.field_selector());
}

Roster generate(const SynthConfig& cfg) {
  Roster base = generate_base(cfg);
  bool any = cfg.nepotism.base_rate > 0.0;
  for (const auto& [label, r] : cfg.nepotism.group_rate)
    if (r > 0.0) any = true;
  if (!any) return base;
  return inject_nepotism(base, cfg.nepotism,
                         rng::mix(cfg.seed, rng::hash_label("nepotism")));
}

CommonNameList common_names(const SynthConfig& cfg) {
  std::set<std::string> names;
  if (cfg.common_list_size < 0)
    throw InvalidConfig("common_list_size must be >= 0");
  if (const auto* e = std::get_if<EmpiricalLaw>(&cfg.name_law)) {
    std::vector<std::pair<std::string, double>> entries = e->entries;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    const auto k = std::min<std::size_t>(
        entries.size(), static_cast<std::size_t>(cfg.common_list_size));
    for (std::size_t i = 0; i < k; ++i) names.insert(entries[i].first);
  } else {
    const std::int64_t alphabet =
        std::holds_alternative<ZipfLaw>(cfg.name_law)
            ? std::get<ZipfLaw>(cfg.name_law).alphabet
            : std::get<UniformLaw>(cfg.name_law).alphabet;
    const std::int64_t k = std::min(cfg.common_list_size, alphabet);
    for (std::int64_t r = 1; r <= k; ++r) names.insert(synthetic_name(r));
  }
  return CommonNameList(std::move(names));
}

std::vector<PowerPoint> power_curve(const SynthConfig& cfg,
                                    std::span<const double> rho_grid,
                                    int n_trials, const TestConfig& test_cfg,
                                    double alpha,
                                    const std::string& target_group) {
  if (n_trials < 1) throw InvalidConfig("n_trials must be >= 1");
  if (!(alpha > 0.0) || alpha > 1.0) throw InvalidConfig("alpha outside (0, 1]");
  if (rho_grid.empty()) throw EmptyInput("rho grid is empty");
  for (double rho : rho_grid) check_fraction(rho, "rho");

  const ResolvedGroups groups = resolve_groups(cfg);
  auto pos = std::find(groups.labels.begin(), groups.labels.end(), target_group);
  if (pos == groups.labels.end())
    throw InvalidConfig("target group \"" + target_group +
                        "\" is not a configured group");
  const std::int64_t target_size =
      groups.sizes[static_cast<std::size_t>(pos - groups.labels.begin())];
  if (target_size < test_cfg.min_group_size)
    throw InvalidConfig("target group smaller than min_group_size");

  std::vector<PowerPoint> points;
  points.reserve(rho_grid.size());
  for (double rho : rho_grid)
    points.push_back(PowerPoint{rho, n_trials, 0, 0.0, 0.0});

  for (int t = 0; t < n_trials; ++t) {
    SynthConfig trial_cfg = cfg;
    trial_cfg.seed = rng::mix(cfg.seed, static_cast<std::uint64_t>(t));
    trial_cfg.nepotism = NepotismSpec{};
    const Roster base = generate_base(trial_cfg);
    const std::uint64_t inject_seed =
        rng::mix(trial_cfg.seed, rng::hash_label("nepotism"));
    const std::uint64_t mc_seed = group_stream_seed(
        rng::mix(test_cfg.seed, static_cast<std::uint64_t>(t)), target_group);

    for (std::size_t ri = 0; ri < rho_grid.size(); ++ri) {
      const double rho = rho_grid[ri];
      NepotismSpec spec;
      spec.group_rate[target_group] = rho;
      spec.regions = cfg.nepotism.regions;
      const Roster roster =
          rho > 0.0 ? inject_nepotism(base, spec, inject_seed) : base;

      const NamePool pool(roster.names());
      const std::vector<std::string> names = roster.group_names(target_group);
      TestConfig mc_cfg = test_cfg;
      mc_cfg.seed = mc_seed;
      const ScarcityResult res =
          mc_pvalue(pool, static_cast<std::int64_t>(names.size()),
                    static_cast<std::int64_t>(distinct_count(names)), mc_cfg);
      if (res.p_hat.value() <= alpha) ++points[ri].n_detected;
    }
  }

  for (PowerPoint& pt : points) {
    pt.detection_rate =
        static_cast<double>(pt.n_detected) / static_cast<double>(pt.n_trials);
    pt.std_error = std::sqrt(pt.detection_rate * (1.0 - pt.detection_rate) /
                             static_cast<double>(pt.n_trials));
  }
  return points;
}

namespace {

std::string trim_ws(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = trim_ws(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

std::int64_t parse_i64(const std::string& v, std::size_t line) {
  try {
    std::size_t pos = 0;
    const std::int64_t out = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw InvalidConfig("line " + std::to_string(line) +
                        ": expected an integer, got \"" + v + "\"");
  }
}

std::uint64_t parse_u64(const std::string& v, std::size_t line) {
  try {
    std::size_t pos = 0;
    const std::uint64_t out = std::stoull(v, &pos);
    if (pos != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw InvalidConfig("line " + std::to_string(line) +
                        ": expected an unsigned integer, got \"" + v + "\"");
  }
}

double parse_f64(const std::string& v, std::size_t line) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw InvalidConfig("line " + std::to_string(line) +
                        ": expected a number, got \"" + v + "\"");
  }
}

// "label:value" pairs, comma separated.
std::vector<std::pair<std::string, double>> parse_pairs(const std::string& v,
                                                        std::size_t line) {
  std::vector<std::pair<std::string, double>> out;
  for (const std::string& item : split_list(v)) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0)
      throw InvalidConfig("line " + std::to_string(line) +
                          ": expected label:value, got \"" + item + "\"");
    out.emplace_back(trim_ws(item.substr(0, colon)),
                     parse_f64(trim_ws(item.substr(colon + 1)), line));
  }
  return out;
}

EmpiricalLaw load_empirical_law(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open empirical law file \"" + path + "\"");
  CsvReader reader(in);
  EmpiricalLaw law;
  while (auto row = reader.next_row()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != 2)
      throw SchemaError("empirical law rows need 2 columns (name,weight), row " +
                        std::to_string(reader.row_number()));
    double w;
    try {
      std::size_t pos = 0;
      w = std::stod((*row)[1], &pos);
      if (pos != (*row)[1].size()) throw std::invalid_argument((*row)[1]);
    } catch (const std::exception&) {
      throw SchemaError("bad weight \"" + (*row)[1] + "\" at row " +
                        std::to_string(reader.row_number()));
    }
    law.entries.emplace_back(normalize_name((*row)[0]), w);
  }
  return law;
}

}  // namespace

SynthConfig load_synth_config(std::istream& in) {
  SynthConfig cfg;
  bool n_groups_set = false;
  std::string law_name = "zipf";
  double zipf_s = 1.0;
  std::int64_t alphabet = -1;
  std::string empirical_file;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    line = trim_ws(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("line " + std::to_string(lineno) +
                          ": expected key = value");
    const std::string key = trim_ws(line.substr(0, eq));
    const std::string value = trim_ws(line.substr(eq + 1));

    if (key == "n_people") {
      cfg.n_people = parse_i64(value, lineno);
    } else if (key == "n_groups") {
      cfg.n_groups = parse_i64(value, lineno);
      n_groups_set = true;
    } else if (key == "group_labels") {
      cfg.group_labels = split_list(value);
    } else if (key == "group_sizes") {
      cfg.group_sizes.clear();
      for (const std::string& item : split_list(value))
        cfg.group_sizes.push_back(parse_i64(item, lineno));
    } else if (key == "regions") {
      cfg.regions = parse_pairs(value, lineno);
    } else if (key == "female_fraction") {
      cfg.female_fraction = parse_f64(value, lineno);
    } else if (key == "group_female_fraction") {
      for (auto& [label, v] : parse_pairs(value, lineno))
        cfg.group_female_fraction[label] = v;
    } else if (key == "law") {
      law_name = value;
    } else if (key == "zipf_s") {
      zipf_s = parse_f64(value, lineno);
    } else if (key == "alphabet") {
      alphabet = parse_i64(value, lineno);
    } else if (key == "empirical_file") {
      empirical_file = value;
    } else if (key == "nepotism_rate") {
      cfg.nepotism.base_rate = parse_f64(value, lineno);
    } else if (key == "group_nepotism_rate") {
      for (auto& [label, v] : parse_pairs(value, lineno))
        cfg.nepotism.group_rate[label] = v;
    } else if (key == "nepotism_regions") {
      for (const std::string& item : split_list(value))
        cfg.nepotism.regions.insert(item);
    } else if (key == "immigrant_rate") {
      cfg.immigrant_rate = parse_f64(value, lineno);
    } else if (key == "group_immigrant_rate") {
      for (auto& [label, v] : parse_pairs(value, lineno))
        cfg.group_immigrant_rate[label] = v;
    } else if (key == "immigrant_alphabet") {
      cfg.immigrant_alphabet = parse_i64(value, lineno);
    } else if (key == "common_list_size") {
      cfg.common_list_size = parse_i64(value, lineno);
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, lineno);
    } else {
      throw InvalidConfig("line " + std::to_string(lineno) +
                          ": unknown key \"" + key + "\"");
    }
  }

  if (!cfg.group_labels.empty() && !n_groups_set)
    cfg.n_groups = static_cast<std::int64_t>(cfg.group_labels.size());

  if (law_name == "zipf") {
    cfg.name_law = ZipfLaw{zipf_s, alphabet < 0 ? 2'000'000 : alphabet};
  } else if (law_name == "uniform") {
    cfg.name_law = UniformLaw{alphabet < 0 ? 10'000 : alphabet};
  } else if (law_name == "empirical") {
    if (empirical_file.empty())
      throw InvalidConfig("law = empirical requires empirical_file");
    cfg.name_law = load_empirical_law(empirical_file);
  } else {
    throw InvalidConfig("unknown law \"" + law_name +
                        "\" (expected zipf, uniform or empirical)");
  }
  return cfg;
}

}  // namespace namescan
