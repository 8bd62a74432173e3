#include <iostream>
#include <memory>

#include <json.hpp>

#include "commands.hpp"
#include "namescan/csv.hpp"
#include "namescan/multiplicity.hpp"
#include "namescan/report.hpp"

namespace namescan::cli {
namespace {

struct QValuesOpts {
  std::string input;
  std::string out_dir = ".";
  std::string p_column = "p";
  std::string label_column = "group";
  std::string delimiter = ",";
  std::int64_t bootstrap = 100;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  double pi0_override = -1.0;
  std::vector<double> lambda_grid;
};

void run_qvalues(const QValuesOpts& opts) {
  if (opts.bootstrap < 1) throw InvalidConfig("--bootstrap must be >= 1");
  if (!(opts.alpha > 0.0) || opts.alpha > 1.0)
    throw InvalidConfig("--alpha outside (0, 1]");
  if (opts.delimiter.size() != 1)
    throw InvalidConfig("--delimiter must be a single character");
  const std::filesystem::path out_dir = prepare_out_dir(opts.out_dir);

  std::ifstream in = open_input(opts.input);
  CsvReader reader(in, opts.delimiter[0]);
  const auto header = reader.next_row();
  if (!header) throw SchemaError("empty input: no header row");
  std::optional<std::size_t> p_col, label_col;
  for (std::size_t i = 0; i < header->size(); ++i) {
    if ((*header)[i] == opts.p_column) p_col = i;
    if ((*header)[i] == opts.label_column) label_col = i;
  }
  if (!p_col)
    throw SchemaError("missing required column \"" + opts.p_column + "\"");

  std::vector<std::string> labels;
  std::vector<double> pvals;
  while (auto row = reader.next_row()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;
    if (row->size() != header->size())
      throw CsvParseError(reader.row_number(),
                          "expected " + std::to_string(header->size()) +
                              " fields, got " + std::to_string(row->size()));
    const std::string& raw = (*row)[*p_col];
    try {
      std::size_t pos = 0;
      pvals.push_back(std::stod(raw, &pos));
      if (pos != raw.size()) throw std::invalid_argument(raw);
    } catch (const std::exception&) {
      throw CsvParseError(reader.row_number(),
                          "bad p-value \"" + raw + "\"");
    }
    labels.push_back(label_col ? (*row)[*label_col] : "");
  }

  QValueOptions qopts;
  qopts.n_bootstrap = static_cast<int>(opts.bootstrap);
  qopts.seed = opts.seed;
  qopts.lambda_grid = opts.lambda_grid;
  if (opts.pi0_override >= 0.0) qopts.pi0_override = opts.pi0_override;

  const QValueReport report = qvalues(labels, pvals, qopts);
  write_file(out_dir / "qvalues.csv", qvalues_csv(report));

  nlohmann::ordered_json j;
  j["n_pvalues"] = report.entries.size();
  j["pi0_hat"] = report.pi0_hat;
  j["lambda_star"] = report.lambda_star;
  j["n_bootstrap"] = report.n_bootstrap;
  j["lambda_grid"] = report.lambda_grid;
  j["pi0_by_lambda"] = report.pi0_by_lambda;
  j["alpha"] = opts.alpha;
  std::int64_t significant = 0;
  for (const QValueEntry& e : report.entries)
    if (e.p <= opts.alpha && e.q <= opts.alpha) ++significant;
  j["highly_significant"] = significant;
  write_file(out_dir / "qvalues.json", j.dump(2) + "\n");

  std::cout << "pi0_hat=" << format_full(report.pi0_hat)
            << " lambda_star=" << format_full(report.lambda_star)
            << " highly_significant=" << significant << "/"
            << report.entries.size() << "\n";
}

}  // namespace

void register_qvalues(CLI::App& app) {
  auto opts = std::make_shared<QValuesOpts>();
  CLI::App* cmd = app.add_subcommand(
      "qvalues", "False-discovery-rate q-values for a table of p-values");
  cmd->add_option("-i,--input", opts->input, "CSV file with a p-value column")
      ->required();
  cmd->add_option("-o,--out-dir", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_option("--p-column", opts->p_column, "P-value column name")
      ->capture_default_str();
  cmd->add_option("--label-column", opts->label_column,
                  "Label column name (optional in the input)")
      ->capture_default_str();
  cmd->add_option("--delimiter", opts->delimiter, "Field delimiter")
      ->capture_default_str();
  cmd->add_option("--bootstrap", opts->bootstrap,
                  "Bootstrap resamples for the pi0 tuning parameter")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Bootstrap seed")
      ->capture_default_str();
  cmd->add_option("--alpha", opts->alpha,
                  "Significance level for the summary count")
      ->capture_default_str();
  cmd->add_option("--pi0", opts->pi0_override,
                  "Force the null proportion (1.0 = Benjamini-Hochberg)");
  cmd->add_option("--lambda-grid", opts->lambda_grid,
                  "Custom pi0 tuning grid (comma separated)")
      ->delimiter(',');
  cmd->callback([opts] { run_qvalues(*opts); });
}

}  // namespace namescan::cli
