// lexigauge command-line front end.
//
//   lexigauge compare --config run.json [overrides]
//   lexigauge metrics corpus.csv
//   lexigauge semnet corpus.csv
//   lexigauge stats metrics_a.csv metrics_b.csv
//
// Exit status: 0 success, 1 input or configuration error, 2 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexigauge/lexigauge.hpp"

namespace {

namespace lg = lexigauge;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct ColumnFlags {
  std::string title = "Title";
  std::string id;
  std::string abstract = "Abstract";

  void add(CLI::App& cmd) {
    cmd.add_option("--title-column", title, "CSV header of the title column")->capture_default_str();
    cmd.add_option("--id-column", id, "CSV header of the document id column (default: row number)");
    cmd.add_option("--abstract-column", abstract, "CSV header of the abstract column")->capture_default_str();
  }

  lg::ingest::ColumnMap map() const {
    auto m = lg::ingest::ColumnMap::defaults();
    m.title = {title, true};
    if (!id.empty()) m.id = lg::ingest::Column{id, true};
    if (abstract != "Abstract") m.abstract = lg::ingest::Column{abstract, true};
    return m;
  }
};

lg::ingest::Corpus load_corpus(const std::string& path, const lg::ingest::ColumnMap& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lg::ConfigError("cannot open corpus " + path);
  try {
    return lg::ingest::parse_bibliographic_csv(in, columns, path);
  } catch (const lg::ParseError& e) {
    throw lg::ParseError(path + ": " + e.what(), e.row());
  }
}

std::vector<lg::metrics::LexicalRecord> load_metric_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lg::ConfigError("cannot open metric CSV " + path);
  try {
    return lg::metrics::read_metric_csv(in);
  } catch (const lg::ParseError& e) {
    throw lg::ParseError(path + ": " + e.what(), e.row());
  }
}

std::set<std::string> split_formats(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexical structure comparison of two bibliographic corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lg::pipeline::kToolVersion));

  // compare
  auto* compare = app.add_subcommand("compare", "Run the full two-corpus comparison and write the report bundle");
  std::string config_path, corpus_a, corpus_b, label_a, label_b, stopwords, out_dir, formats;
  std::optional<std::size_t> sample_size;
  std::optional<std::uint64_t> seed;
  compare->add_option("--config", config_path, "JSON run configuration");
  compare->add_option("--corpus-a", corpus_a, "first corpus CSV");
  compare->add_option("--label-a", label_a, "first corpus label");
  compare->add_option("--corpus-b", corpus_b, "second corpus CSV");
  compare->add_option("--label-b", label_b, "second corpus label");
  compare->add_option("--sample-size", sample_size, "documents sampled from each corpus");
  compare->add_option("--seed", seed, "sampling seed");
  compare->add_option("--stopwords", stopwords, "stopword list, one word per line");
  compare->add_option("--out", out_dir, "output directory");
  compare->add_option("--formats", formats, "comma-separated subset of json,csv,svg,gexf,graphml");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Write the per-document metric CSV to stdout");
  std::string metrics_csv;
  ColumnFlags metrics_cols;
  metrics_cmd->add_option("csv", metrics_csv, "bibliographic CSV")->required();
  metrics_cols.add(*metrics_cmd);

  // semnet
  auto* semnet_cmd = app.add_subcommand("semnet", "Write the title co-word network to stdout");
  std::string semnet_csv, semnet_format = "gexf", semnet_stopwords;
  std::size_t min_freq = 2;
  std::uint64_t louvain_seed = 1;
  double resolution = 1.0;
  bool weighted = false;
  ColumnFlags semnet_cols;
  semnet_cmd->add_option("csv", semnet_csv, "bibliographic CSV")->required();
  semnet_cmd->add_option("--format", semnet_format, "gexf or graphml")
      ->check(CLI::IsMember({"gexf", "graphml"}))
      ->capture_default_str();
  semnet_cmd->add_option("--stopwords", semnet_stopwords, "stopword list, one word per line");
  semnet_cmd->add_option("--min-frequency", min_freq, "minimum number of titles per keyword")->capture_default_str();
  semnet_cmd->add_option("--louvain-seed", louvain_seed, "community detection seed")->capture_default_str();
  semnet_cmd->add_option("--resolution", resolution, "modularity resolution")->capture_default_str();
  semnet_cmd->add_flag("--weighted", weighted, "weighted betweenness (edge length 1/weight)");
  semnet_cols.add(*semnet_cmd);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Rank-sum tests between two metric CSVs, as JSON on stdout");
  std::string stats_a, stats_b;
  stats_cmd->add_option("first", stats_a, "metric CSV of the first corpus")->required();
  stats_cmd->add_option("second", stats_b, "metric CSV of the second corpus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compare) {
      lg::pipeline::RunConfig cfg;
      if (!config_path.empty()) {
        cfg = lg::pipeline::RunConfig::load(config_path);
      } else if (corpus_a.empty() || corpus_b.empty()) {
        throw lg::ConfigError("compare needs --config or both --corpus-a and --corpus-b");
      }
      if (!corpus_a.empty()) cfg.corpora[0].csv_path = corpus_a;
      if (!corpus_b.empty()) cfg.corpora[1].csv_path = corpus_b;
      if (!label_a.empty()) cfg.corpora[0].label = label_a;
      if (!label_b.empty()) cfg.corpora[1].label = label_b;
      if (cfg.corpora[0].label.empty()) cfg.corpora[0].label = fs::path(cfg.corpora[0].csv_path).stem().string();
      if (cfg.corpora[1].label.empty()) cfg.corpora[1].label = fs::path(cfg.corpora[1].csv_path).stem().string();
      for (auto& c : cfg.corpora) {
        if (sample_size) c.sample_size = sample_size;
        if (seed) c.seed = seed;
      }
      if (!stopwords.empty()) cfg.analysis.stopwords_path = fs::path(stopwords);
      if (!out_dir.empty()) cfg.output.directory = out_dir;
      if (!formats.empty()) cfg.output.formats = split_formats(formats);

      const auto report = lg::pipeline::run_compare(cfg);
      std::cout << "wrote report for '" << report.corpora[0].label << "' vs '" << report.corpora[1].label
                << "' to " << cfg.output.directory.string() << "\n";
      for (auto name : lg::pipeline::kMetricNames) {
        const auto& c = report.comparisons.find(name)->second;
        if (c.result) {
          std::cout << fmt::format("  {:<13} p = {:.2e}  r = {:.3f}\n", name, c.result->p_value,
                                   c.result->effect_size_r);
        } else {
          std::cout << fmt::format("  {:<13} unavailable: {}\n", name, c.note);
        }
      }
    } else if (*metrics_cmd) {
      const auto corpus = load_corpus(metrics_csv, metrics_cols.map());
      std::vector<lg::metrics::LexicalRecord> rows;
      for (const auto& r : corpus.records) {
        try {
          rows.push_back(lg::metrics::measure(r.id, r.title, r.abstract));
        } catch (const lg::Error& e) {
          throw lg::DomainError(metrics_csv + ", document '" + r.id + "': " + e.what());
        }
      }
      lg::metrics::write_metric_csv(std::cout, rows);
    } else if (*semnet_cmd) {
      const auto corpus = load_corpus(semnet_csv, semnet_cols.map());
      std::vector<std::string> titles;
      for (const auto& r : corpus.records) titles.push_back(r.title);
      lg::pipeline::AnalysisConfig analysis;
      analysis.graph.min_title_frequency = min_freq;
      analysis.graph.weighted_betweenness = weighted;
      analysis.louvain_seed = louvain_seed;
      analysis.resolution = resolution;
      const auto sw = lg::pipeline::resolve_stopwords(
          semnet_stopwords.empty() ? std::nullopt : std::optional<fs::path>(semnet_stopwords));
      const auto net = lg::pipeline::analyze_titles(titles, sw, analysis);
      lg::semnet::export_graph(std::cout, net.graph, net.partition, net.scores,
                               semnet_format == "graphml" ? lg::semnet::GraphFormat::kGraphMl
                                                          : lg::semnet::GraphFormat::kGexf);
    } else if (*stats_cmd) {
      const auto a = load_metric_csv(stats_a);
      const auto b = load_metric_csv(stats_b);
      lg::pipeline::ojson out;
      for (auto name : lg::pipeline::kMetricNames) {
        const auto x = lg::pipeline::detail::metric_values(a, name);
        const auto y = lg::pipeline::detail::metric_values(b, name);
        try {
          const auto r = lg::stats::wilcoxon_rank_sum(x, y);
          out[std::string(name)] = {{"u", r.u_statistic},
                                    {"z", r.z_score},
                                    {"p_value", r.p_value},
                                    {"p_display", lg::pipeline::detail::p_display(r.p_value)},
                                    {"effect_size_r", r.effect_size_r},
                                    {"n_x", r.n_x},
                                    {"n_y", r.n_y}};
        } catch (const lg::DomainError& e) {
          out[std::string(name)] = {{"unavailable", e.what()}};
        }
      }
      std::cout << out.dump(2) << "\n";
    }
  } catch (const lg::Error& e) {
    std::cerr << "lexigauge: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "lexigauge: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
