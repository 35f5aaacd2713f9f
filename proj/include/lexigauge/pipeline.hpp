#ifndef LEXIGAUGE_PIPELINE_HPP
#define LEXIGAUGE_PIPELINE_HPP

// End-to-end two-corpus comparison: ingest, optional sampling, per-document
// metrics, descriptives and tests per metric, title networks, and the report
// bundle (JSON report, metric CSVs, density CSVs and SVGs, graph files).

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "lexigauge/error.hpp"
#include "lexigauge/ingest.hpp"
#include "lexigauge/metrics.hpp"
#include "lexigauge/semnet.hpp"
#include "lexigauge/stats.hpp"
#include "lexigauge/svg.hpp"
#include "lexigauge/textproc.hpp"

namespace lexigauge::pipeline {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "lexigauge";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kStopwordsEnv = "LEXIGAUGE_STOPWORDS";

inline constexpr std::array<std::string_view, 3> kMetricNames = {"title_length", "fkgl", "yules_k"};
inline constexpr std::array<std::string_view, 5> kFormats = {"json", "csv", "svg", "gexf", "graphml"};

struct CorpusConfig {
  fs::path csv_path;
  std::string label;
  ingest::ColumnMap columns = ingest::ColumnMap::defaults();
  std::optional<std::size_t> sample_size;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> distinct_author_total;
};

struct AnalysisConfig {
  semnet::GraphPolicy graph;
  std::optional<fs::path> stopwords_path;
  std::optional<fs::path> token_policy_path;
  std::optional<fs::path> abbreviations_path;
  std::size_t kde_grid_points = 512;
  std::uint64_t louvain_seed = 1;
  double resolution = 1.0;
  std::size_t top_clusters = 3;
};

struct OutputConfig {
  fs::path directory = "lexigauge-out";
  std::set<std::string> formats = {"json", "csv", "svg", "gexf"};
};

struct RunConfig {
  std::array<CorpusConfig, 2> corpora;
  AnalysisConfig analysis;
  OutputConfig output;

  void validate() const {
    for (const auto& c : corpora) {
      if (c.csv_path.empty()) throw ConfigError("corpus '" + c.label + "' has no CSV path");
      if (c.label.empty()) throw ConfigError("every corpus needs a label");
      if (c.sample_size && !c.seed) {
        throw ConfigError("corpus '" + c.label + "' sets sample_size without a seed");
      }
    }
    if (corpora[0].label == corpora[1].label) throw ConfigError("corpus labels must differ");
    if (analysis.kde_grid_points < stats::kMinGridPoints) throw ConfigError("kde grid needs at least 16 points");
    if (!(analysis.resolution > 0.0)) throw ConfigError("resolution must be positive");
    for (const auto& f : output.formats) {
      if (std::find(kFormats.begin(), kFormats.end(), f) == kFormats.end()) {
        throw ConfigError("unknown output format '" + f + "'");
      }
    }
  }

  /// Parses the JSON manifest. Relative paths resolve against `base_dir`.
  static RunConfig from_json(const nlohmann::json& j, const fs::path& base_dir = {}) {
    auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base_dir / p; };
    RunConfig cfg;
    try {
      const auto& corpora = j.at("corpora");
      if (!corpora.is_array() || corpora.size() != 2) {
        throw ConfigError("config must list exactly two corpora");
      }
      for (std::size_t i = 0; i < 2; ++i) {
        const auto& c = corpora[i];
        auto& out = cfg.corpora[i];
        out.csv_path = resolve(c.at("csv").get<std::string>());
        out.label = c.at("label").get<std::string>();
        if (c.contains("sample_size")) out.sample_size = c["sample_size"].get<std::size_t>();
        if (c.contains("seed")) out.seed = c["seed"].get<std::uint64_t>();
        if (c.contains("distinct_author_total")) out.distinct_author_total = c["distinct_author_total"].get<std::int64_t>();
        if (c.contains("columns")) {
          for (const auto& [field, name] : c["columns"].items()) {
            const ingest::Column col{name.get<std::string>(), true};
            if (field == "title") {
              out.columns.title = col;
            } else if (field == "id") {
              out.columns.id = col;
            } else if (field == "abstract") {
              out.columns.abstract = col;
            } else if (field == "year") {
              out.columns.year = col;
            } else if (field == "venue") {
              out.columns.venue = col;
            } else if (field == "citations") {
              out.columns.citations = col;
            } else if (field == "author_count") {
              out.columns.author_count = col;
            } else {
              throw ConfigError("unknown column field '" + field + "'");
            }
          }
        }
      }
      if (j.contains("analysis")) {
        const auto& a = j["analysis"];
        auto& out = cfg.analysis;
        if (a.contains("min_title_frequency")) out.graph.min_title_frequency = a["min_title_frequency"].get<std::size_t>();
        if (a.contains("weighted_betweenness")) out.graph.weighted_betweenness = a["weighted_betweenness"].get<bool>();
        if (a.contains("stopwords")) out.stopwords_path = resolve(a["stopwords"].get<std::string>());
        if (a.contains("token_policy")) out.token_policy_path = resolve(a["token_policy"].get<std::string>());
        if (a.contains("abbreviations")) out.abbreviations_path = resolve(a["abbreviations"].get<std::string>());
        if (a.contains("kde_grid_points")) out.kde_grid_points = a["kde_grid_points"].get<std::size_t>();
        if (a.contains("louvain_seed")) out.louvain_seed = a["louvain_seed"].get<std::uint64_t>();
        if (a.contains("resolution")) out.resolution = a["resolution"].get<double>();
        if (a.contains("top_clusters")) out.top_clusters = a["top_clusters"].get<std::size_t>();
      }
      if (j.contains("output")) {
        const auto& o = j["output"];
        if (o.contains("directory")) cfg.output.directory = resolve(o["directory"].get<std::string>());
        if (o.contains("formats")) cfg.output.formats = o["formats"].get<std::set<std::string>>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return cfg;
  }

  static RunConfig load(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return from_json(j, path.parent_path());
  }
};

struct MetricBlock {
  std::size_t n = 0;
  std::optional<stats::Descriptives> descriptives;
  std::optional<stats::NormalityResult> normality;
  std::string normality_note;
  std::optional<stats::DensitySeries> density;
  std::string density_note;
};

struct NetworkReport {
  semnet::CoWordGraph graph;
  semnet::CommunityPartition partition;
  semnet::CentralityScores scores;
  semnet::ClusterSummary summary;
};

struct CorpusReport {
  std::string label;
  std::string slug;
  std::size_t documents_read = 0;
  std::size_t skipped_empty_title = 0;
  std::optional<std::size_t> sample_size;
  std::optional<std::uint64_t> sample_seed;
  ingest::BiblioSummary bibliometrics;
  std::size_t excluded_without_abstract = 0;
  std::vector<metrics::LexicalRecord> records;
  std::map<std::string, MetricBlock, std::less<>> metrics;
  std::optional<NetworkReport> network;
  std::string network_note;
};

struct Comparison {
  std::optional<stats::RankSumResult> result;
  std::string note;
};

struct ComparisonReport {
  std::array<CorpusReport, 2> corpora;
  std::map<std::string, Comparison, std::less<>> comparisons;
  std::uint64_t louvain_seed = 1;
  double resolution = 1.0;
  std::size_t min_title_frequency = 2;
  bool weighted_betweenness = false;
  std::string generated_at;

  ojson to_json(bool include_timestamp = true) const;
};

namespace detail {

inline std::vector<double> metric_values(const std::vector<metrics::LexicalRecord>& rows, std::string_view metric) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) {
    if (metric == "title_length") {
      v.push_back(static_cast<double>(r.title_length_chars));
    } else if (metric == "fkgl" && r.fkgl) {
      v.push_back(*r.fkgl);
    } else if (metric == "yules_k" && r.yules_k) {
      v.push_back(*r.yules_k);
    }
  }
  return v;
}

inline std::string slugify(std::string_view label) {
  std::string s;
  for (char c : label) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      s.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!s.empty() && s.back() != '-') {
      s.push_back('-');
    }
  }
  while (!s.empty() && s.back() == '-') s.pop_back();
  return s.empty() ? "corpus" : s;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::ifstream open_input(const fs::path& p, std::string_view what) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + std::string(what) + " " + p.string());
  return in;
}

inline ojson to_json(const stats::Descriptives& d) {
  return {{"min", d.min}, {"q1", d.q1}, {"median", d.median}, {"mean", d.mean}, {"q3", d.q3}, {"max", d.max}};
}

inline std::string p_display(double p) { return fmt::format("{:.2e}", p); }

}  // namespace detail

/// Loads the stopword list: explicit path, then $LEXIGAUGE_STOPWORDS, then
/// the bundled English list.
inline semnet::Stopwords resolve_stopwords(const std::optional<fs::path>& path) {
  std::optional<fs::path> p = path;
  if (!p) {
    if (const char* env = std::getenv(kStopwordsEnv.data()); env && *env) p = fs::path(env);
  }
  if (!p) return semnet::Stopwords::english();
  auto in = detail::open_input(*p, "stopword list");
  return semnet::Stopwords::load(in);
}

inline MetricBlock summarize_metric(const std::vector<double>& values, std::size_t grid_points) {
  MetricBlock b;
  b.n = values.size();
  if (values.empty()) {
    b.normality_note = "no values";
    b.density_note = "no values";
    return b;
  }
  b.descriptives = stats::descriptives(values);
  try {
    b.normality = stats::shapiro_wilk(values);
  } catch (const DomainError& e) {
    b.normality_note = e.what();
  }
  try {
    b.density = stats::kde(values, grid_points);
  } catch (const DomainError& e) {
    b.density_note = e.what();
  }
  return b;
}

inline NetworkReport analyze_titles(const std::vector<std::string>& titles, const semnet::Stopwords& stopwords,
                                    const AnalysisConfig& cfg) {
  NetworkReport n;
  n.graph = semnet::build_coword_graph(titles, stopwords, cfg.graph);
  if (n.graph.node_count() == 0) throw DomainError("no title keyword reaches the minimum title frequency");
  n.partition = semnet::louvain_communities(n.graph, cfg.resolution, cfg.louvain_seed);
  n.scores = semnet::betweenness(n.graph, cfg.graph.weighted_betweenness);
  n.summary = semnet::cluster_summary(n.graph, n.partition, n.scores, cfg.top_clusters);
  return n;
}

/// Runs every computation of a comparison without touching the filesystem
/// beyond reading inputs.
inline ComparisonReport analyze(const RunConfig& cfg) {
  cfg.validate();
  const auto stopwords = resolve_stopwords(cfg.analysis.stopwords_path);
  metrics::MetricPolicy policy;
  if (cfg.analysis.token_policy_path) {
    auto in = detail::open_input(*cfg.analysis.token_policy_path, "token policy");
    policy.tokens = textproc::TokenPolicy::load(in);
  }
  if (cfg.analysis.abbreviations_path) {
    auto in = detail::open_input(*cfg.analysis.abbreviations_path, "abbreviation list");
    policy.abbreviations = textproc::load_abbreviations(in);
  }
  auto analysis = cfg.analysis;
  analysis.graph.tokens = policy.tokens;

  ComparisonReport report;
  report.louvain_seed = analysis.louvain_seed;
  report.resolution = analysis.resolution;
  report.min_title_frequency = analysis.graph.min_title_frequency;
  report.weighted_betweenness = analysis.graph.weighted_betweenness;

  for (std::size_t i = 0; i < 2; ++i) {
    const auto& cc = cfg.corpora[i];
    auto& cr = report.corpora[i];
    cr.label = cc.label;
    cr.slug = detail::slugify(cc.label);
    if (i == 1 && cr.slug == report.corpora[0].slug) cr.slug += "-2";

    auto in = detail::open_input(cc.csv_path, "corpus");
    ingest::Corpus corpus;
    try {
      corpus = ingest::parse_bibliographic_csv(in, cc.columns, cc.label);
    } catch (const ParseError& e) {
      throw ParseError("corpus '" + cc.label + "' (" + cc.csv_path.string() + "): " + e.what(), e.row());
    } catch (const ConfigError& e) {
      throw ConfigError("corpus '" + cc.label + "': " + e.what());
    }
    cr.documents_read = corpus.size();
    cr.skipped_empty_title = corpus.skipped_empty_title;
    if (cc.sample_size) {
      corpus = ingest::sample_corpus(corpus, *cc.sample_size, *cc.seed);
      cr.sample_size = cc.sample_size;
      cr.sample_seed = cc.seed;
    }
    if (corpus.records.empty()) throw DomainError("corpus '" + cc.label + "' has no documents with a title");
    cr.bibliometrics = ingest::bibliometric_descriptives(corpus, cc.distinct_author_total);

    std::vector<std::string> titles;
    for (const auto& rec : corpus.records) {
      try {
        cr.records.push_back(metrics::measure(rec.id, rec.title, rec.abstract, policy));
      } catch (const Error& e) {
        throw DomainError("corpus '" + cc.label + "', document '" + rec.id + "': " + e.what());
      }
      if (!cr.records.back().fkgl) ++cr.excluded_without_abstract;
      titles.push_back(rec.title);
    }
    for (auto name : kMetricNames) {
      cr.metrics.emplace(std::string(name),
                         summarize_metric(detail::metric_values(cr.records, name), analysis.kde_grid_points));
    }
    try {
      cr.network = analyze_titles(titles, stopwords, analysis);
    } catch (const DomainError& e) {
      cr.network_note = e.what();
    }
  }

  for (auto name : kMetricNames) {
    const auto x = detail::metric_values(report.corpora[0].records, name);
    const auto y = detail::metric_values(report.corpora[1].records, name);
    Comparison c;
    try {
      c.result = stats::wilcoxon_rank_sum(x, y);
    } catch (const DomainError& e) {
      c.note = e.what();
    }
    report.comparisons.emplace(std::string(name), std::move(c));
  }
  report.generated_at = detail::utc_timestamp();
  return report;
}

inline ojson ComparisonReport::to_json(bool include_timestamp) const {
  ojson j;
  ojson prov;
  prov["tool"] = kToolName;
  prov["version"] = kToolVersion;
  prov["sampler"] = ingest::kSamplerId;
  prov["segmentation"] = textproc::kSegmentationVersion;
  prov["louvain_seed"] = louvain_seed;
  prov["resolution"] = resolution;
  prov["min_title_frequency"] = min_title_frequency;
  prov["betweenness"] = weighted_betweenness ? "weighted (1/weight lengths)" : "unweighted";
  prov["syllables"] = "vowel groups with silent-ending rules; numerals and acronyms count 1";
  prov["title_length"] = "Unicode characters after whitespace normalization, spaces included";
  if (include_timestamp) prov["generated_at"] = generated_at;
  j["provenance"] = prov;

  j["corpora"] = ojson::array();
  for (const auto& c : corpora) {
    ojson cj;
    cj["label"] = c.label;
    cj["documents_read"] = c.documents_read;
    cj["skipped_empty_title"] = c.skipped_empty_title;
    cj["documents_analyzed"] = c.records.size();
    cj["sample"] = c.sample_size ? ojson{{"size", *c.sample_size}, {"seed", *c.sample_seed}} : ojson(nullptr);
    cj["excluded_without_abstract"] = c.excluded_without_abstract;
    const auto& b = c.bibliometrics;
    cj["bibliometrics"] = {{"documents", b.document_count},
                           {"authors", b.author_total},
                           {"authors_per_document", b.authors_per_document},
                           {"citations_per_document", b.citations_per_document},
                           {"annual_growth_pct", b.annual_growth_pct},
                           {"timespan", b.timespan ? ojson{b.timespan->first, b.timespan->second} : ojson(nullptr)}};
    ojson mj;
    for (auto name : kMetricNames) {
      const auto& m = c.metrics.find(name)->second;
      ojson block;
      block["n"] = m.n;
      block["descriptives"] = m.descriptives ? detail::to_json(*m.descriptives) : ojson(nullptr);
      if (m.normality) {
        block["shapiro_wilk"] = {{"w", m.normality->w_statistic},
                                 {"p_value", m.normality->p_value},
                                 {"p_display", detail::p_display(m.normality->p_value)},
                                 {"n", m.normality->n}};
      } else {
        block["shapiro_wilk"] = {{"unavailable", m.normality_note}};
      }
      block["density_bandwidth"] = m.density ? ojson(m.density->bandwidth) : ojson(nullptr);
      mj[std::string(name)] = block;
    }
    cj["metrics"] = mj;
    if (c.network) {
      const auto& n = *c.network;
      ojson clusters = ojson::array();
      for (const auto& ci : n.summary.clusters) {
        clusters.push_back({{"community", ci.community},
                            {"nodes", ci.size},
                            {"node_share_pct", ci.node_share_pct},
                            {"labels", ci.label_tokens},
                            {"top_betweenness_token", ci.top_betweenness_token}});
      }
      cj["semantic_network"] = {{"nodes", n.graph.node_count()},
                                {"edges", n.graph.edge_count()},
                                {"communities", n.summary.cluster_count},
                                {"modularity", n.partition.modularity_q},
                                {"top_clusters", clusters},
                                {"top_betweenness_token", n.summary.top_betweenness_token},
                                {"top_betweenness", n.summary.top_betweenness}};
    } else {
      cj["semantic_network"] = {{"unavailable", c.network_note}};
    }
    j["corpora"].push_back(cj);
  }

  ojson comp;
  for (auto name : kMetricNames) {
    const auto& c = comparisons.find(name)->second;
    if (c.result) {
      const auto& r = *c.result;
      comp[std::string(name)] = {{"test", "wilcoxon_rank_sum"},
                                 {"u", r.u_statistic},
                                 {"z", r.z_score},
                                 {"p_value", r.p_value},
                                 {"p_display", detail::p_display(r.p_value)},
                                 {"effect_size_r", r.effect_size_r},
                                 {"n_x", r.n_x},
                                 {"n_y", r.n_y}};
    } else {
      comp[std::string(name)] = {{"unavailable", c.note}};
    }
  }
  j["comparisons"] = {{"x", corpora[0].label}, {"y", corpora[1].label}, {"tests", comp}};
  return j;
}

inline std::string metric_csv(const CorpusReport& c) {
  std::ostringstream os;
  metrics::write_metric_csv(os, c.records);
  return os.str();
}

inline std::string density_csv(const stats::DensitySeries& s) {
  std::string out = "x,density\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) out += fmt::format("{},{}\n", s.grid[i], s.density[i]);
  return out;
}

/// Recomputes each report descriptive from the metric CSV text the run
/// emits. A mismatch is a bug, not an input problem.
inline void self_audit(const ComparisonReport& report) {
  for (const auto& c : report.corpora) {
    std::istringstream in(metric_csv(c));
    const auto rows = metrics::read_metric_csv(in);
    if (rows.size() != c.records.size()) throw std::logic_error("self-audit: metric CSV row count mismatch");
    for (auto name : kMetricNames) {
      const auto values = detail::metric_values(rows, name);
      const auto& block = c.metrics.find(name)->second;
      if (values.empty() != !block.descriptives) throw std::logic_error("self-audit: missing descriptives");
      if (values.empty()) continue;
      const auto d = stats::descriptives(values);
      const auto& e = *block.descriptives;
      if (d.min != e.min || d.q1 != e.q1 || d.median != e.median || d.mean != e.mean || d.q3 != e.q3 ||
          d.max != e.max) {
        throw std::logic_error("self-audit: descriptives of " + std::string(name) + " for '" + c.label +
                               "' disagree with the emitted metric CSV");
      }
    }
  }
}

/// File name -> contents for every artifact the configured formats ask for.
inline std::map<std::string, std::string> render_artifacts(const ComparisonReport& report,
                                                           const std::set<std::string>& formats) {
  std::map<std::string, std::string> files;
  auto want = [&](std::string_view f) { return formats.count(std::string(f)) > 0; };
  if (want("json")) files["report.json"] = report.to_json().dump(2) + "\n";
  static const std::map<std::string_view, std::string_view> axis = {
      {"title_length", "Title length (characters)"}, {"fkgl", "Flesch-Kincaid grade level"}, {"yules_k", "Yule's K"}};
  for (const auto& c : report.corpora) {
    if (want("csv")) {
      files["metrics_" + c.slug + ".csv"] = metric_csv(c);
      for (auto name : kMetricNames) {
        const auto& m = c.metrics.find(name)->second;
        if (m.density) files["density_" + std::string(name) + "_" + c.slug + ".csv"] = density_csv(*m.density);
      }
    }
    if (c.network) {
      const auto& n = *c.network;
      if (want("gexf")) {
        std::ostringstream os;
        semnet::export_graph(os, n.graph, n.partition, n.scores, semnet::GraphFormat::kGexf);
        files["semnet_" + c.slug + ".gexf"] = os.str();
      }
      if (want("graphml")) {
        std::ostringstream os;
        semnet::export_graph(os, n.graph, n.partition, n.scores, semnet::GraphFormat::kGraphMl);
        files["semnet_" + c.slug + ".graphml"] = os.str();
      }
    }
  }
  if (want("svg")) {
    for (auto name : kMetricNames) {
      const auto& a = report.corpora[0].metrics.find(name)->second;
      const auto& b = report.corpora[1].metrics.find(name)->second;
      if (!a.density || !b.density) continue;
      const std::string ax(axis.at(name));
      files["density_" + std::string(name) + ".svg"] = svg::emit_density_svg(
          *a.density, *b.density, {"Density: " + ax, ax, report.corpora[0].label, report.corpora[1].label});
    }
  }
  return files;
}

/// Writes files into a staging directory inside `dir` and moves them into
/// place only once everything has been written.
inline void write_atomically(const fs::path& dir, const std::map<std::string, std::string>& files) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto staging = dir / ".lexigauge-staging";
  fs::remove_all(staging, ec);
  fs::create_directories(staging, ec);
  if (ec) throw ConfigError("cannot create staging directory " + staging.string() + ": " + ec.message());
  try {
    for (const auto& [name, content] : files) {
      std::ofstream out(staging / name, std::ios::binary);
      out << content;
      if (!out.flush()) throw ConfigError("cannot write " + (staging / name).string());
    }
    for (const auto& [name, content] : files) fs::rename(staging / name, dir / name);
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  fs::remove_all(staging, ec);
}

/// Full run: analyze, audit, and write the artifact bundle.
inline ComparisonReport run_compare(const RunConfig& cfg) {
  auto report = analyze(cfg);
  self_audit(report);
  write_atomically(cfg.output.directory, render_artifacts(report, cfg.output.formats));
  return report;
}

}  // namespace lexigauge::pipeline

#endif  // LEXIGAUGE_PIPELINE_HPP
