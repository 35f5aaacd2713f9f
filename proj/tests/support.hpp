#ifndef LEXIGAUGE_TESTS_SUPPORT_HPP
#define LEXIGAUGE_TESTS_SUPPORT_HPP

// Fixture access and brute-force oracles shared by the unit and acceptance
// suites. The oracles deliberately avoid the library's algorithms.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lexigauge/lexigauge.hpp"

namespace testsupport {

inline std::filesystem::path fixture(const std::string& rel) { return std::filesystem::path(LEXIGAUGE_FIXTURES) / rel; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::istringstream in(read_file(p));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

/// A scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() / ("lexigauge-" + tag + "-" + std::to_string(rng() % 1000000000));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

/// Graph with integer weights given as an edge list over nodes 0..n-1.
struct SmallGraph {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;  // (lo, hi) -> weight
};

inline lexigauge::semnet::CoWordGraph to_coword(const SmallGraph& g) {
  lexigauge::semnet::CoWordGraph out;
  for (std::size_t i = 0; i < g.n; ++i) {
    char name[8];
    std::snprintf(name, sizeof name, "n%02zu", i);
    out.nodes.emplace_back(name);
    out.node_frequency.push_back(1);
  }
  for (const auto& [e, w] : g.edges) out.edges[e] = w;
  return out;
}

inline SmallGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes, double density, bool weighted) {
  SmallGraph g;
  g.n = 2 + rng() % (max_nodes - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if (u(rng) < density) g.edges[{i, j}] = weighted ? 1 + rng() % 4 : 1;
    }
  }
  return g;
}

/// All-pairs shortest paths with path counts (Floyd-Warshall), then
/// betweenness summed over unordered pairs. Edge length is 1, or 1/weight
/// when `weighted`.
inline std::vector<double> brute_force_betweenness(const SmallGraph& g, bool weighted = false) {
  const std::size_t n = g.n;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    sigma[i][i] = 1;
  }
  for (const auto& [e, w] : g.edges) {
    const double len = weighted ? 1.0 / static_cast<double>(w) : 1.0;
    d[e.first][e.second] = d[e.second][e.first] = len;
    sigma[e.first][e.second] = sigma[e.second][e.first] = 1;
  }
  auto same = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)); };
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || i == k || j == k) continue;
        const double via = d[i][k] + d[k][j];
        if (via == inf) continue;
        if (!same(via, d[i][j]) && via < d[i][j]) {
          d[i][j] = via;
          sigma[i][j] = sigma[i][k] * sigma[k][j];
        } else if (same(via, d[i][j])) {
          sigma[i][j] += sigma[i][k] * sigma[k][j];
        }
      }
    }
  }
  std::vector<double> bc(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        if (s == v || t == v || d[s][t] == inf) continue;
        if (same(d[s][v] + d[v][t], d[s][t])) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  return bc;
}

/// Modularity from the dense adjacency matrix, straight from the definition.
inline double brute_force_modularity(const SmallGraph& g, const std::vector<std::size_t>& community,
                                     double resolution = 1.0) {
  const std::size_t n = g.n;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& [e, w] : g.edges) a[e.first][e.second] = a[e.second][e.first] = static_cast<double>(w);
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    two_m += k[i];
  }
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (community[i] == community[j]) q += a[i][j] - resolution * k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

inline SmallGraph from_coword(const lexigauge::semnet::CoWordGraph& g) {
  SmallGraph s;
  s.n = g.nodes.size();
  for (const auto& [e, w] : g.edges) s.edges[e] = w;
  return s;
}

/// Co-word counts by explicit pairwise enumeration over every title.
struct NaiveCoword {
  std::map<std::string, std::size_t> frequency;
  std::map<std::pair<std::string, std::string>, std::size_t> pairs;
};

inline NaiveCoword naive_coword(const std::vector<std::string>& titles, const lexigauge::semnet::Stopwords& sw,
                                std::size_t min_frequency) {
  NaiveCoword all;
  std::vector<std::vector<std::string>> per_title;
  for (const auto& t : titles) {
    std::vector<std::string> kept;
    for (const auto& tok : lexigauge::textproc::tokenize(t).tokens) {
      bool letter = false;
      for (unsigned char c : tok) letter = letter || std::isalpha(c) || c >= 0x80;
      if (!letter || sw.contains(tok)) continue;
      bool seen = false;
      for (const auto& k : kept) seen = seen || k == tok;
      if (!seen) kept.push_back(tok);
    }
    for (const auto& k : kept) ++all.frequency[k];
    per_title.push_back(kept);
  }
  NaiveCoword out;
  for (const auto& [tok, f] : all.frequency) {
    if (f >= min_frequency) out.frequency[tok] = f;
  }
  for (const auto& kept : per_title) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (i == j) continue;
        const auto& a = kept[i];
        const auto& b = kept[j];
        if (a < b && out.frequency.count(a) && out.frequency.count(b)) ++out.pairs[{a, b}];
      }
    }
  }
  return out;
}

/// Exact two-sided rank-sum p from the Mann-Whitney recurrence
/// c(u; m, n) = c(u - n; m - 1, n) + c(u; m, n - 1).
inline double recurrence_exact_p(std::size_t m, std::size_t n, double u_observed) {
  std::map<std::tuple<long, long, long>, double> memo;
  std::function<double(long, long, long)> count = [&](long u, long mm, long nn) -> double {
    if (u < 0) return 0.0;
    if (mm == 0 || nn == 0) return u == 0 ? 1.0 : 0.0;
    auto key = std::make_tuple(u, mm, nn);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double v = count(u - nn, mm - 1, nn) + count(u, mm, nn - 1);
    memo[key] = v;
    return v;
  };
  const long max_u = static_cast<long>(m * n);
  double total = 0, lo = 0, hi = 0;
  for (long u = 0; u <= max_u; ++u) {
    const double c = count(u, static_cast<long>(m), static_cast<long>(n));
    total += c;
    if (u <= u_observed + 1e-9) lo += c;
    if (u >= u_observed - 1e-9) hi += c;
  }
  return std::min(1.0, 2.0 * std::min(lo, hi) / total);
}

}  // namespace testsupport

#endif  // LEXIGAUGE_TESTS_SUPPORT_HPP
