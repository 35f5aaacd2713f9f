#ifndef LEXIGAUGE_SEMNET_HPP
#define LEXIGAUGE_SEMNET_HPP

// Co-word networks over article titles: graph construction, Louvain
// community detection, betweenness centrality, cluster summaries, and
// GEXF / GraphML export for external layout tools.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "lexigauge/error.hpp"
#include "lexigauge/ingest.hpp"
#include "lexigauge/textproc.hpp"
#include "lexigauge/xml.hpp"

namespace lexigauge::semnet {

class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  /// Snowball English list.
  static const Stopwords& english() {
    static const Stopwords list(std::unordered_set<std::string>{
        "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours", "yourself",
        "yourselves", "he", "him", "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself",
        "they", "them", "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
        "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had",
        "having", "do", "does", "did", "doing", "would", "should", "could", "ought", "i'm", "you're",
        "he's", "she's", "it's", "we're", "they're", "i've", "you've", "we've", "they've", "i'd", "you'd",
        "he'd", "she'd", "we'd", "they'd", "i'll", "you'll", "he'll", "she'll", "we'll", "they'll",
        "isn't", "aren't", "wasn't", "weren't", "hasn't", "haven't", "hadn't", "doesn't", "don't",
        "didn't", "won't", "wouldn't", "shan't", "shouldn't", "can't", "cannot", "couldn't", "mustn't",
        "let's", "that's", "who's", "what's", "here's", "there's", "when's", "where's", "why's", "how's",
        "a", "an", "the", "and", "but", "if", "or", "because", "as", "until", "while", "of", "at", "by",
        "for", "with", "about", "against", "between", "into", "through", "during", "before", "after",
        "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over", "under", "again",
        "further", "then", "once", "here", "there", "when", "where", "why", "how", "all", "any", "both",
        "each", "few", "more", "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same",
        "so", "than", "too", "very", "will"});
    return list;
  }

  /// One lowercase token per line; blank lines and `#` comments skipped.
  static Stopwords load(std::istream& in) {
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto b = line.find_first_not_of(" \t");
      if (b == std::string::npos || line[b] == '#') continue;
      words.insert(textproc::normalize_token(
          unicode::decode(line.substr(b, line.find_last_not_of(" \t") - b + 1))));
    }
    return Stopwords(std::move(words));
  }

  bool contains(std::string_view token) const { return words_.count(std::string(token)) > 0; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct GraphPolicy {
  std::size_t min_title_frequency = 2;
  bool weighted_betweenness = false;  // shortest paths over 1/weight lengths
  textproc::TokenPolicy tokens;
};

/// Undirected co-occurrence graph. Nodes are sorted lexicographically and
/// addressed by index; edges are keyed (lo, hi) with lo < hi.
struct CoWordGraph {
  std::vector<std::string> nodes;
  std::vector<std::size_t> node_frequency;  // titles containing the token
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  std::optional<std::size_t> index_of(std::string_view token) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), token);
    if (it == nodes.end() || *it != token) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
  }

  std::size_t weight(std::string_view a, std::string_view b) const {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib || *ia == *ib) return 0;
    auto it = edges.find(std::minmax(*ia, *ib));
    return it == edges.end() ? 0 : it->second;
  }

  /// Neighbour lists with edge weights, neighbours in ascending order.
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(nodes.size());
    for (const auto& [e, w] : edges) {
      adj[e.first].emplace_back(e.second, static_cast<double>(w));
      adj[e.second].emplace_back(e.first, static_cast<double>(w));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  bool operator==(const CoWordGraph&) const = default;
};

/// Distinct content tokens of one title: tokenized, stopwords and tokens
/// without letters removed.
inline std::set<std::string> title_keywords(std::string_view title, const Stopwords& stopwords,
                                            const textproc::TokenPolicy& policy = {}) {
  std::set<std::string> out;
  for (auto& raw : textproc::segment_words(unicode::decode(title), policy)) {
    if (!textproc::detail::has_letter(raw)) continue;
    auto tok = textproc::normalize_token(raw, policy);
    if (stopwords.contains(tok)) continue;
    out.insert(std::move(tok));
  }
  return out;
}

/// Whole-title co-occurrence: every unordered pair of distinct keywords in a
/// title adds one to that edge. Nodes in fewer than min_title_frequency
/// titles are dropped with their edges.
inline CoWordGraph build_coword_graph(std::span<const std::string> titles, const Stopwords& stopwords,
                                      const GraphPolicy& policy = {}) {
  if (titles.empty()) throw DomainError("co-word graph of an empty title list");
  std::map<std::string, std::size_t> freq;
  std::map<std::pair<std::string, std::string>, std::size_t> pair_counts;
  for (const auto& title : titles) {
    const auto kws = title_keywords(title, stopwords, policy.tokens);
    for (auto a = kws.begin(); a != kws.end(); ++a) {
      ++freq[*a];
      for (auto b = std::next(a); b != kws.end(); ++b) ++pair_counts[{*a, *b}];
    }
  }
  CoWordGraph g;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& [tok, f] : freq) {
    if (f < policy.min_title_frequency) continue;
    index.emplace(tok, g.nodes.size());
    g.nodes.push_back(tok);
    g.node_frequency.push_back(f);
  }
  for (const auto& [pair, w] : pair_counts) {
    auto a = index.find(pair.first);
    auto b = index.find(pair.second);
    if (a == index.end() || b == index.end()) continue;
    g.edges.emplace(std::minmax(a->second, b->second), w);
  }
  return g;
}

inline CoWordGraph build_coword_graph(const std::vector<std::string>& titles, const Stopwords& stopwords,
                                      const GraphPolicy& policy = {}) {
  return build_coword_graph(std::span<const std::string>(titles), stopwords, policy);
}

// --- communities -------------------------------------------------------------

struct CommunityPartition {
  std::vector<std::string> nodes;       // copy of the graph's node labels
  std::vector<std::size_t> assignment;  // node index -> community id (0-based, dense)
  double modularity_q = 0;
  double resolution = 1;
  std::uint64_t seed = 0;

  std::size_t community_count() const {
    return assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
  }
};

/// Weighted Newman-Girvan modularity with resolution gamma:
/// Q = sum_c [ L_c / m - gamma (d_c / 2m)^2 ], L_c the intra-community edge
/// weight and d_c the total degree of community c.
inline double modularity(const CoWordGraph& g, std::span<const std::size_t> assignment, double resolution = 1.0) {
  if (assignment.size() != g.node_count()) throw ConsistencyError("assignment does not match graph");
  double m = 0.0;
  std::map<std::size_t, double> internal;
  std::map<std::size_t, double> degree;
  for (const auto& [e, w] : g.edges) {
    const double wd = static_cast<double>(w);
    m += wd;
    degree[assignment[e.first]] += wd;
    degree[assignment[e.second]] += wd;
    if (assignment[e.first] == assignment[e.second]) internal[assignment[e.first]] += wd;
  }
  if (m == 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [c, d] : degree) {
    const double in = internal.count(c) ? internal[c] : 0.0;
    q += in / m - resolution * (d / (2.0 * m)) * (d / (2.0 * m));
  }
  return q;
}

namespace detail {

// Graph at one Louvain level: symmetric adjacency without self entries,
// plus self-loop weights holding the collapsed intra-community weight.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<double> self_loop;

  std::size_t size() const { return adj.size(); }

  double strength(std::size_t i) const {
    double k = 2.0 * self_loop[i];
    for (const auto& [j, w] : adj[i]) k += w;
    return k;
  }
};

// Local-moving phase. Returns community per node (dense ids) and whether
// any node moved.
inline bool local_moves(const LevelGraph& g, double resolution, std::mt19937_64& rng,
                        std::vector<std::size_t>& community) {
  const std::size_t n = g.size();
  std::vector<double> k(n);
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = g.strength(i);
    m2 += k[i];
  }
  community.resize(n);
  std::iota(community.begin(), community.end(), std::size_t{0});
  if (m2 == 0.0) return false;
  std::vector<double> tot(k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  for (;;) {
    ingest::seeded_shuffle(order, rng);
    bool moved = false;
    for (std::size_t i : order) {
      const std::size_t own = community[i];
      touched.clear();
      for (const auto& [j, w] : g.adj[i]) {
        const auto c = community[j];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += w;
      }
      tot[own] -= k[i];
      // Gain of joining c, up to a positive constant factor.
      auto gain = [&](std::size_t c) { return link[c] - resolution * tot[c] * k[i] / m2; };
      std::size_t best = own;
      double best_gain = gain(own);
      std::sort(touched.begin(), touched.end());
      for (auto c : touched) {
        const double gc = gain(c);
        if (gc > best_gain + 1e-12) {
          best = c;
          best_gain = gc;
        }
      }
      tot[best] += k[i];
      if (best != own) {
        community[i] = best;
        moved = true;
      }
      for (auto c : touched) link[c] = 0.0;
      link[own] = 0.0;
    }
    if (!moved) break;
    any_move = true;
  }
  // Renumber densely in order of first appearance by node index.
  std::vector<std::size_t> remap(n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (auto& c : community) {
    if (remap[c] == std::numeric_limits<std::size_t>::max()) remap[c] = next++;
    c = remap[c];
  }
  return any_move;
}

inline LevelGraph aggregate(const LevelGraph& g, const std::vector<std::size_t>& community, std::size_t count) {
  LevelGraph out;
  out.adj.resize(count);
  out.self_loop.assign(count, 0.0);
  std::vector<std::map<std::size_t, double>> acc(count);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto ci = community[i];
    out.self_loop[ci] += g.self_loop[i];
    for (const auto& [j, w] : g.adj[i]) {
      const auto cj = community[j];
      if (ci == cj) {
        if (i < j) out.self_loop[ci] += w;
      } else {
        acc[ci][cj] += w;
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) out.adj[c].assign(acc[c].begin(), acc[c].end());
  return out;
}

}  // namespace detail

/// Louvain method: greedy local moves in seeded random node order, then
/// aggregation of communities into nodes, repeated until nothing moves.
inline CommunityPartition louvain_communities(const CoWordGraph& graph, double resolution = 1.0,
                                              std::uint64_t seed = 1) {
  if (graph.node_count() == 0) throw DomainError("community detection on an empty graph");
  detail::LevelGraph level;
  level.adj = graph.adjacency();
  level.self_loop.assign(graph.node_count(), 0.0);

  std::vector<std::size_t> assignment(graph.node_count());
  std::iota(assignment.begin(), assignment.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::size_t> community;
    const bool moved = detail::local_moves(level, resolution, rng, community);
    if (!moved) break;
    const std::size_t count = *std::max_element(community.begin(), community.end()) + 1;
    for (auto& a : assignment) a = community[a];
    if (count == level.size()) break;
    level = detail::aggregate(level, community, count);
  }
  // Dense ids in order of each community's lowest-index node.
  std::vector<std::size_t> remap(graph.node_count(), std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (auto& a : assignment) {
    if (remap[a] == std::numeric_limits<std::size_t>::max()) remap[a] = next++;
    a = remap[a];
  }

  CommunityPartition p;
  p.nodes = graph.nodes;
  p.assignment = std::move(assignment);
  p.resolution = resolution;
  p.seed = seed;
  p.modularity_q = modularity(graph, p.assignment, resolution);
  return p;
}

// --- centrality --------------------------------------------------------------

struct CentralityScores {
  std::vector<std::string> nodes;
  std::vector<double> betweenness;  // each unordered pair counted once
  std::vector<std::size_t> degree;  // number of neighbours
  bool weighted = false;
};

/// Brandes' single-source accumulation. Unweighted by default; with
/// `weighted` edge lengths are 1 / weight, so stronger ties are shorter.
inline CentralityScores betweenness(const CoWordGraph& graph, bool weighted = false) {
  if (graph.node_count() == 0) throw DomainError("betweenness of an empty graph");
  const std::size_t n = graph.node_count();
  const auto adj = graph.adjacency();
  CentralityScores cs;
  cs.nodes = graph.nodes;
  cs.weighted = weighted;
  cs.betweenness.assign(n, 0.0);
  cs.degree.resize(n);
  for (std::size_t v = 0; v < n; ++v) cs.degree[v] = adj[v].size();

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    stack.clear();
    dist[s] = 0.0;
    sigma[s] = 1.0;
    if (!weighted) {
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        stack.push_back(v);
        for (const auto& [w, unused] : adj[v]) {
          if (dist[w] == kInf) {
            dist[w] = dist[v] + 1.0;
            q.push(w);
          }
          if (dist[w] == dist[v] + 1.0) {
            sigma[w] += sigma[v];
            preds[w].push_back(v);
          }
        }
      }
    } else {
      using Item = std::pair<double, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      std::vector<bool> done(n, false);
      pq.emplace(0.0, s);
      while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = true;
        stack.push_back(v);
        for (const auto& [w, wt] : adj[v]) {
          const double nd = d + 1.0 / wt;
          const double tol = 1e-12 * std::max(1.0, nd);
          if (nd < dist[w] - tol) {
            dist[w] = nd;
            sigma[w] = sigma[v];
            preds[w].assign(1, v);
            pq.emplace(nd, w);
          } else if (std::fabs(nd - dist[w]) <= tol && !done[w]) {
            sigma[w] += sigma[v];
            preds[w].push_back(v);
          }
        }
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const auto w = *it;
      for (auto v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cs.betweenness[w] += delta[w];
    }
  }
  for (auto& b : cs.betweenness) b /= 2.0;
  return cs;
}

// --- summaries ---------------------------------------------------------------

struct ClusterInfo {
  std::size_t community = 0;
  std::size_t size = 0;
  double node_share_pct = 0;
  std::vector<std::string> label_tokens;  // top degree nodes in the cluster
  std::string top_betweenness_token;
};

struct ClusterSummary {
  std::vector<ClusterInfo> clusters;  // the k most populated
  std::size_t cluster_count = 0;
  double share_total_pct = 0;  // over all clusters
  std::string top_betweenness_token;
  double top_betweenness = 0;
};

namespace detail {

inline void check_consistent(const CoWordGraph& g, const CommunityPartition& p, const CentralityScores& s) {
  if (p.nodes != g.nodes || p.assignment.size() != g.node_count()) {
    throw ConsistencyError("community partition was not computed on this graph");
  }
  if (s.nodes != g.nodes || s.betweenness.size() != g.node_count() || s.degree.size() != g.node_count()) {
    throw ConsistencyError("centrality scores were not computed on this graph");
  }
}

// Index of the best node among `members` by (score desc, label asc).
template <typename Score>
std::vector<std::size_t> rank_nodes(const CoWordGraph& g, std::vector<std::size_t> members, Score score) {
  std::sort(members.begin(), members.end(), [&](auto a, auto b) {
    const auto sa = score(a);
    const auto sb = score(b);
    if (sa != sb) return sa > sb;
    return g.nodes[a] < g.nodes[b];
  });
  return members;
}

}  // namespace detail

/// Clusters ranked by node count (ties: smaller id first), each labelled by
/// its `labels` highest-degree members.
inline ClusterSummary cluster_summary(const CoWordGraph& graph, const CommunityPartition& partition,
                                      const CentralityScores& scores, std::size_t k = 3, std::size_t labels = 3) {
  detail::check_consistent(graph, partition, scores);
  ClusterSummary out;
  const std::size_t n = graph.node_count();
  if (n == 0) return out;

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < n; ++v) members[partition.assignment[v]].push_back(v);
  out.cluster_count = members.size();

  std::vector<std::size_t> order;
  for (const auto& [c, m] : members) order.push_back(c);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return members[a].size() > members[b].size(); });

  for (const auto& [c, m] : members) {
    out.share_total_pct += 100.0 * static_cast<double>(m.size()) / static_cast<double>(n);
  }
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) {
    const auto c = order[i];
    const auto& m = members[c];
    ClusterInfo info;
    info.community = c;
    info.size = m.size();
    info.node_share_pct = 100.0 * static_cast<double>(m.size()) / static_cast<double>(n);
    const auto by_degree = detail::rank_nodes(graph, m, [&](auto v) { return scores.degree[v]; });
    for (std::size_t j = 0; j < std::min(labels, by_degree.size()); ++j) {
      info.label_tokens.push_back(graph.nodes[by_degree[j]]);
    }
    info.top_betweenness_token =
        graph.nodes[detail::rank_nodes(graph, m, [&](auto v) { return scores.betweenness[v]; }).front()];
    out.clusters.push_back(std::move(info));
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto top = detail::rank_nodes(graph, all, [&](auto v) { return scores.betweenness[v]; }).front();
  out.top_betweenness_token = graph.nodes[top];
  out.top_betweenness = scores.betweenness[top];
  return out;
}

// --- export ------------------------------------------------------------------

enum class GraphFormat { kGexf, kGraphMl };

/// Writes the graph as GEXF 1.2draft or GraphML. Nodes carry community,
/// betweenness, degree and title_frequency; edges carry weight. GEXF output
/// also sets each node's viz:size proportional to its betweenness.
inline void export_graph(std::ostream& out, const CoWordGraph& graph, const CommunityPartition& partition,
                         const CentralityScores& scores, GraphFormat format) {
  detail::check_consistent(graph, partition, scores);
  using xml::escape;
  const std::size_t n = graph.node_count();
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (format == GraphFormat::kGexf) {
    const double bmax =
        scores.betweenness.empty() ? 0.0 : *std::max_element(scores.betweenness.begin(), scores.betweenness.end());
    out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" "
           "version=\"1.2\">\n"
        << "  <meta>\n    <creator>lexigauge</creator>\n  </meta>\n"
        << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
        << "    <attributes class=\"node\">\n"
        << "      <attribute id=\"community\" title=\"community\" type=\"integer\"/>\n"
        << "      <attribute id=\"betweenness\" title=\"betweenness\" type=\"double\"/>\n"
        << "      <attribute id=\"degree\" title=\"degree\" type=\"integer\"/>\n"
        << "      <attribute id=\"title_frequency\" title=\"title_frequency\" type=\"integer\"/>\n"
        << "    </attributes>\n    <nodes>\n";
    for (std::size_t v = 0; v < n; ++v) {
      const double size = bmax > 0.0 ? 1.0 + 49.0 * scores.betweenness[v] / bmax : 1.0;
      out << fmt::format(
          "      <node id=\"{}\" label=\"{}\">\n        <attvalues>\n"
          "          <attvalue for=\"community\" value=\"{}\"/>\n"
          "          <attvalue for=\"betweenness\" value=\"{}\"/>\n"
          "          <attvalue for=\"degree\" value=\"{}\"/>\n"
          "          <attvalue for=\"title_frequency\" value=\"{}\"/>\n"
          "        </attvalues>\n        <viz:size value=\"{}\"/>\n      </node>\n",
          v, escape(graph.nodes[v]), partition.assignment[v], scores.betweenness[v], scores.degree[v],
          graph.node_frequency[v], size);
    }
    out << "    </nodes>\n    <edges>\n";
    std::size_t id = 0;
    for (const auto& [e, w] : graph.edges) {
      out << fmt::format("      <edge id=\"{}\" source=\"{}\" target=\"{}\" weight=\"{}\"/>\n", id++, e.first,
                         e.second, w);
    }
    out << "    </edges>\n  </graph>\n</gexf>\n";
  } else {
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
           "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
           "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
           "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
        << "  <key id=\"betweenness\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n"
        << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
        << "  <key id=\"title_frequency\" for=\"node\" attr.name=\"title_frequency\" attr.type=\"int\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t v = 0; v < n; ++v) {
      out << fmt::format(
          "    <node id=\"n{}\">\n      <data key=\"label\">{}</data>\n"
          "      <data key=\"community\">{}</data>\n      <data key=\"betweenness\">{}</data>\n"
          "      <data key=\"degree\">{}</data>\n      <data key=\"title_frequency\">{}</data>\n    </node>\n",
          v, escape(graph.nodes[v]), partition.assignment[v], scores.betweenness[v], scores.degree[v],
          graph.node_frequency[v]);
    }
    std::size_t id = 0;
    for (const auto& [e, w] : graph.edges) {
      out << fmt::format(
          "    <edge id=\"e{}\" source=\"n{}\" target=\"n{}\">\n      <data key=\"weight\">{}</data>\n    </edge>\n",
          id++, e.first, e.second, w);
    }
    out << "  </graph>\n</graphml>\n";
  }
}

}  // namespace lexigauge::semnet

#endif  // LEXIGAUGE_SEMNET_HPP
