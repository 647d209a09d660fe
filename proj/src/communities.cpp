#include <algorithm>
#include <cmath>
#include <map>

#include "graph_internal.hpp"
#include "sbinet/error.hpp"
#include "sbinet/metrics.hpp"

namespace sbinet {

double modularity(const Network& net, const std::vector<std::size_t>& community) {
  if (community.size() != net.node_count()) {
    throw Error(ErrorKind::InvalidPartition,
                "partition covers " + std::to_string(community.size()) + " of " +
                    std::to_string(net.node_count()) + " nodes");
  }
  const auto edges = detail::undirected_edges(net);
  double total = 0.0;
  for (const auto& e : edges) total += e.weight;
  if (edges.empty() || total <= 0.0) {
    throw Error(ErrorKind::EmptyEdgeSet, "modularity needs at least one weighted edge");
  }
  std::map<std::size_t, double> inside;
  std::map<std::size_t, double> degree;
  for (const auto& e : edges) {
    if (community[e.src] == community[e.dst]) inside[community[e.src]] += e.weight;
    degree[community[e.src]] += e.weight;
    degree[community[e.dst]] += e.weight;
  }
  double q = 0.0;
  for (const auto& [c, d] : degree) {
    auto it = inside.find(c);
    double e_c = it == inside.end() ? 0.0 : it->second;
    double frac = d / (2 * total);
    q += e_c / total - frac * frac;
  }
  return q;
}

namespace {

// Weighted undirected graph of one aggregation level.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;  // no self entries
  std::vector<double> self;                                      // loop weight, counted once
  double total = 0.0;                                            // sum of edge weights

  std::size_t size() const { return adj.size(); }
  double strength(std::size_t v) const {
    double k = 2 * self[v];
    for (const auto& [u, w] : adj[v]) k += w;
    return k;
  }
};

// Single-node moves in ascending node order until a full pass moves nothing.
// A node moves only for a strict gain; ties go to the smallest community id.
bool local_moving(const LevelGraph& g, std::vector<std::size_t>& comm) {
  const std::size_t n = g.size();
  std::vector<double> strength(n);
  std::vector<double> tot(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    strength[v] = g.strength(v);
    tot[comm[v]] += strength[v];
  }
  const double two_m = 2 * g.total;
  bool moved_any = false;
  std::map<std::size_t, double> links;
  for (std::size_t pass = 0; pass < 10000; ++pass) {
    bool moved = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t home = comm[v];
      const double k = strength[v];
      links.clear();
      links[home] = 0.0;
      for (const auto& [u, w] : g.adj[v]) links[comm[u]] += w;
      tot[home] -= k;
      auto gain = [&](std::size_t c, double k_in) { return k_in - tot[c] * k / two_m; };
      const double stay = gain(home, links[home]);
      std::size_t best = home;
      double best_gain = stay;
      for (const auto& [c, k_in] : links) {  // ascending community id
        double gc = gain(c, k_in);
        if (gc > best_gain) {
          best = c;
          best_gain = gc;
        }
      }
      if (best != home && best_gain - stay <= 1e-12 * std::max(1.0, k)) best = home;
      tot[best] += k;
      if (best != home) {
        comm[v] = best;
        moved = true;
        moved_any = true;
      }
    }
    if (!moved) break;
  }
  return moved_any;
}

// Relabels to 0..c-1 in order of first appearance; returns c.
std::size_t relabel(std::vector<std::size_t>& comm) {
  std::map<std::size_t, std::size_t> ids;
  for (auto& c : comm) {
    auto [it, inserted] = ids.try_emplace(c, ids.size());
    c = it->second;
  }
  return ids.size();
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::size_t>& comm, std::size_t count) {
  LevelGraph out;
  out.adj.resize(count);
  out.self.assign(count, 0.0);
  out.total = g.total;
  std::vector<std::map<std::size_t, double>> acc(count);
  for (std::size_t v = 0; v < g.size(); ++v) {
    out.self[comm[v]] += g.self[v];
    for (const auto& [u, w] : g.adj[v]) {
      if (u < v) continue;  // each undirected edge once
      if (comm[u] == comm[v]) {
        out.self[comm[v]] += w;
      } else {
        acc[comm[v]][comm[u]] += w;
        acc[comm[u]][comm[v]] += w;
      }
    }
  }
  for (std::size_t c = 0; c < count; ++c) out.adj[c].assign(acc[c].begin(), acc[c].end());
  return out;
}

}  // namespace

Partition detect_communities(const Network& net) {
  const auto edges = detail::undirected_edges(net);
  if (edges.empty()) throw Error(ErrorKind::EmptyEdgeSet, "community detection needs edges");
  const std::size_t n = net.node_count();

  LevelGraph base;
  base.adj.resize(n);
  base.self.assign(n, 0.0);
  for (const auto& e : edges) {
    base.adj[e.src].emplace_back(e.dst, e.weight);
    base.adj[e.dst].emplace_back(e.src, e.weight);
    base.total += e.weight;
  }
  for (auto& row : base.adj) std::sort(row.begin(), row.end());

  Partition out;
  std::vector<std::size_t> membership(n);  // original node -> current level node
  for (std::size_t v = 0; v < n; ++v) membership[v] = v;

  LevelGraph level = base;
  while (true) {
    std::vector<std::size_t> comm(level.size());
    for (std::size_t v = 0; v < comm.size(); ++v) comm[v] = v;
    if (!local_moving(level, comm)) break;
    std::size_t count = relabel(comm);
    for (auto& m : membership) m = comm[m];
    out.level_modularity.push_back(modularity(net, membership));
    if (count == level.size()) break;
    level = aggregate(level, comm, count);
  }

  // Aggregation can leave single nodes that would be better placed elsewhere.
  if (local_moving(base, membership)) {
    out.level_modularity.push_back(modularity(net, membership));
  }

  out.count = relabel(membership);
  out.community = std::move(membership);
  out.modularity = modularity(net, out.community);
  if (out.level_modularity.empty()) out.level_modularity.push_back(out.modularity);
  return out;
}

}  // namespace sbinet
