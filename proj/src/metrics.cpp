#include "sbinet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "graph_internal.hpp"
#include "sbinet/error.hpp"

namespace sbinet {

namespace detail {

std::vector<Edge> undirected_edges(const Network& net) {
  if (!net.directed()) return net.edges();
  std::map<std::pair<std::size_t, std::size_t>, Edge> merged;
  for (const auto& e : net.edges()) {
    auto key = std::pair{std::min(e.src, e.dst), std::max(e.src, e.dst)};
    auto [it, inserted] = merged.try_emplace(key, Edge{key.first, key.second, 0.0, 0});
    it->second.weight += e.weight;
    it->second.multiplicity += e.multiplicity;
  }
  std::vector<Edge> out;
  out.reserve(merged.size());
  for (auto& [key, e] : merged) out.push_back(e);
  return out;
}

Csr make_csr(std::size_t n, const std::vector<Edge>& edges, bool directed, bool reverse) {
  Csr g;
  g.offset.assign(n + 1, 0);
  auto each = [&](auto&& fn) {
    for (const auto& e : edges) {
      if (!directed || !reverse) fn(e.src, e.dst, e.weight);
      if (!directed || reverse) fn(e.dst, e.src, e.weight);
    }
  };
  each([&](std::size_t u, std::size_t, double) { ++g.offset[u + 1]; });
  for (std::size_t v = 0; v < n; ++v) g.offset[v + 1] += g.offset[v];
  g.target.resize(g.offset[n]);
  g.weight.resize(g.offset[n]);
  std::vector<std::size_t> fill(g.offset.begin(), g.offset.end() - 1);
  each([&](std::size_t u, std::size_t v, double w) {
    g.target[fill[u]] = v;
    g.weight[fill[u]] = w;
    ++fill[u];
  });
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t i = g.offset[v]; i < g.offset[v + 1]; ++i) row.emplace_back(g.target[i], g.weight[i]);
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      g.target[g.offset[v] + i] = row[i].first;
      g.weight[g.offset[v] + i] = row[i].second;
    }
  }
  return g;
}

}  // namespace detail

double average_degree(const Network& net) {
  if (net.node_count() == 0) return 0.0;
  auto deg = node_degrees(net);
  double sum = 0;
  for (auto d : deg) sum += static_cast<double>(d);
  return sum / static_cast<double>(net.node_count());
}

double weighted_average_degree(const Network& net) {
  if (net.edge_count() == 0) {
    throw Error(ErrorKind::EmptyEdgeSet, "weighted average degree needs at least one edge");
  }
  double sum = 0;
  for (const auto& e : net.edges()) sum += e.weight;
  return sum / static_cast<double>(net.edge_count());
}

std::vector<std::size_t> node_degrees(const Network& net) {
  std::vector<std::size_t> deg(net.node_count(), 0);
  for (const auto& e : detail::undirected_edges(net)) {
    ++deg[e.src];
    ++deg[e.dst];
  }
  return deg;
}

std::vector<double> node_weighted_degrees(const Network& net) {
  std::vector<double> deg(net.node_count(), 0.0);
  for (const auto& e : detail::undirected_edges(net)) {
    deg[e.src] += e.weight;
    deg[e.dst] += e.weight;
  }
  return deg;
}

std::vector<double> degree_centrality(const Network& net) {
  if (net.node_count() < 2) {
    throw Error(ErrorKind::SingletonNetwork, "degree centrality needs at least two nodes");
  }
  const double denom = static_cast<double>(net.node_count() - 1);
  std::vector<double> out;
  for (auto d : node_degrees(net)) out.push_back(static_cast<double>(d) / denom);
  return out;
}

double density(const Network& net) {
  const auto v = static_cast<double>(net.node_count());
  if (net.node_count() < 2) throw Error(ErrorKind::SingletonNetwork, "density needs at least two nodes");
  const auto m = static_cast<double>(net.edge_count());
  return net.directed() ? m / (v * (v - 1)) : m / (v * (v - 1) / 2);
}

double entropy(const Network& net) {
  if (net.node_count() == 0) return 0.0;
  std::map<std::size_t, std::size_t> histogram;
  for (auto d : node_degrees(net)) ++histogram[d];
  const auto v = static_cast<double>(net.node_count());
  double h = 0.0;
  for (const auto& [degree, count] : histogram) {
    double p = static_cast<double>(count) / v;
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no negative zero
}

Components connected_components(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : net.edges()) {
    auto a = find(e.src), b = find(e.dst);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components out;
  out.label.assign(n, 0);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (root_label[r] == n) root_label[r] = out.count++;
    out.label[v] = root_label[r];
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> bottom_k_degree(const Network& net,
                                                                 std::size_t k) {
  auto deg = node_degrees(net);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < deg.size(); ++v) out.emplace_back(v, deg[v]);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace sbinet
