#pragma once

// Small-graph builders shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sbinet/network.hpp"

namespace testing {

struct Spec {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<double> weights;  // empty: all 1
  bool directed = false;
};

inline sbinet::Network make_network(const Spec& spec, bool paths = true) {
  std::vector<sbinet::Node> nodes(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    nodes[i].id = std::to_string(i);
    nodes[i].row = i;
  }
  std::vector<sbinet::Edge> records;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    double w = spec.weights.empty() ? 1.0 : spec.weights[i];
    records.push_back({spec.edges[i].first, spec.edges[i].second, w, 1});
  }
  sbinet::NetworkFlags flags;
  flags.directed = spec.directed;
  flags.represents_paths = paths;
  flags.has_weights = !spec.weights.empty();
  return sbinet::Network(std::move(nodes), records, flags);
}

inline Spec path_graph(std::size_t n) {
  Spec s{n, {}, {}, false};
  for (std::size_t i = 0; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1);
  return s;
}

inline Spec complete_graph(std::size_t n) {
  Spec s{n, {}, {}, false};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s.edges.emplace_back(i, j);
  }
  return s;
}

// Center 0 with n-1 leaves.
inline Spec star_graph(std::size_t n) {
  Spec s{n, {}, {}, false};
  for (std::size_t i = 1; i < n; ++i) s.edges.emplace_back(0, i);
  return s;
}

inline Spec cycle_graph(std::size_t n) {
  Spec s = path_graph(n);
  s.edges.emplace_back(n - 1, 0);
  return s;
}

inline Spec two_triangles(bool bridged) {
  Spec s{6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {}, false};
  if (bridged) s.edges.emplace_back(2, 3);
  return s;
}

// Two k-cliques joined by a path with `between` inner nodes.
inline Spec barbell(std::size_t k, std::size_t between) {
  Spec s{2 * k + between, {}, {}, false};
  for (std::size_t base : {std::size_t{0}, k + between}) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) s.edges.emplace_back(base + i, base + j);
    }
  }
  std::size_t prev = k - 1;
  for (std::size_t i = 0; i < between; ++i) {
    s.edges.emplace_back(prev, k + i);
    prev = k + i;
  }
  s.edges.emplace_back(prev, k + between);
  return s;
}

// Random simple graph; weights drawn from small integers when weighted so
// that equal-length alternatives actually occur.
inline Spec random_graph(std::mt19937& rng, std::size_t n, double p, bool directed, bool weighted) {
  Spec s{n, {}, {}, directed};
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, 4);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j || !coin(rng)) continue;
      s.edges.emplace_back(i, j);
      if (weighted) s.weights.push_back(weight(rng));
    }
  }
  return s;
}

}  // namespace testing
