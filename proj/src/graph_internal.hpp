#pragma once

#include <cstddef>
#include <vector>

#include "sbinet/network.hpp"

namespace sbinet::detail {

/// Edges merged per unordered pair (src < dst), sorted.
std::vector<Edge> undirected_edges(const Network& net);

/// Compressed adjacency; neighbours of each node are in ascending order.
struct Csr {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> target;
  std::vector<double> weight;

  std::size_t size() const { return offset.empty() ? 0 : offset.size() - 1; }
  std::size_t begin(std::size_t v) const { return offset[v]; }
  std::size_t end(std::size_t v) const { return offset[v + 1]; }
};

/// Outgoing adjacency (`reverse` = incoming). Undirected edges go both ways.
Csr make_csr(std::size_t n, const std::vector<Edge>& edges, bool directed, bool reverse = false);

}  // namespace sbinet::detail
