#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sbinet/network.hpp"

namespace sbinet {

// Degree-based metrics. All of them read the undirected simple view, except
// weighted_average_degree and density, which respect the edge direction.

/// Mean number of distinct neighbours.
double average_degree(const Network& net);

/// Mean edge weight. Throws EmptyEdgeSet.
double weighted_average_degree(const Network& net);

std::vector<std::size_t> node_degrees(const Network& net);

/// Sum of incident edge weights per node.
std::vector<double> node_weighted_degrees(const Network& net);

/// d_v / (v - 1). Throws SingletonNetwork.
std::vector<double> degree_centrality(const Network& net);

/// m / (v(v-1)/2), or m / (v(v-1)) when directed. Throws SingletonNetwork.
double density(const Network& net);

/// Base-2 Shannon entropy of the degree distribution.
double entropy(const Network& net);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;  // contiguous, ordered by smallest member
};

Components connected_components(const Network& net);

/// Weighted Newman modularity over the undirected view. Community ids may be
/// any values. Throws InvalidPartition, EmptyEdgeSet.
double modularity(const Network& net, const std::vector<std::size_t>& community);

struct Partition {
  std::vector<std::size_t> community;  // contiguous, ordered by smallest member
  std::size_t count = 0;
  double modularity = 0.0;
  std::vector<double> level_modularity;  // Q after each aggregation level
};

/// Greedy multi-level modularity maximization at resolution 1 with a fixed
/// scan order and a closing single-node refinement pass. Throws EmptyEdgeSet.
Partition detect_communities(const Network& net);

// Path metrics. These follow edge direction and throw PathMetricNotApplicable
// unless the network represents paths.

enum class PathCriterion { Hops, Weight, Time };

std::string_view to_string(PathCriterion criterion);
std::optional<PathCriterion> parse_criterion(std::string_view text);

struct Path {
  std::vector<std::size_t> nodes;
  double length = 0.0;

  bool operator==(const Path&) const = default;
};

/// Among all shortest paths, the one whose node sequence is
/// lexicographically smallest. Throws UnknownNode, Unreachable.
Path shortest_path(const Network& net, std::size_t from, std::size_t to,
                   PathCriterion criterion = PathCriterion::Hops);

/// Largest finite distance from v (0 when nothing is reachable).
double eccentricity(const Network& net, std::size_t v,
                    PathCriterion criterion = PathCriterion::Hops);

struct Diameter {
  double value = 0.0;
  Path witness;
};

/// Throws EmptyEdgeSet when there are no edges.
Diameter diameter(const Network& net, PathCriterion criterion = PathCriterion::Hops);

/// Mean over reachable pairs. Throws NoFinitePairs.
double average_path_length(const Network& net, PathCriterion criterion = PathCriterion::Hops);

/// Pair-dependency sum divided by (v-1)(v-2). All zeros below three nodes.
std::vector<double> betweenness(const Network& net, PathCriterion criterion = PathCriterion::Hops);

/// The k largest finite distances with witnesses, descending, ties by
/// (source, target). Undirected networks list each pair once.
std::vector<Path> top_k_longest_min_paths(const Network& net, std::size_t k,
                                          PathCriterion criterion = PathCriterion::Hops);

/// (node, degree) for the k smallest degrees, ties by node order.
std::vector<std::pair<std::size_t, std::size_t>> bottom_k_degree(const Network& net,
                                                                 std::size_t k);

struct PathOptions {
  PathCriterion criterion = PathCriterion::Hops;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Every path metric from one all-sources sweep. Results are bitwise
/// identical for any thread count.
struct PathAnalysis {
  std::vector<double> betweenness;
  std::vector<double> eccentricity;
  std::optional<Diameter> diameter;          // empty without edges
  std::optional<double> average_path_length;  // empty without reachable pairs
  std::size_t reachable_pairs = 0;            // ordered pairs, s != t
  std::size_t unreachable_pairs = 0;
  std::vector<Path> longest_min_paths;
};

PathAnalysis analyze_paths(const Network& net, std::size_t k, const PathOptions& options = {});

}  // namespace sbinet
