#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbinet/discovery.hpp"
#include "sbinet/rdf.hpp"

namespace sbinet {

struct Node {
  std::string id;  // canonical: integers lose leading zeros and '+'
  std::optional<std::string> label;
  std::optional<double> lat;
  std::optional<double> lon;
  std::map<std::string, std::string> attrs;  // unbound columns, by header name
  std::size_t row = 0;                       // 0-based row in the node table
};

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  double weight = 1.0;
  std::size_t multiplicity = 1;

  bool operator==(const Edge&) const = default;
};

struct NetworkFlags {
  bool directed = false;
  bool represents_paths = false;
  bool has_geo = false;
  bool has_weights = false;
};

/// Weighted, optionally directed simple graph. Nodes are addressed by their
/// position; position order is ascending id order when built from files.
/// Immutable after construction and safe to share between threads.
class Network {
 public:
  Network() = default;

  /// Collapses parallel records (per ordered pair when directed, per
  /// unordered pair otherwise) by summing weight and multiplicity, drops
  /// self-loops with a warning, and sorts edges by (src, dst).
  /// Throws DuplicateNodeId, UnknownNode, NegativeWeight.
  Network(std::vector<Node> nodes, const std::vector<Edge>& records, NetworkFlags flags);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool directed() const noexcept { return flags_.directed; }
  bool represents_paths() const noexcept { return flags_.represents_paths; }
  bool has_geo() const noexcept { return flags_.has_geo; }
  bool has_weights() const noexcept { return flags_.has_weights; }
  const NetworkFlags& flags() const noexcept { return flags_; }

  std::optional<std::size_t> find(std::string_view id) const;

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  NetworkFlags flags_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::vector<std::string> warnings_;
};

/// Canonical spelling of a node id cell (trimmed; integers normalized).
std::string canonical_node_id(std::string_view cell);

/// Orders ids numerically when both are integers, integers before other ids,
/// and lexicographically otherwise.
bool node_id_less(const std::string& a, const std::string& b);

/// Lookup structure for edge-table node references.
class NodeIndex {
 public:
  explicit NodeIndex(const std::vector<Node>& nodes);

  /// Exact id match, else the integer before a " - " separator, else the
  /// full cell against labels.
  std::optional<std::size_t> resolve(std::string_view cell) const;

 private:
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
};

/// Throws UnresolvedNodeRef carrying `row` (1-based data row).
std::size_t resolve_node_ref(std::string_view cell, const NodeIndex& index, std::size_t row);

struct CoordinateScaling {
  enum class Mode { Auto, None, Divisor };
  Mode mode = Mode::Auto;
  double divisor = 1e6;

  /// Auto divides values with magnitude above 1000 by 10^6.
  double apply(double raw) const;
};

struct BuildOptions {
  CoordinateScaling scaling;
  /// Edge record classes whose edges are traversable route segments.
  std::set<std::string> route_classes{vocab::kBusRoute};
};

/// One node per row of a node set, sorted by id. Throws DuplicateNodeId,
/// InvalidCoordinate.
std::vector<Node> nodes_from_dataset(const AnnotatedDataset& ds,
                                     const CoordinateScaling& scaling = {});

/// One node per node-table row, edges collapsed per pair. Directed iff the
/// edge record is typed graph:DirectedEdge; weight comes from the weight
/// column when bound, else from the record count.
/// Throws UnresolvedNodeRef, DuplicateNodeId, NegativeWeight, InvalidCoordinate.
Network build_network(const ValidatedPair& pair, const BuildOptions& options = {});

/// Symmetric closure; reciprocal edges merge with summed weights. Returns an
/// identical network for undirected input.
Network undirected_view(const Network& net);

CapabilitySet capabilities_of(const Network& net);

}  // namespace sbinet
