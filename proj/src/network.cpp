#include "sbinet/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "sbinet/error.hpp"

namespace sbinet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<long long> parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::string canonical_node_id(std::string_view cell) {
  cell = trim(cell);
  if (auto n = parse_integer(cell)) return std::to_string(*n);
  return std::string(cell);
}

bool node_id_less(const std::string& a, const std::string& b) {
  auto na = parse_integer(a);
  auto nb = parse_integer(b);
  if (na && nb) return *na < *nb;
  if (na || nb) return na.has_value();
  return a < b;
}

Network::Network(std::vector<Node> nodes, const std::vector<Edge>& records, NetworkFlags flags)
    : nodes_(std::move(nodes)), flags_(flags) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!by_id_.emplace(nodes_[i].id, i).second) {
      throw Error(ErrorKind::DuplicateNodeId, "node id '" + nodes_[i].id + "' appears twice");
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, Edge> collapsed;
  std::size_t self_loops = 0;
  for (const auto& rec : records) {
    if (rec.src >= nodes_.size() || rec.dst >= nodes_.size()) {
      throw Error(ErrorKind::UnknownNode, "edge endpoint out of range");
    }
    if (!(rec.weight >= 0.0)) {
      throw Error(ErrorKind::NegativeWeight, "edge weight must be non-negative");
    }
    if (rec.src == rec.dst) {
      ++self_loops;
      continue;
    }
    auto key = flags_.directed ? std::pair{rec.src, rec.dst}
                               : std::pair{std::min(rec.src, rec.dst), std::max(rec.src, rec.dst)};
    auto [it, inserted] = collapsed.try_emplace(key, Edge{key.first, key.second, 0.0, 0});
    it->second.weight += rec.weight;
    it->second.multiplicity += rec.multiplicity;
  }
  edges_.reserve(collapsed.size());
  for (auto& [key, edge] : collapsed) edges_.push_back(edge);
  if (self_loops) {
    warnings_.push_back("dropped " + std::to_string(self_loops) + " self-loop record(s)");
  }
}

std::optional<std::size_t> Network::find(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex::NodeIndex(const std::vector<Node>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    by_id_.emplace(nodes[i].id, i);
    if (nodes[i].label) by_label_.emplace(*nodes[i].label, i);  // first (smallest id) wins
  }
}

std::optional<std::size_t> NodeIndex::resolve(std::string_view cell) const {
  cell = trim(cell);
  if (auto it = by_id_.find(canonical_node_id(cell)); it != by_id_.end()) return it->second;
  if (auto sep = cell.find(" - "); sep != std::string_view::npos) {
    auto head = trim(cell.substr(0, sep));
    if (auto n = parse_integer(head)) {
      if (auto it = by_id_.find(std::to_string(*n)); it != by_id_.end()) return it->second;
    }
  }
  if (auto it = by_label_.find(cell); it != by_label_.end()) return it->second;
  return std::nullopt;
}

std::size_t resolve_node_ref(std::string_view cell, const NodeIndex& index, std::size_t row) {
  if (auto idx = index.resolve(cell)) return *idx;
  throw RowError(ErrorKind::UnresolvedNodeRef,
                 "node reference '" + std::string(cell) + "' matches no node", row);
}

double CoordinateScaling::apply(double raw) const {
  switch (mode) {
    case Mode::Auto: return std::abs(raw) > 1000.0 ? raw / 1e6 : raw;
    case Mode::None: return raw;
    case Mode::Divisor: return raw / divisor;
  }
  return raw;
}

std::vector<Node> nodes_from_dataset(const AnnotatedDataset& ds, const CoordinateScaling& scaling) {
  const auto& nt = ds.table;
  const auto& nb = ds.bindings;
  const std::size_t id_col = *nb.column(BindingRole::Id);
  const auto label_col = nb.column(BindingRole::Label);
  const auto lat_col = nb.column(BindingRole::Latitude);
  const auto lon_col = nb.column(BindingRole::Longitude);

  std::set<std::size_t> role_columns;
  for (const auto& [role, binding] : nb.roles) role_columns.insert(binding.column);

  std::vector<Node> nodes;
  nodes.reserve(nt.row_count());
  for (std::size_t r = 0; r < nt.row_count(); ++r) {
    const auto& row = nt.rows[r];
    Node node;
    node.row = r;
    node.id = canonical_node_id(row[id_col]);
    if (node.id.empty()) throw RowError(ErrorKind::DuplicateNodeId, "empty node id", r + 1);
    if (label_col && !row[*label_col].empty()) node.label = row[*label_col];

    auto coordinate = [&](std::optional<std::size_t> col, double limit,
                          const char* what) -> std::optional<double> {
      if (!col || trim(row[*col]).empty()) return std::nullopt;
      auto raw = parse_double(row[*col]);
      if (!raw) {
        throw RowError(ErrorKind::InvalidCoordinate,
                       std::string(what) + " '" + row[*col] + "' is not a number", r + 1);
      }
      double value = scaling.apply(*raw);
      if (std::abs(value) > limit) {
        throw RowError(ErrorKind::InvalidCoordinate,
                       std::string(what) + " " + row[*col] + " is out of range after scaling",
                       r + 1);
      }
      return value;
    };
    node.lat = coordinate(lat_col, 90.0, "latitude");
    node.lon = coordinate(lon_col, 180.0, "longitude");
    for (std::size_t c = 0; c < nt.col_count(); ++c) {
      if (!role_columns.contains(c)) node.attrs.emplace(nt.header[c], row[c]);
    }
    nodes.push_back(std::move(node));
  }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return node_id_less(a.id, b.id); });
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i - 1].id == nodes[i].id) {
      throw RowError(ErrorKind::DuplicateNodeId, "node id '" + nodes[i].id + "' appears twice",
                     nodes[i].row + 1);
    }
  }
  return nodes;
}

Network build_network(const ValidatedPair& pair, const BuildOptions& options) {
  std::vector<Node> nodes = nodes_from_dataset(pair.nodes, options.scaling);
  const auto& nb = pair.nodes.bindings;
  const auto lat_col = nb.column(BindingRole::Latitude);
  const auto lon_col = nb.column(BindingRole::Longitude);

  const auto& et = pair.edges.table;
  const auto& eb = pair.edges.bindings;
  const std::size_t src_col = *eb.column(BindingRole::Source);
  const std::size_t dst_col = *eb.column(BindingRole::Target);
  const auto weight_col = eb.column(BindingRole::Weight);

  NodeIndex index(nodes);
  std::vector<Edge> records;
  records.reserve(et.row_count());
  std::size_t zero_weight = 0;
  for (std::size_t r = 0; r < et.row_count(); ++r) {
    const auto& row = et.rows[r];
    Edge rec;
    rec.src = resolve_node_ref(row[src_col], index, r + 1);
    rec.dst = resolve_node_ref(row[dst_col], index, r + 1);
    if (weight_col) {
      auto w = parse_double(row[*weight_col]);
      if (!w || *w < 0.0) {
        throw RowError(ErrorKind::NegativeWeight,
                       "weight '" + row[*weight_col] + "' is not a non-negative number", r + 1);
      }
      if (*w == 0.0) {
        ++zero_weight;
        continue;
      }
      rec.weight = *w;
    }
    records.push_back(rec);
  }

  NetworkFlags flags;
  flags.directed = pair.edges.record_classes.contains(vocab::kDirectedEdge);
  flags.represents_paths = std::any_of(
      pair.edges.record_classes.begin(), pair.edges.record_classes.end(),
      [&](const std::string& cls) { return options.route_classes.contains(cls); });
  flags.has_geo = lat_col.has_value() && lon_col.has_value();
  flags.has_weights = weight_col.has_value();

  Network net(std::move(nodes), records, flags);
  if (zero_weight) {
    net.add_warning("dropped " + std::to_string(zero_weight) + " zero-weight record(s)");
  }
  return net;
}

Network undirected_view(const Network& net) {
  if (!net.directed()) return net;
  NetworkFlags flags = net.flags();
  flags.directed = false;
  Network view(net.nodes(), net.edges(), flags);
  for (const auto& w : net.warnings()) view.add_warning(w);
  return view;
}

CapabilitySet capabilities_of(const Network& net) {
  CapabilitySet caps;
  if (net.has_geo()) caps.insert(Capability::HasGeo);
  if (net.has_weights()) caps.insert(Capability::HasWeights);
  if (net.represents_paths()) caps.insert(Capability::RepresentsPaths);
  if (net.edge_count() > 0) caps.insert(Capability::HasConnectionCounts);
  return caps;
}

}  // namespace sbinet
