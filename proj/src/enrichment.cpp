#include "sbinet/enrichment.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "sbinet/catalog.hpp"

namespace sbinet {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

MetricResults compute_metrics(const Network& net, const std::vector<std::string>& metric_ids,
                              std::size_t k, const PathOptions& options) {
  namespace m = metric_ids;
  MetricResults r;
  r.applicable.insert(metric_ids.begin(), metric_ids.end());
  r.k = k;
  r.criterion = options.criterion;
  r.warnings = net.warnings();

  if (r.has(m::kAverageDegree) || r.has(m::kLowestDegree) || r.has(m::kEntropy)) {
    r.degree = node_degrees(net);
  }
  if (r.has(m::kAverageDegree)) r.average_degree = average_degree(net);
  if (r.has(m::kWeightedAverageDegree)) r.weighted_average_degree = weighted_average_degree(net);
  if (r.has(m::kNodeWeightedDegree)) r.weighted_degree = node_weighted_degrees(net);
  if (r.has(m::kDegreeCentrality)) r.degree_centrality = degree_centrality(net);
  if (r.has(m::kDensity)) r.density = density(net);
  if (r.has(m::kEntropy)) r.entropy = entropy(net);
  if (r.has(m::kComponents)) r.components = connected_components(net);
  if (r.has(m::kCommunities)) r.communities = detect_communities(net);
  if (r.has(m::kLowestDegree)) r.lowest_degree = bottom_k_degree(net, k);

  const bool any_path = r.has(m::kShortestPath) || r.has(m::kEccentricity) ||
                        r.has(m::kDiameter) || r.has(m::kAveragePathLength) ||
                        r.has(m::kBetweenness);
  if (any_path) {
    r.paths = analyze_paths(net, k, options);
    if (r.paths->unreachable_pairs > 0) {
      r.warnings.push_back(std::to_string(r.paths->unreachable_pairs) +
                           " ordered node pair(s) are unreachable and were left out of "
                           "eccentricity and average path length");
    }
  }
  return r;
}

namespace {

std::string display_name(const Node& node) { return node.label ? *node.label : node.id; }

nlohmann::json path_json(const Network& net, const Path& path) {
  nlohmann::json ids = nlohmann::json::array();
  for (auto v : path.nodes) ids.push_back(net.nodes()[v].id);
  return {
      {"route", display_name(net.nodes()[path.nodes.front()]) + " → " +
                    display_name(net.nodes()[path.nodes.back()])},
      {"length", round_significant(path.length)},
      {"nodes", std::move(ids)},
  };
}

nlohmann::json metrics_json(const Network& net, const MetricResults& r) {
  namespace m = metric_ids;
  nlohmann::json j;
  j["network"] = {
      {"nodes", net.node_count()},           {"edges", net.edge_count()},
      {"directed", net.directed()},          {"represents_paths", net.represents_paths()},
      {"has_geo", net.has_geo()},            {"has_weights", net.has_weights()},
  };
  j["criterion"] = std::string(to_string(r.criterion));
  j["k"] = r.k;
  j["applicable"] = nlohmann::json::array();
  for (const auto& spec : builtin_catalog().metrics) {
    if (r.has(spec.id)) j["applicable"].push_back(spec.id);
  }
  auto scalar = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = round_significant(*v);
  };
  scalar("average_degree", r.average_degree);
  scalar("weighted_average_degree", r.weighted_average_degree);
  scalar("density", r.density);
  scalar("entropy", r.entropy);
  if (r.components) j["components"] = r.components->count;
  if (r.communities) {
    j["communities"] = r.communities->count;
    j["modularity"] = round_significant(r.communities->modularity);
    j["modularity_levels"] = nlohmann::json::array();
    for (double q : r.communities->level_modularity) {
      j["modularity_levels"].push_back(round_significant(q));
    }
  }
  if (!r.degree.empty()) {
    std::map<std::size_t, std::size_t> histogram;
    for (auto d : r.degree) ++histogram[d];
    j["degree_histogram"] = nlohmann::json::array();
    for (auto [d, c] : histogram) j["degree_histogram"].push_back({{"degree", d}, {"count", c}});
  }
  if (r.has(m::kLowestDegree)) {
    j["lowest_degree"] = nlohmann::json::array();
    for (auto [v, d] : r.lowest_degree) {
      j["lowest_degree"].push_back(
          {{"node", net.nodes()[v].id}, {"label", display_name(net.nodes()[v])}, {"degree", d}});
    }
  }
  if (r.paths) {
    const auto& p = *r.paths;
    if (r.has(m::kDiameter) && p.diameter) {
      j["diameter"] = round_significant(p.diameter->value);
      j["diameter_path"] = path_json(net, p.diameter->witness);
    }
    if (r.has(m::kAveragePathLength) && p.average_path_length) {
      j["average_path_length"] = round_significant(*p.average_path_length);
    }
    j["reachable_pairs"] = p.reachable_pairs;
    j["unreachable_pairs"] = p.unreachable_pairs;
    if (r.has(m::kShortestPath)) {
      j["longest_min_paths"] = nlohmann::json::array();
      for (const auto& path : p.longest_min_paths) j["longest_min_paths"].push_back(path_json(net, path));
    }
  }
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

EnrichedTables enrich_tables(const ValidatedPair& pair, const Network& net,
                             const MetricResults& results) {
  namespace m = metric_ids;
  namespace col = column_names;
  EnrichedTables out{pair.nodes.table, pair.edges.table, metrics_json(net, results)};
  if (results.applicable.empty()) return out;

  // Node positions are sorted by id; the table keeps file order.
  std::vector<std::size_t> position(net.node_count());
  for (std::size_t v = 0; v < net.node_count(); ++v) position[net.nodes()[v].row] = v;

  auto append = [&](std::string_view name, auto&& cell) {
    std::vector<std::string> values;
    values.reserve(position.size());
    for (auto v : position) values.push_back(cell(v));
    out.nodes.append_column(std::string(name), std::move(values));
  };
  auto number = [](double x) { return format_number(x); };

  if (!results.degree.empty() && results.has(m::kAverageDegree)) {
    append(col::kDegree, [&](std::size_t v) { return std::to_string(results.degree[v]); });
  }
  if (!results.weighted_degree.empty()) {
    append(col::kWeightedDegree, [&](std::size_t v) { return number(results.weighted_degree[v]); });
  }
  if (!results.degree_centrality.empty()) {
    append(col::kDegreeCentrality,
           [&](std::size_t v) { return number(results.degree_centrality[v]); });
  }
  if (results.communities) {
    append(col::kCommunity,
           [&](std::size_t v) { return std::to_string(results.communities->community[v]); });
  }
  if (results.components) {
    append(col::kComponent,
           [&](std::size_t v) { return std::to_string(results.components->label[v]); });
  }
  if (results.paths && results.has(m::kBetweenness)) {
    append(col::kBetweenness, [&](std::size_t v) { return number(results.paths->betweenness[v]); });
  }
  if (results.paths && results.has(m::kEccentricity)) {
    append(col::kEccentricity,
           [&](std::size_t v) { return number(results.paths->eccentricity[v]); });
  }

  if (net.has_geo()) {
    auto coordinate = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
    append(col::kLatitude, [&](std::size_t v) { return coordinate(net.nodes()[v].lat); });
    append(col::kLongitude, [&](std::size_t v) { return coordinate(net.nodes()[v].lon); });
  }

  const auto& eb = pair.edges.bindings;
  const std::size_t src_col = *eb.column(BindingRole::Source);
  const std::size_t dst_col = *eb.column(BindingRole::Target);
  NodeIndex index(net.nodes());
  std::vector<std::string> sources, targets;
  for (std::size_t r = 0; r < out.edges.row_count(); ++r) {
    const auto& row = out.edges.rows[r];
    sources.push_back(net.nodes()[resolve_node_ref(row[src_col], index, r + 1)].id);
    targets.push_back(net.nodes()[resolve_node_ref(row[dst_col], index, r + 1)].id);
  }
  out.edges.append_column(std::string(col::kSource), std::move(sources));
  out.edges.append_column(std::string(col::kTarget), std::move(targets));
  return out;
}

}  // namespace sbinet
