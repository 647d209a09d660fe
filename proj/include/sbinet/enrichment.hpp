#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbinet/csv.hpp"
#include "sbinet/discovery.hpp"
#include "sbinet/metrics.hpp"
#include "sbinet/network.hpp"

namespace sbinet {

/// Everything computed for one network. Members stay empty for metrics that
/// were not applicable.
struct MetricResults {
  std::set<std::string> applicable;  // metric ids
  std::size_t k = 10;
  PathCriterion criterion = PathCriterion::Hops;

  std::vector<std::size_t> degree;
  std::vector<double> weighted_degree;
  std::vector<double> degree_centrality;
  std::optional<Components> components;
  std::optional<Partition> communities;
  std::optional<double> average_degree;
  std::optional<double> weighted_average_degree;
  std::optional<double> density;
  std::optional<double> entropy;
  std::vector<std::pair<std::size_t, std::size_t>> lowest_degree;
  std::optional<PathAnalysis> paths;

  std::vector<std::string> warnings;

  bool has(std::string_view metric_id) const { return applicable.contains(std::string(metric_id)); }
};

/// Computes the applicable metrics only; path metrics come from one sweep.
MetricResults compute_metrics(const Network& net, const std::vector<std::string>& metric_ids,
                              std::size_t k, const PathOptions& options = {});

/// Prefix of every appended column.
inline constexpr std::string_view kEnrichmentPrefix = "sbi_";

namespace column_names {
inline constexpr std::string_view kDegree = "sbi_degree";
inline constexpr std::string_view kWeightedDegree = "sbi_weighted_degree";
inline constexpr std::string_view kDegreeCentrality = "sbi_degree_centrality";
inline constexpr std::string_view kCommunity = "sbi_community";
inline constexpr std::string_view kComponent = "sbi_component";
inline constexpr std::string_view kBetweenness = "sbi_betweenness";
inline constexpr std::string_view kEccentricity = "sbi_eccentricity";
// decimal degrees after coordinate scaling
inline constexpr std::string_view kLatitude = "sbi_lat";
inline constexpr std::string_view kLongitude = "sbi_lon";
inline constexpr std::string_view kSource = "sbi_source";
inline constexpr std::string_view kTarget = "sbi_target";
}  // namespace column_names

struct EnrichedTables {
  DataTable nodes;
  DataTable edges;
  nlohmann::json metrics;  // scalar summary plus path and bottom-k lists
};

/// Appends per-node results after the original node columns (file row
/// order is kept) and the resolved endpoint ids to the edge table. Nothing is
/// appended when no metric is applicable.
EnrichedTables enrich_tables(const ValidatedPair& pair, const Network& net,
                             const MetricResults& results);

/// Nine significant digits, as written to CSV cells.
std::string format_number(double value);

/// The double nearest to `value` printed with nine significant digits.
double round_significant(double value);

}  // namespace sbinet
