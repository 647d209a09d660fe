#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbinet/domain.hpp"
#include "sbinet/query.hpp"

namespace sbinet {

enum class Visualization { Histogram, BarChart, ScatterPlot, MapPoints, MapPath };
enum class MeasureOp { Sum, Average, Count, Direct };
enum class ResultKind { Scalar, PerNode, Partition, Path, PathList, Histogram, NodeList };

std::string_view to_string(Visualization viz);
std::string_view to_string(MeasureOp op);
std::string_view to_string(ResultKind kind);
std::optional<Visualization> parse_visualization(std::string_view text);
std::optional<MeasureOp> parse_measure_op(std::string_view text);

/// A named existential condition over the knowledge graph plus capability
/// facts. `reason` is what discovery reports when it does not hold.
struct Requirement {
  std::string id;
  std::string reason;
  Pattern pattern;
};

struct MetricSpec {
  std::string id;
  std::vector<std::string> requirements;
  ResultKind kind = ResultKind::Scalar;
};

struct MeasureSpec {
  MeasureOp op = MeasureOp::Direct;
  std::string field;
};

/// One dashboard indicator. An indicator without a dimension has exactly
/// one measure.
struct IndicatorSpec {
  std::string id;
  int number = 0;
  std::map<DomainClass, std::string> titles;
  std::vector<std::string> requirements;
  std::vector<std::string> metrics;
  std::optional<std::string> dimension;
  std::vector<MeasureSpec> measures;
  Visualization visualization = Visualization::BarChart;
  ResultKind result_kind = ResultKind::Scalar;

  const std::string& title(DomainClass domain) const;
};

struct Catalog {
  std::vector<Requirement> requirements;
  std::vector<MetricSpec> metrics;
  std::vector<IndicatorSpec> indicators;

  const Requirement* requirement(std::string_view id) const;
  const MetricSpec* metric(std::string_view id) const;
  const IndicatorSpec* indicator(std::string_view id) const;
};

namespace requirement_ids {
inline constexpr std::string_view kConnectionCounts = "has-connection-counts";
inline constexpr std::string_view kGeo = "has-geo";
inline constexpr std::string_view kPaths = "represents-paths";
inline constexpr std::string_view kWeights = "has-weights";
}  // namespace requirement_ids

namespace metric_ids {
inline constexpr std::string_view kAverageDegree = "average-degree";
inline constexpr std::string_view kWeightedAverageDegree = "weighted-average-degree";
inline constexpr std::string_view kNodeWeightedDegree = "node-weighted-degree";
inline constexpr std::string_view kDegreeCentrality = "degree-centrality";
inline constexpr std::string_view kDensity = "density";
inline constexpr std::string_view kEntropy = "entropy";
inline constexpr std::string_view kComponents = "components";
inline constexpr std::string_view kCommunities = "communities";
inline constexpr std::string_view kLowestDegree = "lowest-degree";
inline constexpr std::string_view kShortestPath = "shortest-path";
inline constexpr std::string_view kEccentricity = "eccentricity";
inline constexpr std::string_view kDiameter = "diameter";
inline constexpr std::string_view kAveragePathLength = "average-path-length";
inline constexpr std::string_view kBetweenness = "betweenness";
}  // namespace metric_ids

namespace indicator_ids {
inline constexpr std::string_view kAverageInterconnections = "avg-interconnections";
inline constexpr std::string_view kConnectionsVsUsage = "connections-vs-usage";
inline constexpr std::string_view kCommunitiesMap = "communities-map";
inline constexpr std::string_view kCentralityMap = "centrality-map";
inline constexpr std::string_view kLowestOffer = "lowest-offer";
inline constexpr std::string_view kDiameterRoute = "diameter-route";
inline constexpr std::string_view kTerminalCandidates = "terminal-candidates";
inline constexpr std::string_view kExpressRoutes = "express-routes";
}  // namespace indicator_ids

/// The fixed catalog: eight indicators, each with its visualization fixed.
const Catalog& builtin_catalog();

}  // namespace sbinet
