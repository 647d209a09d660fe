#include "sbinet/catalog.hpp"

#include <array>

namespace sbinet {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view text,
                               const std::array<std::pair<Enum, std::string_view>, N>& table) {
  for (const auto& [value, name] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<Visualization, std::string_view>, 5> kVisualizations{{
    {Visualization::Histogram, "Histogram"},
    {Visualization::BarChart, "BarChart"},
    {Visualization::ScatterPlot, "ScatterPlot"},
    {Visualization::MapPoints, "MapPoints"},
    {Visualization::MapPath, "MapPath"},
}};

constexpr std::array<std::pair<MeasureOp, std::string_view>, 4> kMeasureOps{{
    {MeasureOp::Sum, "Sum"},
    {MeasureOp::Average, "Average"},
    {MeasureOp::Count, "Count"},
    {MeasureOp::Direct, "Direct"},
}};

struct Nouns {
  std::string singular;
  std::string plural;
  std::string plural_capitalized;
};

const std::map<DomainClass, Nouns>& domain_nouns() {
  static const std::map<DomainClass, Nouns> nouns = {
      {DomainClass::BicycleShare, {"bike station", "bike stations", "Bike stations"}},
      {DomainClass::Bus, {"bus stop", "bus stops", "Bus stops"}},
      {DomainClass::Subway, {"subway station", "subway stations", "Subway stations"}},
      {DomainClass::Unknown, {"node", "nodes", "Nodes"}},
  };
  return nouns;
}

// `{n}` singular, `{ns}` plural, `{Ns}` capitalized plural.
std::map<DomainClass, std::string> titles(const std::string& pattern) {
  std::map<DomainClass, std::string> out;
  for (const auto& [domain, nouns] : domain_nouns()) {
    std::string title = pattern;
    for (const auto& [key, value] : {std::pair<std::string, std::string>{"{Ns}", nouns.plural_capitalized},
                                     {"{ns}", nouns.plural},
                                     {"{n}", nouns.singular}}) {
      for (auto pos = title.find(key); pos != std::string::npos; pos = title.find(key)) {
        title.replace(pos, key.size(), value);
      }
    }
    out.emplace(domain, std::move(title));
  }
  return out;
}

std::string s(std::string_view v) { return std::string(v); }

Catalog make_catalog() {
  namespace r = requirement_ids;
  namespace m = metric_ids;
  namespace i = indicator_ids;

  Catalog c;
  c.requirements = {
      {s(r::kConnectionCounts), "requires connection counts",
       parse_pattern("?connections a qoe-m:conexoes .")},
      {s(r::kGeo), "requires geo bindings", parse_pattern("?network a cap:HasGeo .")},
      {s(r::kPaths), "requires represents-paths",
       parse_pattern("?network a cap:RepresentsPaths .")},
      {s(r::kWeights), "requires a weight binding", parse_pattern("?network a cap:HasWeights .")},
  };

  const std::vector<std::string> conn{s(r::kConnectionCounts)};
  const std::vector<std::string> paths{s(r::kConnectionCounts), s(r::kPaths)};
  c.metrics = {
      {s(m::kAverageDegree), conn, ResultKind::Scalar},
      {s(m::kWeightedAverageDegree), conn, ResultKind::Scalar},
      {s(m::kNodeWeightedDegree), conn, ResultKind::PerNode},
      {s(m::kDegreeCentrality), conn, ResultKind::PerNode},
      {s(m::kDensity), conn, ResultKind::Scalar},
      {s(m::kEntropy), conn, ResultKind::Scalar},
      {s(m::kComponents), conn, ResultKind::PerNode},
      {s(m::kCommunities), conn, ResultKind::Partition},
      {s(m::kLowestDegree), conn, ResultKind::NodeList},
      {s(m::kShortestPath), paths, ResultKind::PathList},
      {s(m::kEccentricity), paths, ResultKind::PerNode},
      {s(m::kDiameter), paths, ResultKind::Path},
      {s(m::kAveragePathLength), paths, ResultKind::Scalar},
      {s(m::kBetweenness), paths, ResultKind::PerNode},
  };

  const std::vector<std::string> conn_geo{s(r::kConnectionCounts), s(r::kGeo)};
  const std::vector<std::string> paths_geo{s(r::kConnectionCounts), s(r::kPaths), s(r::kGeo)};
  c.indicators = {
      {s(i::kAverageInterconnections), 1, titles("Average interconnections between {ns}"), conn,
       {s(m::kAverageDegree)}, std::nullopt, {{MeasureOp::Average, "degree"}},
       Visualization::Histogram, ResultKind::Histogram},
      {s(i::kConnectionsVsUsage), 2, titles("Connections vs. usage per {n}"), conn,
       {s(m::kAverageDegree), s(m::kNodeWeightedDegree)}, "node",
       {{MeasureOp::Direct, "degree"}, {MeasureOp::Direct, "weighted_degree"}},
       Visualization::ScatterPlot, ResultKind::PerNode},
      {s(i::kCommunitiesMap), 3, titles("Communities of {ns}"), conn_geo, {s(m::kCommunities)},
       "node", {{MeasureOp::Direct, "community"}}, Visualization::MapPoints,
       ResultKind::Partition},
      {s(i::kCentralityMap), 4, titles("Most central {ns} by degree centrality"), conn_geo,
       {s(m::kDegreeCentrality)}, "node", {{MeasureOp::Direct, "degree_centrality"}},
       Visualization::MapPoints, ResultKind::PerNode},
      {s(i::kLowestOffer), 5, titles("{Ns} with the fewest connections"), conn,
       {s(m::kLowestDegree)}, "node", {{MeasureOp::Direct, "degree"}}, Visualization::BarChart,
       ResultKind::NodeList},
      {s(i::kDiameterRoute), 6, titles("Longest minimum route between {ns}"), paths_geo,
       {s(m::kDiameter)}, "route", {{MeasureOp::Sum, "length"}}, Visualization::MapPath,
       ResultKind::Path},
      {s(i::kTerminalCandidates), 7, titles("{Ns} with the highest betweenness"), paths_geo,
       {s(m::kBetweenness)}, "node", {{MeasureOp::Direct, "betweenness"}},
       Visualization::MapPoints, ResultKind::PerNode},
      {s(i::kExpressRoutes), 8, titles("Longest minimum paths between {ns}"), paths,
       {s(m::kShortestPath)}, "route", {{MeasureOp::Sum, "length"}}, Visualization::BarChart,
       ResultKind::PathList},
  };
  return c;
}

template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Visualization viz) {
  for (const auto& [value, name] : kVisualizations) {
    if (value == viz) return name;
  }
  return "?";
}

std::string_view to_string(MeasureOp op) {
  for (const auto& [value, name] : kMeasureOps) {
    if (value == op) return name;
  }
  return "?";
}

std::string_view to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::Scalar: return "Scalar";
    case ResultKind::PerNode: return "PerNode";
    case ResultKind::Partition: return "Partition";
    case ResultKind::Path: return "Path";
    case ResultKind::PathList: return "PathList";
    case ResultKind::Histogram: return "Histogram";
    case ResultKind::NodeList: return "NodeList";
  }
  return "?";
}

std::optional<Visualization> parse_visualization(std::string_view text) {
  return parse_enum(text, kVisualizations);
}

std::optional<MeasureOp> parse_measure_op(std::string_view text) {
  return parse_enum(text, kMeasureOps);
}

const std::string& IndicatorSpec::title(DomainClass domain) const {
  auto it = titles.find(domain);
  return it != titles.end() ? it->second : titles.at(DomainClass::Unknown);
}

const Requirement* Catalog::requirement(std::string_view id) const {
  return find_by_id(requirements, id);
}
const MetricSpec* Catalog::metric(std::string_view id) const { return find_by_id(metrics, id); }
const IndicatorSpec* Catalog::indicator(std::string_view id) const {
  return find_by_id(indicators, id);
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = make_catalog();
  return catalog;
}

}  // namespace sbinet
