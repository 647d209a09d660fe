#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "fixtures.hpp"
#include "sbinet/error.hpp"
#include "sbinet/pipeline.hpp"

using namespace sbinet;
namespace fs = std::filesystem;

namespace {

struct Built {
  Inspection inspection;
  BuildResult result;
};

Built build(const char* nodes, const char* edges,
            const std::optional<CustomizationManifest>& manifest = std::nullopt) {
  auto ins = inspect(testing::fixture(nodes), testing::fixture(edges));
  auto dis = discover(ins);
  PipelineOptions options;
  options.threads = 1;
  auto result = build_dashboard(ins, dis, options, manifest);
  return {std::move(ins), std::move(result)};
}

std::vector<std::string> ids(const ConceptualModel& m) {
  std::vector<std::string> out;
  for (const auto& o : m.objects) out.push_back(o.id);
  return out;
}

std::vector<std::string> tail(const std::vector<std::string>& header, std::size_t from) {
  return {header.begin() + static_cast<std::ptrdiff_t>(from), header.end()};
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected failure");
  return ErrorKind::IoError;
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_SUITE("dashboard") {
  TEST_CASE("bike: five objects in catalog order with enriched columns") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    const auto& m = b.result.model;
    CHECK(m.domain == DomainClass::BicycleShare);
    CHECK(ids(m) == std::vector<std::string>{"avg-interconnections", "connections-vs-usage",
                                             "communities-map", "centrality-map", "lowest-offer"});
    const auto& header = b.result.tables.nodes.header;
    REQUIRE(header.size() == 4 + 7);
    CHECK(tail(header, 4) == std::vector<std::string>{"sbi_degree", "sbi_weighted_degree",
                                                      "sbi_degree_centrality", "sbi_community",
                                                      "sbi_component", "sbi_lat", "sbi_lon"});
    CHECK(m.node_columns.lat == "sbi_lat");
    CHECK(m.node_columns.id == "STATION NUMBER");
    CHECK(b.result.tables.edges.header.back() == "sbi_target");

    const auto* scatter = m.find("connections-vs-usage");
    REQUIRE(scatter);
    CHECK(scatter->viz == Visualization::ScatterPlot);
    CHECK(scatter->measures.size() == 2);
    CHECK(scatter->measures[1].column == "sbi_weighted_degree");
    const auto* hist = m.find("avg-interconnections");
    REQUIRE(hist);
    CHECK_FALSE(hist->dimension.has_value());
    REQUIRE(hist->style.reference_line.has_value());
    CHECK(*hist->style.reference_line == doctest::Approx(*b.result.results.average_degree));
    CHECK(m.find("lowest-offer")->style.limit == 10u);
    CHECK(m.find("communities-map")->style.color_by == "sbi_community");
  }

  TEST_CASE("bus: all eight, path columns and metric-backed routes") {
    auto b = build("bus_nodes.csv", "bus_edges.csv");
    const auto& m = b.result.model;
    CHECK(m.objects.size() == 8);
    const auto& header = b.result.tables.nodes.header;
    CHECK(std::find(header.begin(), header.end(), "sbi_betweenness") != header.end());
    CHECK(std::find(header.begin(), header.end(), "sbi_eccentricity") != header.end());
    const auto* route = m.find("diameter-route");
    REQUIRE(route);
    CHECK(route->data == DataSource::Metrics);
    CHECK(route->metrics_key == "diameter_path");
    CHECK(m.find("express-routes")->metrics_key == "longest_min_paths");
    CHECK(b.result.tables.metrics["unreachable_pairs"] == 300);
  }

  TEST_CASE("scaled coordinates sit next to the raw cells") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    const auto& t = b.result.tables.nodes;
    const auto lat = *t.column_index("sbi_lat");
    const auto raw = *t.column_index("LAT");
    for (const auto& row : t.rows) {
      CHECK(std::stod(row[lat]) == doctest::Approx(std::stod(row[raw]) / 1e6));
    }
  }

  TEST_CASE("enrichment keeps rows and original cells") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    const auto& original = b.inspection.pair.nodes.table;
    const auto& enriched = b.result.tables.nodes;
    REQUIRE(enriched.row_count() == original.row_count());
    for (std::size_t r = 0; r < original.row_count(); ++r) {
      for (std::size_t c = 0; c < original.col_count(); ++c) CHECK(enriched.rows[r][c] == original.rows[r][c]);
    }
  }

  TEST_CASE("empty applicable set leaves tables unchanged") {
    auto ins = inspect(testing::fixture("bike_nodes.csv"), testing::fixture("bike_edges.csv"));
    MetricResults none;
    auto tables = enrich_tables(ins.pair, ins.network, none);
    CHECK(tables.nodes.header == ins.pair.nodes.table.header);
    CHECK(tables.nodes.rows == ins.pair.nodes.table.rows);
    CHECK(tables.edges.header == ins.pair.edges.table.header);
    CHECK(kind_of([&] {
            build_conceptual_model({}, none, tables, ins.pair, ins.domain);
          }) == ErrorKind::EmptyDashboard);
  }

  TEST_CASE("customization: order, overrides, additions") {
    auto base = build("bike_nodes.csv", "bike_edges.csv").result.model;
    auto manifest = parse_manifest(R"({
      "order": [5, "avg-interconnections"],
      "overrides": {"2": {"title": "Degree against trips"}},
      "add": [{"id": "components-bar", "title": "Components", "viz": "BarChart",
               "dimension": "sbi_component",
               "measure": [{"op": "Count", "column": "sbi_degree"}]}]
    })");
    auto m = apply_customization(base, manifest);
    CHECK(ids(m) == std::vector<std::string>{"lowest-offer", "avg-interconnections", "connections-vs-usage",
                                             "communities-map", "centrality-map", "components-bar"});
    CHECK(m.find("connections-vs-usage")->title == "Degree against trips");
    CHECK(apply_customization(m, manifest).objects == m.objects);
  }

  TEST_CASE("customization failures") {
    auto base = build("bike_nodes.csv", "bike_edges.csv").result.model;
    CHECK(kind_of([&] { apply_customization(base, parse_manifest(R"({"order": ["nope"]})")); }) ==
          ErrorKind::UnknownObjectId);
    CHECK(kind_of([&] { apply_customization(base, parse_manifest(R"({"order": [7]})")); }) ==
          ErrorKind::UnknownObjectId);
    CHECK(kind_of([&] {
            apply_customization(base, parse_manifest(R"({"overrides": {"2": {"measure":
              [{"op": "Direct", "column": "sbi_betweenness"}]}}})"));
          }) == ErrorKind::UnknownColumn);
    CHECK(kind_of([&] {
            apply_customization(base, parse_manifest(R"({"overrides": {"2": {"dimension": null}}})"));
          }) == ErrorKind::InvalidManifest);
    CHECK(kind_of([] { parse_manifest("[1]"); }) == ErrorKind::InvalidManifest);
    CHECK(kind_of([] { parse_manifest(R"({"colour": 1})"); }) == ErrorKind::InvalidManifest);
    CHECK(kind_of([] { parse_manifest("{"); }) == ErrorKind::InvalidManifest);
  }

  TEST_CASE("emit then validate") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    auto dir = testing::scratch_dir("emit");
    emit_bundle(b.result.model, b.result.tables, dir, {true, ""});
    CHECK(validate_bundle(dir).empty());

    auto doc = nlohmann::json::parse(read_text_file(dir / "dashboard.json"));
    CHECK(doc["version"] == 1);
    CHECK(doc["domain"] == "BicycleShare");
    CHECK_FALSE(doc.contains("generated_at"));
    CHECK(doc["objects"].size() == 5);

    SUBCASE("a missing file is fatal") {
      fs::remove(dir / "metrics.json");
      auto ds = validate_bundle(dir);
      REQUIRE_FALSE(ds.empty());
      CHECK(ds[0].severity == Severity::Fatal);
      CHECK(ds[0].code == "MissingFile");
    }
    SUBCASE("a dropped column leaves a binding unresolved") {
      auto nodes = parse_csv(read_text_file(dir / "nodes.csv"));
      auto at = std::find(nodes.header.begin(), nodes.header.end(), "sbi_community") - nodes.header.begin();
      nodes.header.erase(nodes.header.begin() + at);
      for (auto& row : nodes.rows) row.erase(row.begin() + at);
      write(dir / "nodes.csv", write_csv(nodes));
      CHECK(has_code(validate_bundle(dir), "UnresolvedBinding"));
    }
    SUBCASE("a malformed object is a schema violation") {
      doc["objects"][0]["viz"] = "PieChart";
      write(dir / "dashboard.json", doc.dump(2));
      CHECK(has_code(validate_bundle(dir), "SchemaViolation"));
    }
    fs::remove_all(dir);
  }

  TEST_CASE("emit refuses a model that does not match its tables") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    auto model = b.result.model;
    model.objects[1].measures[0].column = "sbi_missing";
    auto dir = testing::scratch_dir("refuse");
    fs::remove_all(dir);
    CHECK(kind_of([&] { emit_bundle(model, b.result.tables, dir, {true, ""}); }) ==
          ErrorKind::SchemaViolation);
    CHECK_FALSE(fs::exists(dir / "dashboard.json"));
  }

  TEST_CASE("generated_at only when not reproducible") {
    auto b = build("bike_nodes.csv", "bike_edges.csv");
    auto doc = model_to_json(b.result.model, {false, "2026-01-02T03:04:05Z"});
    CHECK(doc["generated_at"] == "2026-01-02T03:04:05Z");
  }

  TEST_CASE("titles follow the domain") {
    auto bus = build("bus_nodes.csv", "bus_edges.csv").result.model;
    CHECK(bus.objects[0].title == "Average interconnections between bus stops");
    auto unknown = build("unknown_nodes.csv", "unknown_edges.csv").result.model;
    CHECK(unknown.objects[0].title == "Average interconnections between nodes");
  }
}
