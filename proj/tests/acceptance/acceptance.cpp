// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "annotated.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sbinet/annotated_dataset.hpp"
#include "sbinet/dashboard.hpp"
#include "sbinet/metrics.hpp"
#include "sbinet/network.hpp"

using namespace sbinet;
namespace fs = std::filesystem;
namespace oracle = testing::oracle;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first few mismatches of one criterion.
struct Check {
  std::vector<std::string> problems;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++count;
    if (problems.size() < 3) problems.push_back(what);
  }
  bool ok() const { return count == 0; }
};

int failures = 0;

void report(const char* name, const Check& c, const std::string& detail) {
  std::string line = c.ok() ? detail : std::to_string(c.count) + " problem(s): ";
  if (!c.ok()) {
    for (std::size_t i = 0; i < c.problems.size(); ++i) line += (i ? "; " : "") + c.problems[i];
  }
  std::printf("%s %-22s %s\n", c.ok() ? "PASS" : "FAIL", name, line.c_str());
  std::fflush(stdout);
  if (!c.ok()) ++failures;
}

void guarded(const char* name, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  report(name, c, detail);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

// ---------------------------------------------------------------------------

std::string metric_oracles(Check& c) {
  const auto start = Clock::now();
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> prob(0.1, 0.85);
  const int graphs = 200;
  for (int g = 0; g < graphs; ++g) {
    const bool weighted = g % 2 == 1;
    const bool directed = g % 4 >= 2;
    auto spec = testing::random_graph(rng, size(rng), prob(rng), directed, weighted);
    auto net = testing::make_network(spec);
    auto a = analyze_paths(net, 0, {weighted ? PathCriterion::Weight : PathCriterion::Hops, 1});
    const auto d = oracle::floyd_warshall(spec, weighted);
    const auto bc = oracle::betweenness(spec, weighted);
    const std::string tag = "graph " + std::to_string(g);
    for (std::size_t v = 0; v < spec.n; ++v) {
      c.expect(std::abs(a.betweenness[v] - bc[v]) <= 1e-9, tag + " betweenness");
      c.expect(std::abs(a.eccentricity[v] - oracle::eccentricity(d, v)) <= 1e-9, tag + " eccentricity");
    }
    if (!spec.edges.empty()) {
      c.expect(a.diameter && std::abs(a.diameter->value - oracle::diameter(d)) <= 1e-9, tag + " diameter");
    }
    const double apl = oracle::average_path_length(d);
    if (std::isnan(apl)) {
      c.expect(!a.average_path_length, tag + " path length should be undefined");
    } else {
      c.expect(a.average_path_length && std::abs(*a.average_path_length - apl) <= 1e-9,
               tag + " average path length");
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, fmt("took %.2f s (limit 30 s)", elapsed));
  return std::to_string(graphs) + " graphs, tol 1e-9, " + fmt("%.2f s", elapsed);
}

std::string modularity_optimum(Check& c) {
  std::vector<std::pair<std::string, testing::Spec>> set = {
      {"two-triangle bridge", testing::two_triangles(true)},
      {"two triangles", testing::two_triangles(false)},
  };
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t between = 0; 2 * k + between <= 10; ++between) {
      set.push_back({"barbell(" + std::to_string(k) + "," + std::to_string(between) + ")",
                     testing::barbell(k, between)});
    }
  }
  for (std::size_t n = 2; n <= 10; ++n) set.push_back({"K" + std::to_string(n), testing::complete_graph(n)});
  for (const auto& [name, spec] : set) {
    auto p = detect_communities(testing::make_network(spec));
    const double best = oracle::max_modularity(spec);
    c.expect(std::abs(p.modularity - best) <= 1e-9,
             name + fmt(": Q=%.12f", p.modularity) + fmt(" optimum %.12f", best));
  }
  return std::to_string(set.size()) + " graphs (v <= 10) at the exhaustive optimum, tol 1e-9";
}

std::string closed_forms(Check& c) {
  using testing::make_network;
  const double tol = 1e-12;
  auto near = [&](double got, double want, const std::string& what) {
    c.expect(std::abs(got - want) <= tol, what + fmt(" = %.17g", got));
  };
  near(density(make_network(testing::complete_graph(4))), 1.0, "density(K4)");
  near(degree_centrality(make_network(testing::star_graph(4)))[0], 1.0, "centrality(S4 center)");
  near(entropy(make_network(testing::cycle_graph(6))), 0.0, "entropy(C6)");
  near(entropy(make_network(testing::complete_graph(5))), 0.0, "entropy(K5)");
  near(modularity(make_network(testing::two_triangles(false)), {0, 0, 0, 1, 1, 1}), 0.5,
       "modularity(two triangles)");
  near(average_path_length(make_network(testing::path_graph(3))), 4.0 / 3.0, "l(P3)");
  return "density, centrality, entropy, modularity, l(P3) within 1e-12";
}

std::set<std::string> indicators_via_cli(Check& c, const char* nodes, const char* edges,
                                         std::set<std::string>* metrics = nullptr) {
  auto r = testing::run_cli("discover " + testing::pair_args(nodes, edges));
  c.expect(r.exit_code == 0, std::string("discover ") + nodes + " exited " + std::to_string(r.exit_code));
  if (r.exit_code != 0) return {};
  auto doc = nlohmann::json::parse(r.out);
  if (metrics) {
    for (const auto& m : doc["applicable_metrics"]) metrics->insert(m.get<std::string>());
  }
  std::set<std::string> out;
  for (const auto& i : doc["applicable_indicators"]) out.insert(i.get<std::string>());
  return out;
}

std::string discovery_gating(Check& c) {
  const std::set<std::string> path_indicators = {"diameter-route", "terminal-candidates", "express-routes"};
  const std::set<std::string> path_metrics = {"shortest-path", "eccentricity", "diameter",
                                              "average-path-length", "betweenness"};
  const std::set<std::string> maps = {"communities-map", "centrality-map", "diameter-route",
                                      "terminal-candidates"};

  std::set<std::string> bike_metrics, bus_metrics;
  auto bike = indicators_via_cli(c, "bike_nodes.csv", "bike_edges.csv", &bike_metrics);
  auto bus = indicators_via_cli(c, "bus_nodes.csv", "bus_edges.csv", &bus_metrics);
  auto bus_nogeo = indicators_via_cli(c, "bus_nogeo_nodes.csv", "bus_edges.csv");

  for (const auto& id : path_indicators) {
    c.expect(!bike.contains(id), "bike offers " + id);
    c.expect(bus.contains(id), "bus lacks " + id);
  }
  for (const auto& id : path_metrics) {
    c.expect(!bike_metrics.contains(id), "bike computes " + id);
    c.expect(bus_metrics.contains(id), "bus lacks metric " + id);
  }
  c.expect(bus.size() == 8, "bus offers " + std::to_string(bus.size()) + " indicators, not 8");
  std::set<std::string> removed;
  std::set_difference(bus.begin(), bus.end(), bus_nogeo.begin(), bus_nogeo.end(),
                      std::inserter(removed, removed.begin()));
  c.expect(removed == maps, "dropping geo removed " + std::to_string(removed.size()) + " indicators");
  c.expect(std::includes(bus.begin(), bus.end(), bus_nogeo.begin(), bus_nogeo.end()),
           "dropping geo added indicators");
  return "bike " + std::to_string(bike.size()) + ", bus " + std::to_string(bus.size()) +
         ", bus without geo " + std::to_string(bus_nogeo.size()) + " indicators";
}

std::string domain_detection(Check& c) {
  const std::vector<std::tuple<const char*, const char*, std::string>> cases = {
      {"bike_nodes.csv", "bike_edges.csv", "BicycleShare"},
      {"bus_nodes.csv", "bus_edges.csv", "Bus"},
      {"subway_nodes.csv", "subway_edges.csv", "Subway"},
      {"unknown_nodes.csv", "unknown_edges.csv", "Unknown"},
  };
  for (const auto& [nodes, edges, expected] : cases) {
    auto r = testing::run_cli("inspect " + testing::pair_args(nodes, edges));
    std::string got = r.exit_code == 0 ? nlohmann::json::parse(r.out).value("domain", "") : "<exit " +
                                                                      std::to_string(r.exit_code) + ">";
    c.expect(got == expected, std::string(nodes) + " -> " + got + ", expected " + expected);
  }
  return "bike/bus/subway/none -> BicycleShare/Bus/Subway/Unknown";
}

std::string determinism(Check& c) {
  auto dir = testing::scratch_dir("determinism");
  const std::string args = "build " + testing::pair_args("bike_nodes.csv", "bike_edges.csv") + " --reproducible";
  for (const char* run : {"a", "b"}) {
    auto r = testing::run_cli(args + " --out " + quoted(dir / run));
    c.expect(r.exit_code == 0, std::string("build ") + run + " exited " + std::to_string(r.exit_code));
  }
  const fs::path golden = SBINET_GOLDEN "/bike";
  for (const char* file : {"dashboard.json", "nodes.csv", "edges.csv", "metrics.json"}) {
    const auto a = slurp(dir / "a" / file);
    c.expect(!a.empty() && a == slurp(dir / "b" / file), std::string(file) + " differs between runs");
    c.expect(a == slurp(golden / file), std::string(file) + " differs from the golden copy");
  }
  auto diagnostics = validate_bundle(dir / "a");
  for (const auto& d : diagnostics) c.expect(false, d.code + ": " + d.message);
  fs::remove_all(dir);
  return "two builds byte-identical, equal to golden, 0 diagnostics";
}

std::string format_fidelity(Check& c) {
  auto stations = load_annotated_dataset(testing::fixture("excerpt_stations.csv"));
  auto trips = load_annotated_dataset(testing::fixture("excerpt_trips.csv"));
  auto col = [](const AnnotatedDataset& ds, BindingRole role) {
    auto v = ds.bindings.column(role);
    return v ? static_cast<long>(*v) : -1L;
  };
  c.expect(stations.role == DatasetRole::NodeSet, "stations are not a NodeSet");
  c.expect(col(stations, BindingRole::Id) == 0, "station id column");
  c.expect(col(stations, BindingRole::Longitude) == 1, "station long column");
  c.expect(col(stations, BindingRole::Latitude) == 2, "station lat column");
  c.expect(col(stations, BindingRole::Label) == 3, "station label column");
  c.expect(stations.bindings.roles.size() == 4, "station binding count");
  c.expect(trips.role == DatasetRole::EdgeSet, "trips are not an EdgeSet");
  c.expect(col(trips, BindingRole::EdgeId) == 0, "trip id column");
  c.expect(col(trips, BindingRole::User) == 1, "trip user column");
  c.expect(col(trips, BindingRole::Source) == 4, "trip source column");
  c.expect(col(trips, BindingRole::Target) == 7, "trip target column");
  c.expect(trips.bindings.roles.size() == 4, "trip binding count");

  auto nodes = nodes_from_dataset(stations);
  NodeIndex index(nodes);
  auto hit = index.resolve("1 - Praça Luiza Távora");
  c.expect(hit && nodes[*hit].id == "1", "\"1 - Praça Luiza Távora\" does not resolve to station 1");
  return "both excerpts bind as listed; \"1 - Praça Luiza Távora\" -> station 1";
}

// Bus-style pair: route-typed directed edges with weights and coordinates.
void write_large_pair(const fs::path& dir, std::size_t n, std::size_t m) {
  std::mt19937_64 rng(5000);
  std::uniform_real_distribution<double> lat(-3.85, -3.70), lon(-38.65, -38.45);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> trips(1, 40);

  std::vector<testing::NodeRow> nodes;
  nodes.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    nodes.push_back({std::to_string(i), "Stop " + std::to_string(i), fmt("%.6f", lat(rng)), fmt("%.6f", lon(rng))});
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<testing::EdgeRow> edges;
  edges.reserve(m);
  auto add = [&](std::size_t a, std::size_t b) {
    if (a == b || !seen.insert({a, b}).second) return;
    edges.push_back({std::to_string(a + 1), std::to_string(b + 1), std::to_string(trips(rng))});
  };
  for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);  // one long loop keeps it connected
  while (edges.size() < m) add(pick(rng), pick(rng));
  std::ofstream(dir / "nodes.csv", std::ios::binary) << testing::node_file(nodes);
  std::ofstream(dir / "edges.csv", std::ios::binary) << testing::edge_file(edges);
}

std::string performance(Check& c) {
  const std::size_t n = 5000, m = 50000;
  auto dir = testing::scratch_dir("performance");
  write_large_pair(dir, n, m);
  const auto start = Clock::now();
  auto r = testing::run_cli("build --nodes " + quoted(dir / "nodes.csv") + " --edges " +
                            quoted(dir / "edges.csv") + " --out " + quoted(dir / "bundle") + " --reproducible");
  const double elapsed = seconds_since(start);
  c.expect(r.exit_code == 0, "build exited " + std::to_string(r.exit_code));
  if (r.exit_code == 0) {
    auto metrics = nlohmann::json::parse(slurp(dir / "bundle" / "metrics.json"));
    c.expect(metrics["network"]["nodes"] == n, "node count");
    c.expect(metrics["network"]["edges"] == m, "edge count");
    auto header = parse_csv(slurp(dir / "bundle" / "nodes.csv")).header;
    c.expect(std::find(header.begin(), header.end(), "sbi_betweenness") != header.end(),
             "betweenness missing");
  }
  c.expect(elapsed < 60.0, fmt("took %.2f s (limit 60 s)", elapsed));
  fs::remove_all(dir);
  return "5000 nodes, 50000 edges, betweenness included, " + fmt("%.2f s", elapsed);
}

}  // namespace

int main() {
  guarded("metric-oracles", metric_oracles);
  guarded("modularity-optimum", modularity_optimum);
  guarded("closed-forms", closed_forms);
  guarded("discovery-gating", discovery_gating);
  guarded("domain-detection", domain_detection);
  guarded("determinism", determinism);
  guarded("format-fidelity", format_fidelity);
  guarded("performance", performance);
  return failures;
}
