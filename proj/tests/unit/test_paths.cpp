#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sbinet/error.hpp"
#include "sbinet/metrics.hpp"

using namespace sbinet;
using testing::make_network;
namespace oracle = testing::oracle;

namespace {

using Nodes = std::vector<std::size_t>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected failure");
  return ErrorKind::IoError;
}

// Square 0-1-2-3-0; the route through 3 is cheaper.
testing::Spec weighted_square() { return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 2, 1, 1}, false}; }

struct Pair {
  double dist;
  std::size_t s, t;
};

// Every finite pair sorted by distance desc, then (s, t).
std::vector<Pair> ranked_pairs(const testing::Spec& spec, const oracle::Matrix& d) {
  std::vector<Pair> out;
  for (std::size_t s = 0; s < spec.n; ++s) {
    for (std::size_t t = 0; t < spec.n; ++t) {
      if (s == t || d[s][t] == oracle::kInf) continue;
      if (!spec.directed && t < s) continue;
      out.push_back({d[s][t], s, t});
    }
  }
  std::sort(out.begin(), out.end(), [](const Pair& a, const Pair& b) {
    if (a.dist != b.dist) return a.dist > b.dist;
    return std::pair(a.s, a.t) < std::pair(b.s, b.t);
  });
  return out;
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("shortest path examples") {
    auto p3 = make_network(testing::path_graph(3));
    CHECK(shortest_path(p3, 0, 2) == Path{{0, 1, 2}, 2.0});
    CHECK(shortest_path(p3, 1, 1) == Path{{1}, 0.0});
    auto square = make_network(weighted_square());
    CHECK(shortest_path(square, 0, 2, PathCriterion::Weight) == Path{{0, 3, 2}, 2.0});
    // by hops both routes tie and the smaller sequence wins
    CHECK(shortest_path(square, 0, 2) == Path{{0, 1, 2}, 2.0});
  }

  TEST_CASE("shortest path failures") {
    auto split = make_network({4, {{0, 1}, {2, 3}}, {}, false});
    CHECK(kind_of([&] { shortest_path(split, 0, 3); }) == ErrorKind::Unreachable);
    CHECK(kind_of([&] { shortest_path(split, 0, 9); }) == ErrorKind::UnknownNode);
    auto directed = make_network({2, {{0, 1}}, {}, true});
    CHECK(kind_of([&] { shortest_path(directed, 1, 0); }) == ErrorKind::Unreachable);
  }

  TEST_CASE("path metrics are gated and time is rejected") {
    auto trips = make_network(testing::path_graph(3), false);
    CHECK(kind_of([&] { betweenness(trips); }) == ErrorKind::PathMetricNotApplicable);
    CHECK(kind_of([&] { shortest_path(trips, 0, 1); }) == ErrorKind::PathMetricNotApplicable);
    CHECK(kind_of([&] { analyze_paths(trips, 3); }) == ErrorKind::PathMetricNotApplicable);
    auto routes = make_network(testing::path_graph(3));
    CHECK(kind_of([&] { diameter(routes, PathCriterion::Time); }) == ErrorKind::UnsupportedCriterion);
    CHECK(parse_criterion("time") == PathCriterion::Time);
    CHECK_FALSE(parse_criterion("fastest").has_value());
  }

  TEST_CASE("eccentricity, diameter, average path length") {
    auto p3 = make_network(testing::path_graph(3));
    CHECK(eccentricity(p3, 0) == 2.0);
    CHECK(eccentricity(p3, 1) == 1.0);
    for (std::size_t v = 0; v < 4; ++v) CHECK(eccentricity(make_network(testing::complete_graph(4)), v) == 1.0);

    auto p4 = diameter(make_network(testing::path_graph(4)));
    CHECK(p4.value == 3.0);
    CHECK(p4.witness.nodes == Nodes{0, 1, 2, 3});
    CHECK(diameter(make_network(testing::complete_graph(4))).value == 1.0);
    CHECK(diameter(make_network(testing::two_triangles(true))).value == 3.0);
    CHECK(kind_of([] { diameter(make_network({3, {}, {}, false})); }) == ErrorKind::EmptyEdgeSet);

    CHECK(std::abs(average_path_length(p3) - 4.0 / 3) <= 1e-12);
    CHECK(average_path_length(make_network(testing::complete_graph(4))) == 1.0);
    CHECK(average_path_length(make_network({4, {{0, 1}, {2, 3}}, {}, false})) == 1.0);
    CHECK(kind_of([] { average_path_length(make_network({3, {}, {}, false})); }) ==
          ErrorKind::NoFinitePairs);
  }

  TEST_CASE("betweenness examples") {
    auto p3 = betweenness(make_network(testing::path_graph(3)));
    CHECK(p3 == std::vector<double>{0.0, 1.0, 0.0});
    for (double b : betweenness(make_network(testing::complete_graph(4)))) CHECK(b == 0.0);
    CHECK(betweenness(make_network(testing::path_graph(2))) == std::vector<double>{0.0, 0.0});
  }

  TEST_CASE("longest minimum paths") {
    auto p4 = top_k_longest_min_paths(make_network(testing::path_graph(4)), 1);
    REQUIRE(p4.size() == 1);
    CHECK(p4[0] == Path{{0, 1, 2, 3}, 3.0});
    auto k3 = top_k_longest_min_paths(make_network(testing::complete_graph(3)), 3);
    REQUIRE(k3.size() == 3);
    for (const auto& p : k3) CHECK(p.length == 1.0);
    CHECK(k3[0].nodes == Nodes{0, 1});
    CHECK(k3[2].nodes == Nodes{1, 2});
    auto bridge = top_k_longest_min_paths(make_network(testing::two_triangles(true)), 2);
    REQUIRE(bridge.size() == 2);
    CHECK(bridge[0] == Path{{0, 2, 3, 4}, 3.0});
    CHECK(bridge[1] == Path{{0, 2, 3, 5}, 3.0});
  }

  TEST_CASE("oracle agreement on random graphs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_real_distribution<double> prob(0.15, 0.8);
    for (int round = 0; round < 120; ++round) {
      const bool directed = round % 2 == 1;
      const bool weighted = round % 4 >= 2;
      auto spec = testing::random_graph(rng, size(rng), prob(rng), directed, weighted);
      auto net = make_network(spec);
      const auto criterion = weighted ? PathCriterion::Weight : PathCriterion::Hops;
      const auto d = oracle::floyd_warshall(spec, weighted);
      CAPTURE(round);

      auto a = analyze_paths(net, 5, {criterion, 1});
      auto bc = oracle::betweenness(spec, weighted);
      for (std::size_t v = 0; v < spec.n; ++v) {
        CHECK(std::abs(a.betweenness[v] - bc[v]) <= 1e-9);
        CHECK(std::abs(a.eccentricity[v] - oracle::eccentricity(d, v)) <= 1e-9);
      }
      const double apl = oracle::average_path_length(d);
      if (std::isnan(apl)) {
        CHECK_FALSE(a.average_path_length.has_value());
      } else {
        REQUIRE(a.average_path_length.has_value());
        CHECK(std::abs(*a.average_path_length - apl) <= 1e-9);
        CHECK(*a.average_path_length <= a.diameter->value + 1e-12);
      }
      if (!spec.edges.empty()) {
        REQUIRE(a.diameter.has_value());
        CHECK(std::abs(a.diameter->value - oracle::diameter(d)) <= 1e-9);
        CHECK(a.diameter->value == *std::max_element(a.eccentricity.begin(), a.eccentricity.end()));
      }

      auto ranked = ranked_pairs(spec, d);
      REQUIRE(a.longest_min_paths.size() == std::min<std::size_t>(5, ranked.size()));
      for (std::size_t i = 0; i < a.longest_min_paths.size(); ++i) {
        const auto& p = a.longest_min_paths[i];
        CHECK(p.nodes.front() == ranked[i].s);
        CHECK(p.nodes.back() == ranked[i].t);
        CHECK(std::abs(p.length - ranked[i].dist) <= 1e-9);
        CHECK(p.nodes == oracle::lexicographic_shortest_path(spec, weighted, ranked[i].s, ranked[i].t));
      }

      for (std::size_t s = 0; s < spec.n; ++s) {
        for (std::size_t t = 0; t < spec.n; ++t) {
          if (d[s][t] == oracle::kInf) continue;
          auto p = shortest_path(net, s, t, criterion);
          CHECK(p.nodes == oracle::lexicographic_shortest_path(spec, weighted, s, t));
        }
      }
    }
  }

  TEST_CASE("hop paths ignore a weight scale") {
    std::mt19937 rng(9);
    for (int round = 0; round < 40; ++round) {
      auto spec = testing::random_graph(rng, 7, 0.35, round % 2 == 0, true);
      auto base = analyze_paths(make_network(spec), 4, {PathCriterion::Hops, 1});
      for (auto& w : spec.weights) w *= 7.5;
      auto scaled = analyze_paths(make_network(spec), 4, {PathCriterion::Hops, 1});
      CHECK(scaled.betweenness == base.betweenness);
      CHECK(scaled.longest_min_paths == base.longest_min_paths);
    }
  }

  TEST_CASE("results do not depend on the thread count") {
    std::mt19937 rng(77);
    for (bool weighted : {false, true}) {
      auto spec = testing::random_graph(rng, 300, 0.02, true, weighted);
      auto net = make_network(spec);
      const auto criterion = weighted ? PathCriterion::Weight : PathCriterion::Hops;
      auto one = analyze_paths(net, 10, {criterion, 1});
      for (unsigned threads : {2u, 4u, 7u}) {
        auto many = analyze_paths(net, 10, {criterion, threads});
        CHECK(many.betweenness == one.betweenness);
        CHECK(many.eccentricity == one.eccentricity);
        CHECK(*many.average_path_length == *one.average_path_length);
        CHECK(many.longest_min_paths == one.longest_min_paths);
        CHECK(many.reachable_pairs == one.reachable_pairs);
      }
    }
  }

  TEST_CASE("unreachable pairs are counted") {
    auto a = analyze_paths(make_network({4, {{0, 1}, {1, 2}}, {}, true}), 3, {PathCriterion::Hops, 1});
    CHECK(a.reachable_pairs == 3);
    CHECK(a.unreachable_pairs == 9);
  }
}
