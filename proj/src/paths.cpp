#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <thread>

#include "graph_internal.hpp"
#include "sbinet/error.hpp"
#include "sbinet/metrics.hpp"

namespace sbinet {

std::string_view to_string(PathCriterion criterion) {
  switch (criterion) {
    case PathCriterion::Hops: return "hops";
    case PathCriterion::Weight: return "weight";
    case PathCriterion::Time: return "time";
  }
  return "hops";
}

std::optional<PathCriterion> parse_criterion(std::string_view text) {
  for (auto c : {PathCriterion::Hops, PathCriterion::Weight, PathCriterion::Time}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Equal up to accumulated rounding of weight sums.
bool tight(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

void require_paths(const Network& net, PathCriterion criterion) {
  if (!net.represents_paths()) {
    throw Error(ErrorKind::PathMetricNotApplicable,
                "path metrics need route-bearing edges; this network does not represent paths");
  }
  if (criterion == PathCriterion::Time) {
    throw Error(ErrorKind::UnsupportedCriterion,
                "the time criterion needs travel times, which the input format does not carry");
  }
}

struct Graphs {
  detail::Csr out;
  detail::Csr in;
  bool weighted = false;
};

Graphs make_graphs(const Network& net, PathCriterion criterion) {
  Graphs g;
  g.out = detail::make_csr(net.node_count(), net.edges(), net.directed());
  g.in = net.directed() ? detail::make_csr(net.node_count(), net.edges(), true, true) : g.out;
  g.weighted = criterion == PathCriterion::Weight;
  if (!g.weighted) {
    std::fill(g.out.weight.begin(), g.out.weight.end(), 1.0);
    std::fill(g.in.weight.begin(), g.in.weight.end(), 1.0);
  }
  return g;
}

// Reusable single-source workspace. `dist` is infinite outside `order`.
struct Sssp {
  std::vector<double> dist;
  std::vector<std::size_t> order;  // reached nodes, nondecreasing distance

  explicit Sssp(std::size_t n) : dist(n, kInf) {}

  void run(const detail::Csr& g, std::size_t s, bool weighted) {
    for (auto v : order) dist[v] = kInf;
    order.clear();
    dist[s] = 0.0;
    if (!weighted) {
      order.push_back(s);
      for (std::size_t head = 0; head < order.size(); ++head) {
        std::size_t u = order[head];
        for (std::size_t i = g.begin(u); i < g.end(u); ++i) {
          std::size_t v = g.target[i];
          if (dist[v] == kInf) {
            dist[v] = dist[u] + 1.0;
            order.push_back(v);
          }
        }
      }
      return;
    }
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<bool>& done = done_;
    done.assign(dist.size(), false);
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (done[u]) continue;
      done[u] = true;
      order.push_back(u);
      for (std::size_t i = g.begin(u); i < g.end(u); ++i) {
        std::size_t v = g.target[i];
        double nd = d + g.weight[i];
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
  }

 private:
  std::vector<bool> done_;
};

Path walk_path(const Graphs& g, std::size_t s, std::size_t t, const Network& net) {
  const std::size_t n = net.node_count();
  if (s >= n || t >= n) throw Error(ErrorKind::UnknownNode, "node index out of range");
  Sssp from(n), to(n);
  from.run(g.out, s, g.weighted);
  if (from.dist[t] == kInf) {
    throw Error(ErrorKind::Unreachable,
                "no path from " + net.nodes()[s].id + " to " + net.nodes()[t].id);
  }
  to.run(g.in, t, g.weighted);
  const double total = from.dist[t];
  Path path{{s}, total};
  std::size_t cur = s;
  while (cur != t) {
    std::size_t next = n;
    for (std::size_t i = g.out.begin(cur); i < g.out.end(cur); ++i) {
      std::size_t v = g.out.target[i];
      if (from.dist[v] == kInf || to.dist[v] == kInf) continue;
      if (tight(from.dist[cur] + g.out.weight[i], from.dist[v]) &&
          tight(from.dist[v] + to.dist[v], total)) {
        next = v;
        break;  // targets are ascending, so this is the smallest choice
      }
    }
    if (next == n) throw Error(ErrorKind::Unreachable, "shortest-path walk lost its way");
    path.nodes.push_back(next);
    cur = next;
  }
  return path;
}

struct Candidate {
  double dist;
  std::size_t s;
  std::size_t t;
};

bool longer(const Candidate& a, const Candidate& b) {
  if (a.dist != b.dist) return a.dist > b.dist;
  if (a.s != b.s) return a.s < b.s;
  return a.t < b.t;
}

void trim(std::vector<Candidate>& c, std::size_t k) {
  if (c.size() > k) {
    std::nth_element(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k), c.end(), longer);
    c.resize(k);
  }
}

struct BlockResult {
  std::vector<double> dependency;
  double distance_sum = 0.0;
  std::size_t reachable = 0;
  std::vector<Candidate> longest;
};

}  // namespace

Path shortest_path(const Network& net, std::size_t from, std::size_t to, PathCriterion criterion) {
  require_paths(net, criterion);
  return walk_path(make_graphs(net, criterion), from, to, net);
}

double eccentricity(const Network& net, std::size_t v, PathCriterion criterion) {
  require_paths(net, criterion);
  if (v >= net.node_count()) throw Error(ErrorKind::UnknownNode, "node index out of range");
  auto g = make_graphs(net, criterion);
  Sssp run(net.node_count());
  run.run(g.out, v, g.weighted);
  return run.dist[run.order.back()];
}

PathAnalysis analyze_paths(const Network& net, std::size_t k, const PathOptions& options) {
  require_paths(net, options.criterion);
  const std::size_t n = net.node_count();
  const Graphs g = make_graphs(net, options.criterion);
  const std::size_t keep = std::max<std::size_t>(k, 1);

  // Fixed block layout and in-order reduction keep sums independent of the
  // number of workers.
  const std::size_t block = std::max<std::size_t>(64, n / 256);
  const std::size_t blocks = n == 0 ? 0 : (n + block - 1) / block;

  PathAnalysis out;
  out.eccentricity.assign(n, 0.0);
  std::vector<double> dependency(n, 0.0);
  double distance_sum = 0.0;
  std::vector<Candidate> longest;

  std::vector<std::optional<BlockResult>> pending(blocks);
  std::size_t next_reduce = 0;
  std::mutex reduce_mutex;
  auto reduce_ready = [&] {
    while (next_reduce < blocks && pending[next_reduce]) {
      BlockResult& r = *pending[next_reduce];
      for (std::size_t v = 0; v < n; ++v) dependency[v] += r.dependency[v];
      distance_sum += r.distance_sum;
      out.reachable_pairs += r.reachable;
      longest.insert(longest.end(), r.longest.begin(), r.longest.end());
      trim(longest, keep);
      pending[next_reduce].reset();
      ++next_reduce;
    }
  };

  std::atomic<std::size_t> next_block{0};
  auto worker = [&] {
    Sssp sp(n);
    std::vector<double> sigma(n, 0.0), delta(n, 0.0);
    while (true) {
      const std::size_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      BlockResult r;
      r.dependency.assign(n, 0.0);
      for (std::size_t s = b * block; s < std::min(n, (b + 1) * block); ++s) {
        sp.run(g.out, s, g.weighted);
        const auto& dist = sp.dist;
        const auto& order = sp.order;
        sigma[s] = 1.0;
        for (std::size_t j = 1; j < order.size(); ++j) {
          std::size_t w = order[j];
          double paths = 0.0;
          for (std::size_t i = g.in.begin(w); i < g.in.end(w); ++i) {
            std::size_t v = g.in.target[i];
            if (dist[v] != kInf && tight(dist[v] + g.in.weight[i], dist[w])) paths += sigma[v];
          }
          sigma[w] = paths;
          r.distance_sum += dist[w];
          if (!net.directed() && w < s) continue;
          r.longest.push_back({dist[w], s, w});
        }
        for (std::size_t j = order.size(); j-- > 1;) {
          std::size_t w = order[j];
          const double share = (1.0 + delta[w]) / sigma[w];
          for (std::size_t i = g.in.begin(w); i < g.in.end(w); ++i) {
            std::size_t v = g.in.target[i];
            if (dist[v] != kInf && tight(dist[v] + g.in.weight[i], dist[w])) {
              delta[v] += sigma[v] * share;
            }
          }
          r.dependency[w] += delta[w];
        }
        out.eccentricity[s] = dist[order.back()];
        r.reachable += order.size() - 1;
        for (auto v : order) sigma[v] = delta[v] = 0.0;
        if (r.longest.size() > 4 * keep + 256) trim(r.longest, keep);
      }
      trim(r.longest, keep);
      std::lock_guard lock(reduce_mutex);
      pending[b] = std::move(r);
      reduce_ready();
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(blocks, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  out.unreachable_pairs = n * (n ? n - 1 : 0) - out.reachable_pairs;
  out.betweenness.assign(n, 0.0);
  if (n >= 3) {
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (std::size_t v = 0; v < n; ++v) out.betweenness[v] = dependency[v] / pairs;
  }
  if (out.reachable_pairs > 0) {
    out.average_path_length = distance_sum / static_cast<double>(out.reachable_pairs);
  }

  std::sort(longest.begin(), longest.end(), longer);
  if (net.edge_count() > 0 && !longest.empty()) {
    Path witness = walk_path(g, longest.front().s, longest.front().t, net);
    out.diameter = Diameter{witness.length, witness};
  }
  for (std::size_t i = 0; i < std::min(k, longest.size()); ++i) {
    out.longest_min_paths.push_back(
        i == 0 && out.diameter ? out.diameter->witness : walk_path(g, longest[i].s, longest[i].t, net));
  }
  return out;
}

Diameter diameter(const Network& net, PathCriterion criterion) {
  require_paths(net, criterion);
  if (net.edge_count() == 0) throw Error(ErrorKind::EmptyEdgeSet, "diameter needs at least one edge");
  return *analyze_paths(net, 1, {criterion, 1}).diameter;
}

double average_path_length(const Network& net, PathCriterion criterion) {
  auto result = analyze_paths(net, 0, {criterion, 1}).average_path_length;
  if (!result) throw Error(ErrorKind::NoFinitePairs, "no pair of distinct nodes is connected");
  return *result;
}

std::vector<double> betweenness(const Network& net, PathCriterion criterion) {
  return analyze_paths(net, 0, {criterion, 1}).betweenness;
}

std::vector<Path> top_k_longest_min_paths(const Network& net, std::size_t k,
                                          PathCriterion criterion) {
  return analyze_paths(net, k, {criterion, 1}).longest_min_paths;
}

}  // namespace sbinet
