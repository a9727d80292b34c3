#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tmotif::testing {

TemporalGraph random_graph(Rng& rng, const RandomGraphSpec& shape) {
  const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(shape.min_nodes),
                                                      static_cast<std::int64_t>(shape.max_nodes)));
  const auto m = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(shape.max_events)));
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("n" + std::to_string(i));
  static constexpr double kScales[] = {1.0, 5.0, 50.0, 500.0};
  for (std::size_t k = 0; k < m; ++k) {
    const auto s = rng.below(n);
    auto d = rng.below(n);
    if (d == s && !rng.bernoulli(shape.self_loop_rate)) d = (s + 1 + rng.below(n - 1)) % n;
    std::optional<double> amount;
    if (shape.amounts) amount = rng.bernoulli(0.05) ? 0.0 : kScales[rng.below(4)] * static_cast<double>(1 + rng.below(3));
    b.add_event("n" + std::to_string(s), "n" + std::to_string(d), rng.between(0, shape.max_time), amount);
  }
  return std::move(b).build();
}

TemporalGraph graph_of(const std::vector<std::tuple<std::string, std::string, Timestamp>>& events) {
  TemporalGraph::Builder b;
  for (const auto& [s, d, t] : events) b.add_event(s, d, t);
  return std::move(b).build();
}

TemporalGraph graph_with_amounts(
    const std::vector<std::tuple<std::string, std::string, Timestamp, double>>& events) {
  TemporalGraph::Builder b;
  for (const auto& [s, d, t, a] : events) b.add_event(s, d, t, a);
  return std::move(b).build();
}

NodeId id(const TemporalGraph& g, const std::string& external) { return g.dictionary().at(external); }

namespace {

// Pair-type code from the identification pattern of (u1,v1) -> (u2,v2):
// which of u2, v2 coincide with u1 or v1.
std::optional<std::size_t> type_of(const Event& a, const Event& b) {
  const bool su = b.src == a.src, sv = b.src == a.dst, du = b.dst == a.src, dv = b.dst == a.dst;
  struct Row {
    bool su, sv, du, dv;
    std::size_t type;
  };
  static constexpr Row table[] = {
      {true, false, false, true, 0},   // repetition
      {false, true, true, false, 1},   // ping-pong
      {false, false, false, true, 2},  // in-burst
      {true, false, false, false, 3},  // out-burst
      {false, true, false, false, 4},  // convey
      {false, false, true, false, 5},  // weakly connected
  };
  for (const Row& r : table) {
    if (r.su == su && r.sv == sv && r.du == du && r.dv == dv) return r.type;
  }
  return std::nullopt;
}

bool linked(const Event& a, const Event& b, Seconds window) {
  return b.time > a.time && b.time - a.time <= window && type_of(a, b).has_value();
}

std::vector<NodeId> node_union(std::initializer_list<const Event*> es) {
  std::set<NodeId> s;
  for (const Event* e : es) {
    s.insert(e->src);
    s.insert(e->dst);
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<BruteInstance> brute_instances(const TemporalGraph& g, Seconds window) {
  const auto ev = g.events();
  const std::size_t n = ev.size();
  std::vector<BruteInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (ev[i].src == ev[i].dst) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || ev[j].src == ev[j].dst || !linked(ev[i], ev[j], window)) continue;
      const std::size_t p = *type_of(ev[i], ev[j]);
      out.push_back({{static_cast<EventIndex>(i), static_cast<EventIndex>(j)}, p, node_union({&ev[i], &ev[j]})});
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || ev[k].src == ev[k].dst || !linked(ev[j], ev[k], window)) continue;
        const std::size_t q = *type_of(ev[j], ev[k]);
        out.push_back({{static_cast<EventIndex>(i), static_cast<EventIndex>(j), static_cast<EventIndex>(k)},
                       6 + 6 * p + q, node_union({&ev[i], &ev[j], &ev[k]})});
      }
    }
  }
  return out;
}

std::vector<EventIndex> brute_ego_events(const TemporalGraph& g, NodeId u) {
  std::set<NodeId> members{u};
  for (const Event& e : g.events()) {
    if (e.src == u) members.insert(e.dst);
    if (e.dst == u) members.insert(e.src);
  }
  std::vector<EventIndex> out;
  for (std::size_t i = 0; i < g.event_count(); ++i) {
    const Event& e = g.event(static_cast<EventIndex>(i));
    if (members.count(e.src) && members.count(e.dst)) out.push_back(static_cast<EventIndex>(i));
  }
  return out;
}

std::array<double, 7> brute_simple_features(const TemporalGraph& g, NodeId u) {
  const std::size_t n = g.id_space();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  double s = 0, s_out = 0;
  for (const Event& e : g.events()) {
    if (e.src == e.dst) continue;
    adj[e.src][e.dst] = 1;
    if (e.src == u) s_out += 1;
    if (e.src == u || e.dst == u) s += 1;
  }
  std::vector<NodeId> nbrs;
  double k_out = 0, k_in = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (v == u) continue;
    k_out += adj[u][v];
    k_in += adj[v][u];
    if (adj[u][v] || adj[v][u]) nbrs.push_back(v);
  }
  const double k = static_cast<double>(nbrs.size());
  double among = 0;
  for (NodeId a : nbrs) {
    for (NodeId b : nbrs) {
      if (a != b) among += adj[a][b];
    }
  }
  double triangles = 0, cycles = 0;
  for (std::size_t x = 0; x < nbrs.size(); ++x) {
    for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
      const NodeId a = nbrs[x], b = nbrs[y];
      if (!(adj[a][b] || adj[b][a])) continue;
      triangles += 1;
      const bool forward = adj[u][a] && adj[a][b] && adj[b][u];
      const bool backward = adj[u][b] && adj[b][a] && adj[a][u];
      if (forward || backward) cycles += 1;
    }
  }
  return {k,
          s,
          k > 0 ? s / k : 0.0,
          k_out + k_in > 0 ? k_out / (k_out + k_in) : 0.0,
          s > 0 ? s_out / s : 0.0,
          k > 1 ? among / (k * (k - 1)) : 0.0,
          triangles > 0 ? cycles / triangles : 0.0};
}

double reference_cv(const std::vector<double>& xs) {
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size())) / mean;
}

}  // namespace tmotif::testing
