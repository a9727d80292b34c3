#include "tmotif/motif_oracle.hpp"

#include <set>
#include <stdexcept>

namespace tmotif {
namespace {

// Pair type from the identification pattern of the second event's endpoints
// against the first's: (src2==src1, src2==dst1, dst2==src1, dst2==dst1).
std::optional<std::size_t> pattern_type(const Event& a, const Event& b) {
  const bool ss = b.src == a.src, sd = b.src == a.dst, ds = b.dst == a.src, dd = b.dst == a.dst;
  if (ss && dd) return 0;    // repetition
  if (sd && ds) return 1;    // ping-pong
  if (dd) return 2;          // in-burst
  if (ss) return 3;          // out-burst
  if (sd) return 4;          // convey
  if (ds) return 5;          // weakly connected
  return std::nullopt;
}

bool adjacent(const Event& a, const Event& b, Seconds window) {
  return b.time > a.time && b.time - a.time <= window && pattern_type(a, b).has_value();
}

std::size_t distinct_nodes(std::initializer_list<const Event*> events) {
  std::set<NodeId> nodes;
  for (const Event* e : events) {
    nodes.insert(e->src);
    nodes.insert(e->dst);
  }
  return nodes.size();
}

}  // namespace

MotifCensus count_motifs_oracle(const TemporalGraph& g, Seconds window, MotifOrder order,
                                std::size_t cap) {
  if (window <= 0) throw std::invalid_argument("motif window must be positive");
  const auto ev = g.events();
  if (ev.size() > cap) throw std::invalid_argument("count_motifs_oracle: graph exceeds the event cap");
  MotifCensus census;
  const std::size_t n = ev.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (ev[i].src == ev[i].dst) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || ev[j].src == ev[j].dst || !adjacent(ev[i], ev[j], window)) continue;
      const std::size_t first = *pattern_type(ev[i], ev[j]);
      if (includes_pairs(order)) {
        ++census.counts[first];
        ++census.by_node_count[first][distinct_nodes({&ev[i], &ev[j]}) - 2];
      }
      if (!includes_triples(order)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || ev[k].src == ev[k].dst || !adjacent(ev[j], ev[k], window)) continue;
        const std::size_t cls = kPairTypeCount + kPairTypeCount * first + *pattern_type(ev[j], ev[k]);
        ++census.counts[cls];
        ++census.by_node_count[cls][distinct_nodes({&ev[i], &ev[j], &ev[k]}) - 2];
      }
    }
  }
  return census;
}

}  // namespace tmotif
