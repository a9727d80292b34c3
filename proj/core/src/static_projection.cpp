#include "tmotif/static_projection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tmotif {
namespace {

void build_csr(std::size_t space, std::vector<std::pair<NodeId, NodeId>>& pairs,
               std::vector<std::uint32_t>& offsets, std::vector<NodeId>& values) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  offsets.assign(space + 1, 0);
  for (const auto& [a, b] : pairs) ++offsets[a + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  values.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) values[i] = pairs[i].second;
}

}  // namespace

StaticProjection::StaticProjection(const TemporalGraph& g) {
  const std::size_t space = g.id_space();
  known_.assign(space, false);
  for (const NodeId n : g.nodes()) known_[n] = true;

  std::vector<std::pair<NodeId, NodeId>> keys;
  keys.reserve(g.event_count());
  for (const Event& e : g.events()) keys.emplace_back(e.src, e.dst);
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    edges_.push_back({keys[i].first, keys[i].second, j - i});
    i = j;
  }

  std::vector<std::pair<NodeId, NodeId>> out, in, both;
  for (const DirectedEdge& e : edges_) {
    if (e.src == e.dst) continue;
    out.emplace_back(e.src, e.dst);
    in.emplace_back(e.dst, e.src);
    both.emplace_back(e.src, e.dst);
    both.emplace_back(e.dst, e.src);
  }
  build_csr(space, out, out_offsets_, out_);
  build_csr(space, in, in_offsets_, in_);
  build_csr(space, both, nbr_offsets_, nbr_);
}

std::uint64_t StaticProjection::multiplicity(NodeId src, NodeId dst) const {
  const DirectedEdge key{src, dst, 0};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const auto& a, const auto& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  if (it == edges_.end() || it->src != src || it->dst != dst) return 0;
  return it->multiplicity;
}

bool StaticProjection::has_edge(NodeId src, NodeId dst) const {
  if (src == dst) return multiplicity(src, dst) > 0;
  const auto outs = out_neighbors(src);
  return std::binary_search(outs.begin(), outs.end(), dst);
}

void StaticProjection::require_node(NodeId u) const {
  if (!has_node(u)) throw std::out_of_range("node " + std::to_string(u) + " is not in the projection");
}

std::span<const NodeId> StaticProjection::slice(const std::vector<std::uint32_t>& offsets,
                                                const std::vector<NodeId>& values, NodeId u) {
  if (u + 1 >= offsets.size()) return {};
  return std::span<const NodeId>(values).subspan(offsets[u], offsets[u + 1] - offsets[u]);
}

std::span<const NodeId> StaticProjection::out_neighbors(NodeId u) const {
  return slice(out_offsets_, out_, u);
}
std::span<const NodeId> StaticProjection::in_neighbors(NodeId u) const {
  return slice(in_offsets_, in_, u);
}
std::span<const NodeId> StaticProjection::neighbors(NodeId u) const {
  return slice(nbr_offsets_, nbr_, u);
}

StaticProjection static_projection(const TemporalGraph& g) { return StaticProjection(g); }

}  // namespace tmotif
