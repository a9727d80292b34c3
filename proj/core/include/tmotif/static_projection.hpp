#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmotif/temporal_graph.hpp"

namespace tmotif {

struct DirectedEdge {
  NodeId src = 0;
  NodeId dst = 0;
  std::uint64_t multiplicity = 0;

  bool operator==(const DirectedEdge&) const = default;
};

/// Timestamp-free directed simple graph of a TemporalGraph. Self-loop edges
/// are kept in edges() so multiplicities sum to |E|, but never appear in the
/// neighbor lists.
class StaticProjection {
 public:
  explicit StaticProjection(const TemporalGraph& g);

  /// Ascending by (src, dst).
  std::span<const DirectedEdge> edges() const { return edges_; }
  std::uint64_t multiplicity(NodeId src, NodeId dst) const;
  bool has_edge(NodeId src, NodeId dst) const;

  bool has_node(NodeId u) const { return u < known_.size() && known_[u]; }
  /// Throws std::out_of_range for nodes outside the source graph.
  void require_node(NodeId u) const;

  std::span<const NodeId> out_neighbors(NodeId u) const;
  std::span<const NodeId> in_neighbors(NodeId u) const;
  /// Γ(u), undirected, ascending.
  std::span<const NodeId> neighbors(NodeId u) const;

  std::size_t id_space() const { return known_.size(); }

 private:
  static std::span<const NodeId> slice(const std::vector<std::uint32_t>& offsets,
                                       const std::vector<NodeId>& values, NodeId u);

  std::vector<DirectedEdge> edges_;
  std::vector<bool> known_;
  std::vector<std::uint32_t> out_offsets_, in_offsets_, nbr_offsets_;
  std::vector<NodeId> out_, in_, nbr_;
};

StaticProjection static_projection(const TemporalGraph& g);

}  // namespace tmotif
