#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmotif/node_dictionary.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

/// Immutable, time-ordered event store over a dense node id space.
///
/// Events are sorted non-decreasing by time, stable on ties by insertion
/// order. Derived graphs (ego networks, TF/TN splits) share the parent's
/// dictionary, so a NodeId means the same user in every graph built from one
/// input. Each node has a time-ordered incident-event index (CSR layout).
class TemporalGraph {
 public:
  class Builder;

  TemporalGraph();

  /// Sorts `events` by time (stable). Every endpoint is added to `nodes`.
  /// Throws std::invalid_argument on ids outside the dictionary or on
  /// negative or non-finite amounts.
  TemporalGraph(std::vector<Event> events, std::shared_ptr<const NodeDictionary> dictionary,
                std::vector<NodeId> nodes = {});

  std::span<const Event> events() const { return events_; }
  const Event& event(EventIndex i) const { return events_[i]; }
  std::size_t event_count() const { return events_.size(); }

  /// Member nodes, ascending.
  std::span<const NodeId> nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool has_node(NodeId u) const;
  /// Throws std::out_of_range unless has_node(u).
  void require_node(NodeId u) const;

  /// Size of the shared id space (>= node_count()).
  std::size_t id_space() const { return dictionary_->size(); }
  const NodeDictionary& dictionary() const { return *dictionary_; }
  const std::shared_ptr<const NodeDictionary>& shared_dictionary() const { return dictionary_; }

  /// Events incident to u (either endpoint), ascending by index and hence time.
  std::span<const EventIndex> incident(NodeId u) const;
  /// Timestamps parallel to incident(u).
  std::span<const Timestamp> incident_times(NodeId u) const;

  std::size_t self_loop_count() const { return self_loops_; }
  bool all_amounts_present() const { return missing_amounts_ == 0; }

  /// Graph over the same dictionary holding events[i] for i in `keep`
  /// (ascending) and the given member nodes.
  TemporalGraph subgraph(std::span<const EventIndex> keep, std::vector<NodeId> nodes) const;

 private:
  void build_index();

  std::vector<Event> events_;
  std::shared_ptr<const NodeDictionary> dictionary_;
  std::vector<NodeId> nodes_;
  std::vector<std::uint32_t> offsets_;
  std::vector<EventIndex> incident_;
  std::vector<Timestamp> incident_times_;
  std::size_t self_loops_ = 0;
  std::size_t missing_amounts_ = 0;
};

/// Accumulates events keyed by external ids.
class TemporalGraph::Builder {
 public:
  Builder();

  NodeId add_node(std::string_view external);
  void add_event(std::string_view src, std::string_view dst, Timestamp time,
                 std::optional<double> amount = std::nullopt,
                 std::optional<std::string> note = std::nullopt);

  std::size_t event_count() const { return events_.size(); }

  TemporalGraph build() &&;

 private:
  std::shared_ptr<NodeDictionary> dictionary_;
  std::vector<Event> events_;
  std::vector<NodeId> nodes_;
};

/// Γ(u): in- and out-neighbors of u, ascending, excluding u itself.
std::vector<NodeId> neighbors(const TemporalGraph& g, NodeId u);

/// One-hop egocentric network: nodes {u} ∪ Γ(u) and every event whose two
/// endpoints both lie in that set, in the original time order.
TemporalGraph ego_network(const TemporalGraph& g, NodeId u);

}  // namespace tmotif
