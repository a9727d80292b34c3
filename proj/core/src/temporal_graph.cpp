#include "tmotif/temporal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tmotif {

TemporalGraph::TemporalGraph() : dictionary_(std::make_shared<NodeDictionary>()) {
  build_index();
}

TemporalGraph::TemporalGraph(std::vector<Event> events,
                             std::shared_ptr<const NodeDictionary> dictionary,
                             std::vector<NodeId> nodes)
    : events_(std::move(events)), dictionary_(std::move(dictionary)), nodes_(std::move(nodes)) {
  if (!dictionary_) throw std::invalid_argument("TemporalGraph: null dictionary");
  if (events_.size() >= std::numeric_limits<EventIndex>::max()) {
    throw std::length_error("TemporalGraph: too many events");
  }
  const std::size_t space = dictionary_->size();
  for (const Event& e : events_) {
    if (e.src >= space || e.dst >= space) {
      throw std::invalid_argument("TemporalGraph: event endpoint outside the node dictionary");
    }
    if (e.amount && (!std::isfinite(*e.amount) || *e.amount < 0.0)) {
      throw std::invalid_argument("TemporalGraph: amount must be finite and non-negative");
    }
    nodes_.push_back(e.src);
    nodes_.push_back(e.dst);
  }
  for (const NodeId n : nodes_) {
    if (n >= space) throw std::invalid_argument("TemporalGraph: node outside the node dictionary");
  }
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::stable_sort(events_.begin(), events_.end(),
                   [](const Event& a, const Event& b) { return a.time < b.time; });
  build_index();
}

void TemporalGraph::build_index() {
  const std::size_t space = dictionary_->size();
  offsets_.assign(space + 1, 0);
  self_loops_ = 0;
  missing_amounts_ = 0;
  for (const Event& e : events_) {
    ++offsets_[e.src + 1];
    if (e.dst != e.src) ++offsets_[e.dst + 1];
    if (e.is_self_loop()) ++self_loops_;
    if (!e.amount) ++missing_amounts_;
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  incident_.resize(offsets_.back());
  incident_times_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    const auto place = [&](NodeId n) {
      incident_[cursor[n]] = static_cast<EventIndex>(i);
      incident_times_[cursor[n]] = e.time;
      ++cursor[n];
    };
    place(e.src);
    if (e.dst != e.src) place(e.dst);
  }
}

bool TemporalGraph::has_node(NodeId u) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), u);
}

void TemporalGraph::require_node(NodeId u) const {
  if (!has_node(u)) throw std::out_of_range("node " + std::to_string(u) + " is not in the graph");
}

std::span<const EventIndex> TemporalGraph::incident(NodeId u) const {
  if (u >= offsets_.size() - 1) return {};
  return std::span<const EventIndex>(incident_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::span<const Timestamp> TemporalGraph::incident_times(NodeId u) const {
  if (u >= offsets_.size() - 1) return {};
  return std::span<const Timestamp>(incident_times_)
      .subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

TemporalGraph TemporalGraph::subgraph(std::span<const EventIndex> keep,
                                      std::vector<NodeId> nodes) const {
  std::vector<Event> kept;
  kept.reserve(keep.size());
  for (const EventIndex i : keep) kept.push_back(events_.at(i));
  return TemporalGraph(std::move(kept), dictionary_, std::move(nodes));
}

TemporalGraph::Builder::Builder() : dictionary_(std::make_shared<NodeDictionary>()) {}

NodeId TemporalGraph::Builder::add_node(std::string_view external) {
  const NodeId id = dictionary_->intern(external);
  nodes_.push_back(id);
  return id;
}

void TemporalGraph::Builder::add_event(std::string_view src, std::string_view dst, Timestamp time,
                                       std::optional<double> amount,
                                       std::optional<std::string> note) {
  if (amount && (!std::isfinite(*amount) || *amount < 0.0)) {
    throw std::invalid_argument("amount must be finite and non-negative");
  }
  Event e;
  e.src = dictionary_->intern(src);
  e.dst = dictionary_->intern(dst);
  e.time = time;
  e.amount = amount;
  e.note = std::move(note);
  events_.push_back(std::move(e));
}

TemporalGraph TemporalGraph::Builder::build() && {
  return TemporalGraph(std::move(events_), std::move(dictionary_), std::move(nodes_));
}

std::vector<NodeId> neighbors(const TemporalGraph& g, NodeId u) {
  g.require_node(u);
  std::vector<NodeId> out;
  for (const EventIndex i : g.incident(u)) {
    const Event& e = g.event(i);
    const NodeId other = e.src == u ? e.dst : e.src;
    if (other != u) out.push_back(other);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TemporalGraph ego_network(const TemporalGraph& g, NodeId u) {
  std::vector<NodeId> members = neighbors(g, u);
  members.insert(std::lower_bound(members.begin(), members.end(), u), u);
  const auto inside = [&](NodeId n) {
    return std::binary_search(members.begin(), members.end(), n);
  };
  // Every ego event touches at least one member, so scanning members'
  // incident lists finds them all; merge to restore time order.
  std::vector<EventIndex> keep;
  for (const NodeId m : members) {
    for (const EventIndex i : g.incident(m)) {
      const Event& e = g.event(i);
      // Record each event once, from its smaller member endpoint.
      const NodeId owner = std::min(e.src, e.dst);
      if (owner == m && inside(e.src) && inside(e.dst)) keep.push_back(i);
    }
  }
  std::sort(keep.begin(), keep.end());
  return g.subgraph(keep, std::move(members));
}

}  // namespace tmotif
