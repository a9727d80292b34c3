#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tmotif/motif_census.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif {

namespace detail {

/// Events j > i that share a node with event i, are not self-loops, and have
/// t_i < t_j <= t_i + window, ascending by index. Reuses `out`.
void followers(const TemporalGraph& g, EventIndex i, Seconds window, std::vector<EventIndex>& out);

void fill_nodes(const TemporalGraph& g, MotifInstance& inst);

void require_window(Seconds window);

}  // namespace detail

/// Calls visit(const MotifInstance&) for every motif instance whose first
/// event lies in [anchor_begin, anchor_end), in lexicographic order of event
/// indices. Per-node incident lists are scanned forward from each event
/// within the window, so the cost is proportional to the number of
/// candidate pairs and triples rather than |E|^3.
template <class Visitor>
void visit_instances(const TemporalGraph& g, Seconds window, MotifOrder order,
                     std::size_t anchor_begin, std::size_t anchor_end, Visitor&& visit) {
  detail::require_window(window);
  const auto events = g.events();
  anchor_end = std::min(anchor_end, events.size());
  std::vector<EventIndex> second;
  std::vector<EventIndex> third;
  MotifInstance inst;
  for (std::size_t a = anchor_begin; a < anchor_end; ++a) {
    const auto i = static_cast<EventIndex>(a);
    const Event& e1 = events[i];
    if (e1.is_self_loop()) continue;
    detail::followers(g, i, window, second);
    for (const EventIndex j : second) {
      const Event& e2 = events[j];
      const PairType p12 = pair_type_unchecked(e1, e2);
      if (includes_pairs(order)) {
        inst.events = {i, j, 0};
        inst.event_count = 2;
        inst.motif = MotifClass::pair(p12);
        inst.span = e2.time - e1.time;
        detail::fill_nodes(g, inst);
        visit(static_cast<const MotifInstance&>(inst));
      }
      if (!includes_triples(order)) continue;
      detail::followers(g, j, window, third);
      for (const EventIndex k : third) {
        const Event& e3 = events[k];
        inst.events = {i, j, k};
        inst.event_count = 3;
        inst.motif = MotifClass::seq(p12, pair_type_unchecked(e2, e3));
        inst.span = e3.time - e1.time;
        detail::fill_nodes(g, inst);
        visit(static_cast<const MotifInstance&>(inst));
      }
    }
  }
}

template <class Visitor>
void visit_instances(const TemporalGraph& g, Seconds window, MotifOrder order, Visitor&& visit) {
  visit_instances(g, window, order, 0, g.event_count(), std::forward<Visitor>(visit));
}

/// Census of all 2- and/or 3-event motifs. `threads` > 1 partitions anchor
/// events across workers; the result is identical for any thread count.
/// Throws std::invalid_argument when window <= 0.
MotifCensus count_motifs(const TemporalGraph& g, Seconds window, MotifOrder order = MotifOrder::Both,
                         std::size_t threads = 1);

/// Census with per-class CV bucket sub-counts. Every event must carry an
/// amount (std::invalid_argument otherwise).
MotifCensus count_motifs_stratified(const TemporalGraph& g, Seconds window,
                                    MotifOrder order = MotifOrder::Both, std::size_t threads = 1);

/// Instances of one class ordered by first event, at most `limit` of them.
std::vector<MotifInstance> enumerate_instances(const TemporalGraph& g, Seconds window,
                                               MotifClass motif, std::size_t limit);

/// True for a 3-node convey-convey instance (A→B→C→A). Throws
/// std::invalid_argument for 2-event instances.
bool is_temporal_cycle(const MotifInstance& inst);

/// Population standard deviation over mean. Empty when the mean is zero.
/// Throws std::invalid_argument on empty input or negative values.
std::optional<double> coefficient_of_variation(std::span<const double> amounts);

/// Zero-mean (all-zero) amounts have no dispersion and land in bucket s.
CvBucket cv_bucket(std::optional<double> cv);

/// Bucket of an instance's amounts; the events must all carry amounts.
CvBucket instance_bucket(const TemporalGraph& g, const MotifInstance& inst);

}  // namespace tmotif
