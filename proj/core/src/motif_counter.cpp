#include "tmotif/motif_counter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tmotif/parallel.hpp"

namespace tmotif {
namespace detail {
namespace {

Timestamp horizon(Timestamp t, Seconds window) {
  if (t > std::numeric_limits<Timestamp>::max() - window) return std::numeric_limits<Timestamp>::max();
  return t + window;
}

// Index range of incident events with time in (after, until].
std::pair<std::size_t, std::size_t> time_range(std::span<const Timestamp> times, Timestamp after,
                                               Timestamp until) {
  const auto lo = std::upper_bound(times.begin(), times.end(), after);
  const auto hi = std::upper_bound(lo, times.end(), until);
  return {static_cast<std::size_t>(lo - times.begin()), static_cast<std::size_t>(hi - times.begin())};
}

}  // namespace

void require_window(Seconds window) {
  if (window <= 0) throw std::invalid_argument("motif window must be positive");
}

void followers(const TemporalGraph& g, EventIndex i, Seconds window, std::vector<EventIndex>& out) {
  out.clear();
  const Event& e = g.event(i);
  const Timestamp until = horizon(e.time, window);

  const auto u_list = g.incident(e.src);
  const auto [u_lo, u_hi] = time_range(g.incident_times(e.src), e.time, until);
  const auto v_list = g.incident(e.dst);
  const auto [v_lo, v_hi] = time_range(g.incident_times(e.dst), e.time, until);

  // Merge the two ascending lists. Events touching both endpoints appear in
  // both and are taken from the source's list only.
  std::size_t a = u_lo;
  std::size_t b = v_lo;
  while (a < u_hi || b < v_hi) {
    EventIndex next;
    if (b >= v_hi || (a < u_hi && u_list[a] < v_list[b])) {
      next = u_list[a++];
    } else {
      next = v_list[b++];
      if (g.event(next).touches(e.src)) continue;
    }
    if (!g.event(next).is_self_loop()) out.push_back(next);
  }
}

void fill_nodes(const TemporalGraph& g, MotifInstance& inst) {
  std::array<NodeId, 6> all{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < inst.event_count; ++k) {
    const Event& e = g.event(inst.events[k]);
    all[n++] = e.src;
    all[n++] = e.dst;
  }
  std::sort(all.begin(), all.begin() + n);
  const auto end = std::unique(all.begin(), all.begin() + n);
  inst.node_count = static_cast<std::uint8_t>(end - all.begin());
  std::copy(all.begin(), end, inst.nodes.begin());
}

}  // namespace detail

namespace {

template <class Accumulate>
MotifCensus parallel_census(const TemporalGraph& g, Seconds window, MotifOrder order,
                            std::size_t threads, Accumulate accumulate) {
  detail::require_window(window);
  const std::size_t workers = std::max<std::size_t>(1, threads);
  std::vector<MotifCensus> partial(workers);
  parallel_chunks(g.event_count(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    MotifCensus& local = partial[w];
    visit_instances(g, window, order, begin, end,
                    [&](const MotifInstance& inst) { accumulate(local, inst); });
  });
  MotifCensus total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

MotifCensus count_motifs(const TemporalGraph& g, Seconds window, MotifOrder order, std::size_t threads) {
  return parallel_census(g, window, order, threads,
                         [](MotifCensus& c, const MotifInstance& inst) { c.add(inst); });
}

MotifCensus count_motifs_stratified(const TemporalGraph& g, Seconds window, MotifOrder order,
                                    std::size_t threads) {
  if (!g.all_amounts_present()) {
    throw std::invalid_argument("stratified counting needs an amount on every event");
  }
  MotifCensus census = parallel_census(
      g, window, order, threads, [&g](MotifCensus& c, const MotifInstance& inst) {
        c.add(inst);
        ++c.buckets[inst.motif.index()][static_cast<std::size_t>(instance_bucket(g, inst))];
      });
  census.has_buckets = true;
  return census;
}

std::vector<MotifInstance> enumerate_instances(const TemporalGraph& g, Seconds window,
                                               MotifClass motif, std::size_t limit) {
  detail::require_window(window);
  if (limit == 0) throw std::invalid_argument("enumerate_instances: limit must be >= 1");
  const MotifOrder order = motif.is_pair() ? MotifOrder::Two : MotifOrder::Three;
  std::vector<MotifInstance> out;
  // Anchors are visited in index order; stop once the limit is reached.
  for (std::size_t a = 0; a < g.event_count() && out.size() < limit; ++a) {
    visit_instances(g, window, order, a, a + 1, [&](const MotifInstance& inst) {
      if (inst.motif == motif && out.size() < limit) out.push_back(inst);
    });
  }
  return out;
}

bool is_temporal_cycle(const MotifInstance& inst) {
  if (inst.event_count != 3) throw std::invalid_argument("is_temporal_cycle: needs a 3-event instance");
  return inst.motif == MotifClass::seq(PairType::Convey, PairType::Convey) && inst.node_count == 3;
}

std::optional<double> coefficient_of_variation(std::span<const double> amounts) {
  if (amounts.empty()) throw std::invalid_argument("coefficient_of_variation: no amounts");
  double sum = 0.0;
  for (const double a : amounts) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("coefficient_of_variation: amounts must be finite and >= 0");
    }
    sum += a;
  }
  const double n = static_cast<double>(amounts.size());
  const double mean = sum / n;
  if (mean == 0.0) return std::nullopt;
  double sq = 0.0;
  for (const double a : amounts) sq += (a - mean) * (a - mean);
  return std::sqrt(sq / n) / mean;
}

CvBucket cv_bucket(std::optional<double> cv) {
  if (!cv || *cv < 0.5) return CvBucket::Small;
  if (*cv < 1.0) return CvBucket::Medium;
  return CvBucket::Large;
}

CvBucket instance_bucket(const TemporalGraph& g, const MotifInstance& inst) {
  std::array<double, 3> amounts{};
  for (std::size_t k = 0; k < inst.event_count; ++k) {
    const auto& amount = g.event(inst.events[k]).amount;
    if (!amount) throw std::invalid_argument("motif event without an amount");
    amounts[k] = *amount;
  }
  return cv_bucket(coefficient_of_variation(std::span<const double>(amounts.data(), inst.event_count)));
}

}  // namespace tmotif
