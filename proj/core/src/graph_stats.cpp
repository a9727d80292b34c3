#include "tmotif/graph_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace tmotif {

GraphStats compute_stats(const TemporalGraph& g) {
  const auto events = g.events();
  if (events.size() < 2) throw std::invalid_argument("compute_stats: need at least two events");
  std::size_t connected = 0;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    const Event& a = events[i];
    const Event& b = events[i + 1];
    if (b.touches(a.src) || b.touches(a.dst)) ++connected;
  }
  const double pairs = static_cast<double>(events.size() - 1);
  // The per-gap sum telescopes to last - first.
  const double span = static_cast<double>(events.back().time - events.front().time);
  return stats_from(span / pairs, static_cast<double>(connected) / pairs, events.size());
}

GraphStats stats_from(double mean_inter_event, double connectivity_rate, std::size_t event_count) {
  if (mean_inter_event < 0.0 || !(connectivity_rate >= 0.0 && connectivity_rate <= 1.0)) {
    throw std::invalid_argument("stats_from: need delta >= 0 and gamma in [0, 1]");
  }
  GraphStats s;
  s.event_count = event_count;
  s.mean_inter_event = mean_inter_event;
  s.connectivity_rate = connectivity_rate;
  if (connectivity_rate > 0.0) s.suggested_window = mean_inter_event / connectivity_rate;
  return s;
}

double suggest_window(const GraphStats& stats, const WindowPolicy& policy) {
  if (policy.rounding == WindowRounding::Override) {
    if (!(policy.override_seconds > 0.0)) {
      throw std::invalid_argument("suggest_window: override must be positive");
    }
    return policy.override_seconds;
  }
  if (!stats.suggested_window) {
    throw std::invalid_argument("suggest_window: connectivity rate is zero, window undefined");
  }
  const double raw = *stats.suggested_window;
  if (policy.rounding == WindowRounding::None) return raw;
  constexpr double kHour = 3600.0;
  return std::max(1.0, std::floor(raw / kHour + 0.5)) * kHour;
}

}  // namespace tmotif
