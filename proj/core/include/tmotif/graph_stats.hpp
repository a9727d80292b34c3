#pragma once

#include <cstddef>
#include <optional>

#include "tmotif/temporal_graph.hpp"

namespace tmotif {

/// Global timing statistics of the event stream.
struct GraphStats {
  std::size_t event_count = 0;
  /// δ: mean gap between globally consecutive events, seconds.
  double mean_inter_event = 0.0;
  /// γ: share of globally consecutive event pairs that have a common node.
  double connectivity_rate = 0.0;
  /// δ/γ; empty when γ = 0.
  std::optional<double> suggested_window;
};

/// Requires at least two events (std::invalid_argument otherwise). Ties in
/// time contribute a zero gap and still count as consecutive pairs.
GraphStats compute_stats(const TemporalGraph& g);

/// Builds stats from known δ and γ values.
GraphStats stats_from(double mean_inter_event, double connectivity_rate, std::size_t event_count = 0);

enum class WindowRounding { None, NearestHour, Override };

struct WindowPolicy {
  WindowRounding rounding = WindowRounding::None;
  /// Used verbatim when rounding == Override.
  double override_seconds = 0.0;
};

/// δ/γ under the chosen rounding. NearestHour rounds half up and never
/// returns less than one hour. Throws std::invalid_argument when γ = 0 and
/// no override is given, or when the override is not positive.
double suggest_window(const GraphStats& stats, const WindowPolicy& policy = {});

}  // namespace tmotif
