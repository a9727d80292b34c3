#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tmotif {

/// Dense internal node index. External ids are strings held by NodeDictionary.
using NodeId = std::uint32_t;
/// Position of an event in a graph's time-ordered event list.
using EventIndex = std::uint32_t;
/// Integer seconds since the epoch.
using Timestamp = std::int64_t;
/// Inter-event threshold used by motif counting, in whole seconds.
using Seconds = std::int64_t;

struct Event {
  NodeId src = 0;
  NodeId dst = 0;
  Timestamp time = 0;
  std::optional<double> amount;
  std::optional<std::string> note;

  bool is_self_loop() const { return src == dst; }
  bool touches(NodeId n) const { return src == n || dst == n; }
};

}  // namespace tmotif
