#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "tmotif/motif_class.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

enum class MotifOrder { Two, Three, Both };

inline bool includes_pairs(MotifOrder o) { return o != MotifOrder::Three; }
inline bool includes_triples(MotifOrder o) { return o != MotifOrder::Two; }

/// Coefficient-of-variation bucket of a motif's amounts: s = [0, 0.5),
/// m = [0.5, 1), l = [1, ∞).
enum class CvBucket : std::uint8_t { Small, Medium, Large };
inline constexpr std::size_t kCvBucketCount = 3;
std::string_view cv_bucket_name(CvBucket b);  // "s", "m", "l"

/// One matched motif: 2 or 3 events in strictly increasing time.
struct MotifInstance {
  std::array<EventIndex, 3> events{};
  std::uint8_t event_count = 0;
  MotifClass motif = MotifClass::pair(PairType::Repetition);
  /// Distinct nodes, ascending; the first node_count entries are valid.
  std::array<NodeId, 4> nodes{};
  std::uint8_t node_count = 0;
  /// t_last - t_first.
  Seconds span = 0;

  std::span<const EventIndex> event_indices() const { return {events.data(), event_count}; }
  std::span<const NodeId> node_set() const { return {nodes.data(), node_count}; }
  bool contains(NodeId n) const;
};

using ClassCounts = std::array<std::uint64_t, kMotifClassCount>;

/// Counts per motif class plus optional refinements.
struct MotifCensus {
  ClassCounts counts{};
  /// counts split by instance node count; column k holds node_count = k + 2.
  std::array<std::array<std::uint64_t, 3>, kMotifClassCount> by_node_count{};

  bool has_buckets = false;
  std::array<std::array<std::uint64_t, kCvBucketCount>, kMotifClassCount> buckets{};

  /// Ego split: instances whose node set contains the ego node vs. not.
  bool has_ego_split = false;
  ClassCounts with_ego{};
  ClassCounts without_ego{};
  /// With both refinements: bucket sub-counts of with_ego.
  std::array<std::array<std::uint64_t, kCvBucketCount>, kMotifClassCount> buckets_with_ego{};

  std::uint64_t count(MotifClass c) const { return counts[c.index()]; }
  std::uint64_t total() const;
  std::uint64_t total_pairs() const;
  std::uint64_t total_triples() const;

  /// Adds an instance to counts and by_node_count only.
  void add(const MotifInstance& inst);
  MotifCensus& operator+=(const MotifCensus& other);
  bool operator==(const MotifCensus&) const = default;
};

}  // namespace tmotif
