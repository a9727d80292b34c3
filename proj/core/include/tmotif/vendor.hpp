#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tmotif/friendship.hpp"
#include "tmotif/motif_census.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif {

struct TransactionSplit {
  TemporalGraph friends;     // TF: events between friends
  TemporalGraph strangers;   // TN: events between non-friends
};

/// Assigns every event to TF or TN by the static friendship snapshot. Both
/// graphs keep all nodes of `txn`.
TransactionSplit split_tf_tn(const TemporalGraph& txn, const FriendshipSet& friends);

/// Per 3-event class Seq(row, col): TN count / TF count. Cells with a zero TF
/// count are empty (undefined).
struct RatioHeatmap {
  std::array<std::array<std::optional<double>, kPairTypeCount>, kPairTypeCount> ratio{};
  std::array<std::array<std::uint64_t, kPairTypeCount>, kPairTypeCount> tf_counts{};
  std::array<std::array<std::uint64_t, kPairTypeCount>, kPairTypeCount> tn_counts{};
};

RatioHeatmap tn_tf_ratio_heatmap(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                 std::size_t threads = 1);

/// Heatmap CSV: header `first,R,P,I,O,C,W`, one row per first pair type,
/// `NA` for undefined cells.
void write_heatmap_csv(std::ostream& out, const RatioHeatmap& heatmap);

/// Where the scored user sits inside a matched instance.
enum class TargetRole {
  /// Common receiver of a 2-event in-burst.
  InBurstReceiver,
  /// Receiver of the first event of a 2-event ping-pong.
  PingPongFirstReceiver,
  /// Receives all three events from exactly two senders.
  RepeatedReceiver,
  /// Receives the first two events from two senders, then pays one of them.
  ReceiverThenRefunder,
};

struct PositivePattern {
  MotifClass motif;
  TargetRole role;
};

/// Positive patterns are counted on TN with the user in the named role;
/// negative patterns are triangle-shaped 3-event classes counted on TF for
/// every member of the triangle.
struct PatternSet {
  static constexpr std::size_t kPositiveCount = 7;
  static constexpr std::size_t kNegativeCount = 8;

  std::vector<PositivePattern> positive;
  std::vector<MotifClass> negative;

  /// Throws std::invalid_argument unless the cardinalities are 7 and 8 with
  /// no duplicates, and every negative class can form a triangle.
  void validate() const;
};

/// The seven fixed positive patterns.
std::vector<PositivePattern> default_positive_patterns();

/// The 3-event classes realizable as a 3-node triangle (every node pair
/// linked), ascending.
std::vector<MotifClass> triangle_classes();

/// True for a 3-node 3-event instance whose events cover all three node pairs.
bool is_triangle(const TemporalGraph& g, const MotifInstance& inst);

/// Triangle-instance counts per class in TF and TN, and the eight classes
/// with the smallest TN/TF ratio (classes without TF support rank last,
/// ties by class index).
struct NegativeSelection {
  std::vector<MotifClass> classes;
  std::array<std::uint64_t, kMotifClassCount> tf_triangles{};
  std::array<std::uint64_t, kMotifClassCount> tn_triangles{};
};

NegativeSelection select_negative_patterns(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                           std::size_t threads = 1);

/// Default positives with data-selected negatives.
PatternSet default_pattern_set(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                               std::size_t threads = 1);

/// Node filling `role` in the instance, if the instance matches it.
std::optional<NodeId> role_node(const TemporalGraph& g, const MotifInstance& inst, TargetRole role);

/// ln(pos + 1) - ln(neg + 1).
double vendor_score(std::uint64_t positive, std::uint64_t negative);

struct VendorCounts {
  /// Indexed by NodeId over the shared id space.
  std::vector<std::uint64_t> positive;
  std::vector<std::uint64_t> negative;
};

/// Pattern counts for every user; TF and TN must share a dictionary.
VendorCounts vendor_pattern_counts(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                   const PatternSet& patterns, std::size_t threads = 1);

/// vs(u); users absent from both graphs score 0.
double vendor_score(NodeId u, const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                    const PatternSet& patterns);

struct VendorReport {
  std::size_t rank = 0;  // 1-based
  NodeId node = 0;
  std::string external_id;
  double score = 0.0;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
};

/// Top-k users of TF ∪ TN by score, ties by external id ascending.
std::vector<VendorReport> rank_vendors(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                       const PatternSet& patterns, std::size_t k, std::size_t threads = 1);

/// `rank,node,score,pos_count,neg_count`.
void write_vendor_csv(std::ostream& out, std::span<const VendorReport> reports);

struct CycleReport {
  std::vector<MotifInstance> cycles;  // truncated at the limit
  std::uint64_t total_cycles = 0;
  std::uint64_t total_triples = 0;
  /// total_cycles / total_triples, 0 without triples.
  double share = 0.0;
};

/// 3-node convey-convey instances in time order, with their share of all
/// 3-event motifs. Throws std::invalid_argument when window <= 0 or limit is 0.
CycleReport mine_cycles(const TemporalGraph& g, Seconds window, std::size_t limit);

struct NoteMatch {
  EventIndex event = 0;
  std::string sender;
  std::string receiver;
  Timestamp time = 0;
  std::string note;
};

/// Events of the instances whose note contains `keyword` (ASCII
/// case-insensitive), once per event, in time order.
std::vector<NoteMatch> search_notes(const TemporalGraph& g, std::span<const MotifInstance> instances,
                                    std::string_view keyword);

/// `cycle,sender,receiver,time,datetime,note`, one row per cycle event.
void write_cycle_csv(std::ostream& out, const TemporalGraph& g, std::span<const MotifInstance> cycles);
/// `sender,receiver,time,datetime,note`.
void write_note_csv(std::ostream& out, std::span<const NoteMatch> matches);

/// UTC "YYYY-MM-DD HH:MM:SS".
std::string format_utc(Timestamp t);

}  // namespace tmotif
