#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tmotif/types.hpp"

namespace tmotif {

/// The six configurations of two node-sharing events e1=(u1,v1), e2=(u2,v2).
enum class PairType : std::uint8_t {
  Repetition,       // u2=u1, v2=v1
  PingPong,         // u2=v1, v2=u1
  InBurst,          // v2=v1, u2≠u1
  OutBurst,         // u2=u1, v2≠v1
  Convey,           // u2=v1, v2≠u1
  WeaklyConnected,  // v2=u1, u2≠v1
};

inline constexpr std::size_t kPairTypeCount = 6;
inline constexpr std::size_t kMotifClassCount = kPairTypeCount + kPairTypeCount * kPairTypeCount;

inline constexpr std::array<PairType, kPairTypeCount> kAllPairTypes = {
    PairType::Repetition, PairType::PingPong, PairType::InBurst,
    PairType::OutBurst,   PairType::Convey,   PairType::WeaklyConnected};

/// snake_case name, e.g. "ping_pong".
std::string_view pair_type_name(PairType t);
/// One-letter heatmap label: R, P, I, O, C, W.
char pair_type_letter(PairType t);

/// A 2-event motif Pair(t) or a 3-event motif Seq(first, second).
///
/// Canonical encoding: Pair(t) = t (0..5); Seq(a, b) = 6 + 6a + b (6..41).
class MotifClass {
 public:
  static constexpr MotifClass pair(PairType t) { return MotifClass(static_cast<std::uint8_t>(t)); }
  static constexpr MotifClass seq(PairType first, PairType second) {
    return MotifClass(static_cast<std::uint8_t>(kPairTypeCount + kPairTypeCount * static_cast<std::size_t>(first) +
                                                static_cast<std::size_t>(second)));
  }
  /// Throws std::out_of_range for codes >= 42.
  static MotifClass from_index(std::size_t index);
  /// Parses "pair:convey" / "seq:ping_pong+out_burst".
  static std::optional<MotifClass> from_name(std::string_view name);

  constexpr std::size_t index() const { return code_; }
  constexpr bool is_pair() const { return code_ < kPairTypeCount; }
  constexpr std::size_t event_count() const { return is_pair() ? 2 : 3; }
  /// Pair type of (e1, e2).
  constexpr PairType first() const {
    return is_pair() ? static_cast<PairType>(code_)
                     : static_cast<PairType>((code_ - kPairTypeCount) / kPairTypeCount);
  }
  /// Pair type of (e2, e3); only meaningful for 3-event classes.
  constexpr PairType second() const {
    return static_cast<PairType>((code_ - kPairTypeCount) % kPairTypeCount);
  }
  bool contains(PairType t) const { return first() == t || (!is_pair() && second() == t); }

  std::string name() const;

  constexpr bool operator==(const MotifClass&) const = default;
  constexpr auto operator<=>(const MotifClass&) const = default;

 private:
  constexpr explicit MotifClass(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

/// Pair type of two events, or nullopt when their endpoint sets are disjoint.
/// Throws std::invalid_argument when e1 is later than e2, when the timestamps
/// are equal, or when either event is a self-loop.
std::optional<PairType> classify_pair(const Event& e1, const Event& e2);

/// Same mapping without validation; the events must share a node and neither
/// may be a self-loop.
PairType pair_type_unchecked(const Event& e1, const Event& e2);

}  // namespace tmotif
