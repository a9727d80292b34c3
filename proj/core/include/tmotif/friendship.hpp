#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tmotif/io.hpp"
#include "tmotif/node_dictionary.hpp"
#include "tmotif/types.hpp"

namespace tmotif {

/// Static undirected friendship relation over internal node ids.
class FriendshipSet {
 public:
  using Pair = std::pair<NodeId, NodeId>;

  FriendshipSet() = default;
  /// Pairs are normalized to (min, max) and deduplicated; self pairs are
  /// rejected with std::invalid_argument.
  explicit FriendshipSet(std::vector<Pair> pairs);

  /// Resolves external ids; throws std::out_of_range for ids missing from
  /// the dictionary.
  static FriendshipSet from_external(std::span<const ExternalPair> pairs, const NodeDictionary& dict);

  bool contains(NodeId u, NodeId v) const;
  /// Ascending (min, max) pairs.
  std::span<const Pair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::vector<Pair> pairs_;
};

inline FriendshipSet::Pair ordered_pair(NodeId u, NodeId v) {
  return u < v ? FriendshipSet::Pair{u, v} : FriendshipSet::Pair{v, u};
}

}  // namespace tmotif
