#include "tmotif/friendship.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmotif {

FriendshipSet::FriendshipSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  for (auto& p : pairs_) {
    if (p.first == p.second) throw std::invalid_argument("friendship with oneself");
    p = ordered_pair(p.first, p.second);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

FriendshipSet FriendshipSet::from_external(std::span<const ExternalPair> pairs,
                                           const NodeDictionary& dict) {
  std::vector<Pair> internal;
  internal.reserve(pairs.size());
  for (const auto& [u, v] : pairs) internal.emplace_back(dict.at(u), dict.at(v));
  return FriendshipSet(std::move(internal));
}

bool FriendshipSet::contains(NodeId u, NodeId v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), ordered_pair(u, v));
}

}  // namespace tmotif
