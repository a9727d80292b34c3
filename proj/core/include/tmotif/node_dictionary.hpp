#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmotif/types.hpp"

namespace tmotif {

/// Bidirectional map between external string ids and dense NodeIds,
/// assigned in first-seen order.
class NodeDictionary {
 public:
  NodeId intern(std::string_view external);

  std::optional<NodeId> find(std::string_view external) const;
  /// Throws std::out_of_range for unknown ids.
  NodeId at(std::string_view external) const;
  const std::string& external(NodeId id) const;

  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

}  // namespace tmotif
