#include "tmotif/node_dictionary.hpp"

#include <limits>
#include <stdexcept>

namespace tmotif {

NodeId NodeDictionary::intern(std::string_view external) {
  std::string key(external);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  if (names_.size() >= std::numeric_limits<NodeId>::max()) {
    throw std::length_error("NodeDictionary: node id space exhausted");
  }
  const auto id = static_cast<NodeId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<NodeId> NodeDictionary::find(std::string_view external) const {
  if (auto it = index_.find(std::string(external)); it != index_.end()) return it->second;
  return std::nullopt;
}

NodeId NodeDictionary::at(std::string_view external) const {
  if (auto id = find(external)) return *id;
  throw std::out_of_range("unknown node id '" + std::string(external) + "'");
}

const std::string& NodeDictionary::external(NodeId id) const {
  if (id >= names_.size()) throw std::out_of_range("node index out of range");
  return names_[id];
}

}  // namespace tmotif
