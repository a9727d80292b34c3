#include "tmotif/link_heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <vector>

namespace tmotif {
namespace {

std::vector<NodeId> common(const StaticProjection& proj, NodeId u, NodeId v) {
  proj.require_node(u);
  proj.require_node(v);
  const auto a = proj.neighbors(u);
  const auto b = proj.neighbors(v);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

double jaccard(const StaticProjection& proj, NodeId u, NodeId v) {
  const std::size_t shared = common(proj, u, v).size();
  const std::size_t uni = proj.neighbors(u).size() + proj.neighbors(v).size() - shared;
  return uni == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(uni);
}

double adamic_adar(const StaticProjection& proj, NodeId u, NodeId v) {
  double score = 0.0;
  for (const NodeId w : common(proj, u, v)) {
    const std::size_t degree = proj.neighbors(w).size();
    if (degree >= 2) score += 1.0 / std::log(static_cast<double>(degree));
  }
  return score;
}

}  // namespace tmotif
