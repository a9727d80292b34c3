#pragma once

#include "tmotif/static_projection.hpp"

namespace tmotif {

/// |Γ(u) ∩ Γ(v)| / |Γ(u) ∪ Γ(v)| over undirected neighbor sets; 0 when the
/// union is empty. Throws std::out_of_range for unknown nodes.
double jaccard(const StaticProjection& proj, NodeId u, NodeId v);

/// Σ 1/ln|Γ(w)| over common neighbors w. Common neighbors of degree 1 add 0.
double adamic_adar(const StaticProjection& proj, NodeId u, NodeId v);

}  // namespace tmotif
