#pragma once

#include <cstddef>

#include "tmotif/motif_census.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif {

inline constexpr std::size_t kOracleDefaultCap = 200;

/// Reference census by exhaustive scan of every ordered event pair and
/// triple, O(|E|^3). Shares no code with the indexed counter, including the
/// pair classification. Throws std::invalid_argument when |E| > cap or
/// window <= 0.
MotifCensus count_motifs_oracle(const TemporalGraph& g, Seconds window,
                                MotifOrder order = MotifOrder::Both,
                                std::size_t cap = kOracleDefaultCap);

}  // namespace tmotif
