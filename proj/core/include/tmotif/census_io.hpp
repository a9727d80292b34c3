#pragma once

#include <ostream>

#include "tmotif/motif_census.hpp"

namespace tmotif {

/// JSON object keyed by canonical class names in class order:
/// {"window": W, "counts": {...}, "by_node_count": {...}[, "buckets": {...}]}.
void write_census_json(std::ostream& out, const MotifCensus& census, Seconds window);

/// `class,count` rows in canonical order; with CV buckets, `class,count,bucket`
/// with one row per (class, bucket).
void write_census_csv(std::ostream& out, const MotifCensus& census);

}  // namespace tmotif
