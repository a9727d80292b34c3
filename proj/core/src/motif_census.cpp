#include "tmotif/motif_census.hpp"

#include <algorithm>

namespace tmotif {

std::string_view cv_bucket_name(CvBucket b) {
  switch (b) {
    case CvBucket::Small: return "s";
    case CvBucket::Medium: return "m";
    case CvBucket::Large: return "l";
  }
  return "?";
}

bool MotifInstance::contains(NodeId n) const {
  const auto set = node_set();
  return std::find(set.begin(), set.end(), n) != set.end();
}

std::uint64_t MotifCensus::total() const { return total_pairs() + total_triples(); }

std::uint64_t MotifCensus::total_pairs() const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < kPairTypeCount; ++i) sum += counts[i];
  return sum;
}

std::uint64_t MotifCensus::total_triples() const {
  std::uint64_t sum = 0;
  for (std::size_t i = kPairTypeCount; i < kMotifClassCount; ++i) sum += counts[i];
  return sum;
}

void MotifCensus::add(const MotifInstance& inst) {
  const std::size_t c = inst.motif.index();
  ++counts[c];
  ++by_node_count[c][inst.node_count - 2];
}

MotifCensus& MotifCensus::operator+=(const MotifCensus& other) {
  has_buckets = has_buckets || other.has_buckets;
  has_ego_split = has_ego_split || other.has_ego_split;
  for (std::size_t c = 0; c < kMotifClassCount; ++c) {
    counts[c] += other.counts[c];
    for (std::size_t k = 0; k < 3; ++k) by_node_count[c][k] += other.by_node_count[c][k];
    for (std::size_t b = 0; b < kCvBucketCount; ++b) {
      buckets[c][b] += other.buckets[c][b];
      buckets_with_ego[c][b] += other.buckets_with_ego[c][b];
    }
    with_ego[c] += other.with_ego[c];
    without_ego[c] += other.without_ego[c];
  }
  return *this;
}

}  // namespace tmotif
