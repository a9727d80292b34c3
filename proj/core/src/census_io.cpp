#include "tmotif/census_io.hpp"

#include "json.hpp"
#include "tmotif/csv.hpp"

namespace tmotif {

void write_census_json(std::ostream& out, const MotifCensus& census, Seconds window) {
  nlohmann::ordered_json doc;
  doc["window"] = window;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  nlohmann::ordered_json by_nodes = nlohmann::ordered_json::object();
  nlohmann::ordered_json buckets = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < kMotifClassCount; ++c) {
    const auto motif = MotifClass::from_index(c);
    const std::string name = motif.name();
    counts[name] = census.counts[c];
    nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < 3; ++k) {
      if (motif.is_pair() && k == 2) continue;
      nodes[std::to_string(k + 2)] = census.by_node_count[c][k];
    }
    by_nodes[name] = nodes;
    if (census.has_buckets) {
      nlohmann::ordered_json b = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < kCvBucketCount; ++k) {
        b[std::string(cv_bucket_name(static_cast<CvBucket>(k)))] = census.buckets[c][k];
      }
      buckets[name] = b;
    }
  }
  doc["counts"] = counts;
  doc["by_node_count"] = by_nodes;
  if (census.has_buckets) doc["buckets"] = buckets;
  doc["totals"] = {{"pairs", census.total_pairs()}, {"triples", census.total_triples()}};
  out << doc.dump(2) << '\n';
}

void write_census_csv(std::ostream& out, const MotifCensus& census) {
  if (!census.has_buckets) {
    csv::write_row(out, {"class", "count"});
    for (std::size_t c = 0; c < kMotifClassCount; ++c) {
      csv::write_row(out, {MotifClass::from_index(c).name(), std::to_string(census.counts[c])});
    }
    return;
  }
  csv::write_row(out, {"class", "count", "bucket"});
  for (std::size_t c = 0; c < kMotifClassCount; ++c) {
    for (std::size_t k = 0; k < kCvBucketCount; ++k) {
      csv::write_row(out, {MotifClass::from_index(c).name(), std::to_string(census.buckets[c][k]),
                           std::string(cv_bucket_name(static_cast<CvBucket>(k)))});
    }
  }
}

}  // namespace tmotif
