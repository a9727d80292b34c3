#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/temporal_graph.hpp"

namespace tmotif {

/// Header names mapped onto event roles. Empty amount/note names mean the
/// column is optional and is picked up only if the header has it.
struct ColumnMapping {
  std::string src = "src";
  std::string dst = "dst";
  std::string time = "time";
  std::string amount = "amount";
  std::string note = "note";
};

/// Reads an event CSV (`src,dst,time[,amount][,note]`). `extra_nodes` are
/// registered as members even when they have no events (friend/label files).
/// Throws ParseError with the offending line number on malformed rows and on
/// negative amounts, DataError when the file cannot be opened.
TemporalGraph load_events(const std::filesystem::path& path, const ColumnMapping& columns = {},
                          const std::vector<std::string>& extra_nodes = {});
TemporalGraph read_events(std::istream& in, const std::string& source_name,
                          const ColumnMapping& columns = {},
                          const std::vector<std::string>& extra_nodes = {});

/// Writes `src,dst,time[,amount][,note]`; optional columns appear when any
/// event carries them.
void write_events(std::ostream& out, const TemporalGraph& g);

using ExternalPair = std::pair<std::string, std::string>;

/// Friendship CSV `u,v`: undirected, deduplicated, self pairs rejected.
/// Pairs are normalized so first < second.
std::vector<ExternalPair> load_friend_pairs(const std::filesystem::path& path);
std::vector<ExternalPair> read_friend_pairs(std::istream& in, const std::string& source_name);

/// Label CSV `node,label` with label in {0,1}; duplicate nodes must agree.
std::vector<std::pair<std::string, int>> load_labels(const std::filesystem::path& path);
std::vector<std::pair<std::string, int>> read_labels(std::istream& in,
                                                     const std::string& source_name);

}  // namespace tmotif
