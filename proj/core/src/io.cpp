#include "tmotif/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include "tmotif/csv.hpp"
#include "tmotif/error.hpp"

namespace tmotif {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

const std::string& field(const csv::Reader& reader, const std::vector<std::string>& fields,
                         std::size_t column, const char* role) {
  if (column >= fields.size()) {
    reader.fail("row has " + std::to_string(fields.size()) + " fields, missing " + role);
  }
  return fields[column];
}

Timestamp parse_time(const csv::Reader& reader, const std::string& text) {
  Timestamp value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    reader.fail("time '" + text + "' is not an integer");
  }
  return value;
}

double parse_amount(const csv::Reader& reader, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    reader.fail("amount '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(value)) reader.fail("amount '" + text + "' is not a number");
  if (value < 0.0) reader.fail("negative amount '" + text + "'");
  return value;
}

}  // namespace

TemporalGraph read_events(std::istream& in, const std::string& source_name,
                          const ColumnMapping& columns, const std::vector<std::string>& extra_nodes) {
  csv::Reader reader(in, source_name);
  TemporalGraph::Builder builder;
  if (!reader.read_header()) {
    for (const auto& n : extra_nodes) builder.add_node(n);
    return std::move(builder).build();
  }
  const std::size_t src_col = reader.require_column(columns.src);
  const std::size_t dst_col = reader.require_column(columns.dst);
  const std::size_t time_col = reader.require_column(columns.time);
  const auto amount_col = columns.amount.empty() ? std::nullopt : reader.column(columns.amount);
  const auto note_col = columns.note.empty() ? std::nullopt : reader.column(columns.note);

  std::vector<std::string> fields;
  while (reader.next(fields)) {
    const std::string& src = field(reader, fields, src_col, "src");
    const std::string& dst = field(reader, fields, dst_col, "dst");
    if (src.empty() || dst.empty()) reader.fail("empty node id");
    const Timestamp time = parse_time(reader, field(reader, fields, time_col, "time"));
    std::optional<double> amount;
    if (amount_col && *amount_col < fields.size() && !fields[*amount_col].empty()) {
      amount = parse_amount(reader, fields[*amount_col]);
    }
    std::optional<std::string> note;
    if (note_col && *note_col < fields.size() && !fields[*note_col].empty()) {
      note = fields[*note_col];
    }
    builder.add_event(src, dst, time, amount, std::move(note));
  }
  for (const auto& n : extra_nodes) builder.add_node(n);
  return std::move(builder).build();
}

TemporalGraph load_events(const std::filesystem::path& path, const ColumnMapping& columns,
                          const std::vector<std::string>& extra_nodes) {
  auto in = open_input(path);
  return read_events(in, path.string(), columns, extra_nodes);
}

void write_events(std::ostream& out, const TemporalGraph& g) {
  const auto events = g.events();
  const bool amounts = std::any_of(events.begin(), events.end(), [](const Event& e) { return e.amount.has_value(); });
  const bool notes = std::any_of(events.begin(), events.end(), [](const Event& e) { return e.note.has_value(); });
  std::vector<std::string> row{"src", "dst", "time"};
  if (amounts) row.emplace_back("amount");
  if (notes) row.emplace_back("note");
  csv::write_row(out, row);
  const auto& dict = g.dictionary();
  char buf[64];
  for (const Event& e : events) {
    row.assign({dict.external(e.src), dict.external(e.dst), std::to_string(e.time)});
    if (amounts) {
      if (e.amount) {
        const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, *e.amount);
        row.emplace_back(buf, end);
      } else {
        row.emplace_back();
      }
    }
    if (notes) row.push_back(e.note.value_or(""));
    csv::write_row(out, row);
  }
}

std::vector<ExternalPair> read_friend_pairs(std::istream& in, const std::string& source_name) {
  csv::Reader reader(in, source_name);
  std::set<ExternalPair> pairs;
  if (reader.read_header()) {
    const std::size_t u_col = reader.require_column("u");
    const std::size_t v_col = reader.require_column("v");
    std::vector<std::string> fields;
    while (reader.next(fields)) {
      std::string u = field(reader, fields, u_col, "u");
      std::string v = field(reader, fields, v_col, "v");
      if (u.empty() || v.empty()) reader.fail("empty node id");
      if (u == v) reader.fail("self friendship '" + u + "'");
      if (v < u) std::swap(u, v);
      pairs.emplace(std::move(u), std::move(v));
    }
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<ExternalPair> load_friend_pairs(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_friend_pairs(in, path.string());
}

std::vector<std::pair<std::string, int>> read_labels(std::istream& in,
                                                     const std::string& source_name) {
  csv::Reader reader(in, source_name);
  std::map<std::string, int> labels;
  if (reader.read_header()) {
    const std::size_t node_col = reader.require_column("node");
    const std::size_t label_col = reader.require_column("label");
    std::vector<std::string> fields;
    while (reader.next(fields)) {
      const std::string& node = field(reader, fields, node_col, "node");
      const std::string& text = field(reader, fields, label_col, "label");
      if (node.empty()) reader.fail("empty node id");
      if (text != "0" && text != "1") reader.fail("label '" + text + "' is not 0 or 1");
      const int label = text == "1" ? 1 : 0;
      const auto [it, inserted] = labels.emplace(node, label);
      if (!inserted && it->second != label) reader.fail("conflicting labels for '" + node + "'");
    }
  }
  return {labels.begin(), labels.end()};
}

std::vector<std::pair<std::string, int>> load_labels(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_labels(in, path.string());
}

}  // namespace tmotif
