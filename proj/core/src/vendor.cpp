#include "tmotif/vendor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <set>
#include <stdexcept>

#include "tmotif/csv.hpp"
#include "tmotif/feature_matrix.hpp"
#include "tmotif/motif_counter.hpp"
#include "tmotif/parallel.hpp"

namespace tmotif {
namespace {

// fn(worker, instance) over anchor chunks; workers index per-worker buffers.
template <class Fn>
void visit_parallel(const TemporalGraph& g, Seconds window, MotifOrder order, std::size_t workers, Fn&& fn) {
  parallel_chunks(g.event_count(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    visit_instances(g, window, order, begin, end, [&](const MotifInstance& inst) { fn(w, inst); });
  });
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

TransactionSplit split_tf_tn(const TemporalGraph& txn, const FriendshipSet& friends) {
  std::vector<EventIndex> tf, tn;
  for (std::size_t i = 0; i < txn.event_count(); ++i) {
    const Event& e = txn.event(static_cast<EventIndex>(i));
    const bool friendly = !e.is_self_loop() && friends.contains(e.src, e.dst);
    (friendly ? tf : tn).push_back(static_cast<EventIndex>(i));
  }
  const std::vector<NodeId> nodes(txn.nodes().begin(), txn.nodes().end());
  return {txn.subgraph(tf, nodes), txn.subgraph(tn, nodes)};
}

RatioHeatmap tn_tf_ratio_heatmap(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                 std::size_t threads) {
  const MotifCensus tf_census = count_motifs(tf, window, MotifOrder::Three, threads);
  const MotifCensus tn_census = count_motifs(tn, window, MotifOrder::Three, threads);
  RatioHeatmap h;
  for (const PairType a : kAllPairTypes) {
    for (const PairType b : kAllPairTypes) {
      const auto r = static_cast<std::size_t>(a);
      const auto c = static_cast<std::size_t>(b);
      const auto motif = MotifClass::seq(a, b);
      h.tf_counts[r][c] = tf_census.count(motif);
      h.tn_counts[r][c] = tn_census.count(motif);
      if (h.tf_counts[r][c] > 0) {
        h.ratio[r][c] = static_cast<double>(h.tn_counts[r][c]) / static_cast<double>(h.tf_counts[r][c]);
      }
    }
  }
  return h;
}

void write_heatmap_csv(std::ostream& out, const RatioHeatmap& heatmap) {
  std::vector<std::string> row{"first"};
  for (const PairType t : kAllPairTypes) row.emplace_back(1, pair_type_letter(t));
  csv::write_row(out, row);
  for (const PairType a : kAllPairTypes) {
    row.assign({std::string(1, pair_type_letter(a))});
    for (const PairType b : kAllPairTypes) {
      const auto& cell = heatmap.ratio[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      row.push_back(cell ? format_double(*cell) : "NA");
    }
    csv::write_row(out, row);
  }
}

std::vector<PositivePattern> default_positive_patterns() {
  using P = PairType;
  return {
      {MotifClass::pair(P::InBurst), TargetRole::InBurstReceiver},
      {MotifClass::pair(P::PingPong), TargetRole::PingPongFirstReceiver},
      {MotifClass::seq(P::Repetition, P::InBurst), TargetRole::RepeatedReceiver},
      {MotifClass::seq(P::InBurst, P::InBurst), TargetRole::RepeatedReceiver},
      {MotifClass::seq(P::InBurst, P::Repetition), TargetRole::RepeatedReceiver},
      {MotifClass::seq(P::InBurst, P::PingPong), TargetRole::ReceiverThenRefunder},
      {MotifClass::seq(P::InBurst, P::Convey), TargetRole::ReceiverThenRefunder},
  };
}

std::vector<MotifClass> triangle_classes() {
  // Every orientation of three events on nodes {0, 1, 2}.
  static const std::vector<MotifClass> classes = [] {
    std::vector<Event> arcs;
    for (NodeId a = 0; a < 3; ++a) {
      for (NodeId b = 0; b < 3; ++b) {
        if (a != b) arcs.push_back(Event{a, b, 0, std::nullopt, std::nullopt});
      }
    }
    std::set<MotifClass> found;
    for (const Event& x : arcs) {
      for (const Event& y : arcs) {
        for (const Event& z : arcs) {
          std::set<std::pair<NodeId, NodeId>> links;
          for (const Event* e : {&x, &y, &z}) links.insert(std::minmax(e->src, e->dst));
          if (links.size() != 3) continue;
          found.insert(MotifClass::seq(pair_type_unchecked(x, y), pair_type_unchecked(y, z)));
        }
      }
    }
    return std::vector<MotifClass>(found.begin(), found.end());
  }();
  return classes;
}

bool is_triangle(const TemporalGraph& g, const MotifInstance& inst) {
  if (inst.event_count != 3 || inst.node_count != 3) return false;
  std::array<std::pair<NodeId, NodeId>, 3> links;
  for (std::size_t k = 0; k < 3; ++k) {
    const Event& e = g.event(inst.events[k]);
    links[k] = std::minmax(e.src, e.dst);
  }
  return links[0] != links[1] && links[1] != links[2] && links[0] != links[2];
}

void PatternSet::validate() const {
  if (positive.size() != kPositiveCount) {
    throw std::invalid_argument("pattern set needs exactly 7 positive patterns");
  }
  if (negative.size() != kNegativeCount) {
    throw std::invalid_argument("pattern set needs exactly 8 negative patterns");
  }
  std::set<std::pair<std::size_t, int>> seen_pos;
  for (const auto& p : positive) {
    if (!seen_pos.emplace(p.motif.index(), static_cast<int>(p.role)).second) {
      throw std::invalid_argument("duplicate positive pattern");
    }
  }
  const auto triangles = triangle_classes();
  std::set<MotifClass> seen_neg;
  for (const MotifClass m : negative) {
    if (!seen_neg.insert(m).second) throw std::invalid_argument("duplicate negative pattern");
    if (!std::binary_search(triangles.begin(), triangles.end(), m)) {
      throw std::invalid_argument("negative pattern " + m.name() + " cannot form a triangle");
    }
  }
}

NegativeSelection select_negative_patterns(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                           std::size_t threads) {
  NegativeSelection sel;
  const auto count_into = [&](const TemporalGraph& g, std::array<std::uint64_t, kMotifClassCount>& out) {
    const std::size_t workers = std::max<std::size_t>(threads, 1);
    std::vector<std::array<std::uint64_t, kMotifClassCount>> partial(workers);
    visit_parallel(g, window, MotifOrder::Three, workers, [&](std::size_t w, const MotifInstance& inst) {
      if (is_triangle(g, inst)) ++partial[w][inst.motif.index()];
    });
    for (const auto& p : partial) {
      for (std::size_t c = 0; c < kMotifClassCount; ++c) out[c] += p[c];
    }
  };
  count_into(tf, sel.tf_triangles);
  count_into(tn, sel.tn_triangles);

  std::vector<MotifClass> candidates = triangle_classes();
  const auto key = [&](MotifClass m) {
    const std::uint64_t f = sel.tf_triangles[m.index()];
    const double ratio = f == 0 ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(sel.tn_triangles[m.index()]) / static_cast<double>(f);
    return std::make_pair(ratio, m.index());
  };
  std::sort(candidates.begin(), candidates.end(), [&](MotifClass a, MotifClass b) { return key(a) < key(b); });
  if (candidates.size() > PatternSet::kNegativeCount) candidates.erase(candidates.begin() + PatternSet::kNegativeCount, candidates.end());
  sel.classes = candidates;
  return sel;
}

PatternSet default_pattern_set(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                               std::size_t threads) {
  PatternSet set;
  set.positive = default_positive_patterns();
  set.negative = select_negative_patterns(tf, tn, window, threads).classes;
  set.validate();
  return set;
}

std::optional<NodeId> role_node(const TemporalGraph& g, const MotifInstance& inst, TargetRole role) {
  const Event& e1 = g.event(inst.events[0]);
  const Event& e2 = g.event(inst.events[1]);
  switch (role) {
    case TargetRole::InBurstReceiver:
      if (inst.event_count == 2 && inst.motif == MotifClass::pair(PairType::InBurst)) return e1.dst;
      return std::nullopt;
    case TargetRole::PingPongFirstReceiver:
      if (inst.event_count == 2 && inst.motif == MotifClass::pair(PairType::PingPong)) return e1.dst;
      return std::nullopt;
    case TargetRole::RepeatedReceiver: {
      if (inst.event_count != 3 || inst.node_count != 3) return std::nullopt;
      const Event& e3 = g.event(inst.events[2]);
      if (e1.dst == e2.dst && e2.dst == e3.dst) return e1.dst;
      return std::nullopt;
    }
    case TargetRole::ReceiverThenRefunder: {
      if (inst.event_count != 3 || inst.node_count != 3) return std::nullopt;
      const Event& e3 = g.event(inst.events[2]);
      if (e1.dst == e2.dst && e1.src != e2.src && e3.src == e1.dst && (e3.dst == e1.src || e3.dst == e2.src)) {
        return e1.dst;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double vendor_score(std::uint64_t positive, std::uint64_t negative) {
  return std::log(static_cast<double>(positive) + 1.0) - std::log(static_cast<double>(negative) + 1.0);
}

VendorCounts vendor_pattern_counts(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                   const PatternSet& patterns, std::size_t threads) {
  if (tf.shared_dictionary() != tn.shared_dictionary()) {
    throw std::invalid_argument("vendor_pattern_counts: TF and TN must share a node dictionary");
  }
  detail::require_window(window);
  const std::size_t space = tf.id_space();
  const std::size_t workers = std::max<std::size_t>(threads, 1);

  std::array<std::vector<TargetRole>, kMotifClassCount> roles_by_class;
  for (const auto& p : patterns.positive) roles_by_class[p.motif.index()].push_back(p.role);
  std::array<bool, kMotifClassCount> negative_class{};
  for (const MotifClass m : patterns.negative) negative_class[m.index()] = true;

  std::vector<std::vector<std::uint64_t>> pos(workers, std::vector<std::uint64_t>(space, 0));
  std::vector<std::vector<std::uint64_t>> neg(workers, std::vector<std::uint64_t>(space, 0));
  visit_parallel(tn, window, MotifOrder::Both, workers, [&](std::size_t w, const MotifInstance& inst) {
    for (const TargetRole role : roles_by_class[inst.motif.index()]) {
      if (auto n = role_node(tn, inst, role)) ++pos[w][*n];
    }
  });
  visit_parallel(tf, window, MotifOrder::Three, workers, [&](std::size_t w, const MotifInstance& inst) {
    if (!negative_class[inst.motif.index()] || !is_triangle(tf, inst)) return;
    for (const NodeId n : inst.node_set()) ++neg[w][n];
  });

  VendorCounts counts;
  counts.positive.assign(space, 0);
  counts.negative.assign(space, 0);
  for (std::size_t w = 0; w < workers; ++w) {
    for (std::size_t n = 0; n < space; ++n) {
      counts.positive[n] += pos[w][n];
      counts.negative[n] += neg[w][n];
    }
  }
  return counts;
}

double vendor_score(NodeId u, const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                    const PatternSet& patterns) {
  if (!tf.has_node(u) && !tn.has_node(u)) return 0.0;
  const VendorCounts counts = vendor_pattern_counts(tf, tn, window, patterns);
  return vendor_score(counts.positive[u], counts.negative[u]);
}

std::vector<VendorReport> rank_vendors(const TemporalGraph& tf, const TemporalGraph& tn, Seconds window,
                                       const PatternSet& patterns, std::size_t k, std::size_t threads) {
  if (k == 0) throw std::invalid_argument("rank_vendors: k must be >= 1");
  patterns.validate();
  const VendorCounts counts = vendor_pattern_counts(tf, tn, window, patterns, threads);
  std::vector<NodeId> users;
  std::set_union(tf.nodes().begin(), tf.nodes().end(), tn.nodes().begin(), tn.nodes().end(),
                 std::back_inserter(users));
  const auto& dict = tf.dictionary();
  std::vector<VendorReport> reports;
  reports.reserve(users.size());
  for (const NodeId u : users) {
    reports.push_back({0, u, dict.external(u), vendor_score(counts.positive[u], counts.negative[u]),
                       counts.positive[u], counts.negative[u]});
  }
  std::sort(reports.begin(), reports.end(), [](const VendorReport& a, const VendorReport& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.external_id < b.external_id;
  });
  if (reports.size() > k) reports.resize(k);
  for (std::size_t i = 0; i < reports.size(); ++i) reports[i].rank = i + 1;
  return reports;
}

void write_vendor_csv(std::ostream& out, std::span<const VendorReport> reports) {
  csv::write_row(out, {"rank", "node", "score", "pos_count", "neg_count"});
  for (const auto& r : reports) {
    csv::write_row(out, {std::to_string(r.rank), r.external_id, format_double(r.score),
                         std::to_string(r.positive), std::to_string(r.negative)});
  }
}

CycleReport mine_cycles(const TemporalGraph& g, Seconds window, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("mine_cycles: limit must be >= 1");
  CycleReport report;
  visit_instances(g, window, MotifOrder::Three, [&](const MotifInstance& inst) {
    ++report.total_triples;
    if (!is_temporal_cycle(inst)) return;
    ++report.total_cycles;
    if (report.cycles.size() < limit) report.cycles.push_back(inst);
  });
  if (report.total_triples > 0) {
    report.share = static_cast<double>(report.total_cycles) / static_cast<double>(report.total_triples);
  }
  return report;
}

std::vector<NoteMatch> search_notes(const TemporalGraph& g, std::span<const MotifInstance> instances,
                                    std::string_view keyword) {
  const std::string needle = lower_ascii(keyword);
  std::set<EventIndex> hits;
  for (const auto& inst : instances) {
    for (const EventIndex i : inst.event_indices()) {
      const auto& note = g.event(i).note;
      if (note && lower_ascii(*note).find(needle) != std::string::npos) hits.insert(i);
    }
  }
  std::vector<NoteMatch> out;
  const auto& dict = g.dictionary();
  for (const EventIndex i : hits) {
    const Event& e = g.event(i);
    out.push_back({i, dict.external(e.src), dict.external(e.dst), e.time, *e.note});
  }
  return out;
}

std::string format_utc(Timestamp t) {
  // Civil-from-days conversion on the proleptic Gregorian calendar.
  Timestamp days = t >= 0 ? t / 86400 : (t - 86399) / 86400;
  const Timestamp secs = t - days * 86400;
  days += 719468;
  const Timestamp era = (days >= 0 ? days : days - 146096) / 146097;
  const Timestamp doe = days - era * 146097;
  const Timestamp yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const Timestamp doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const Timestamp mp = (5 * doy + 2) / 153;
  const Timestamp day = doy - (153 * mp + 2) / 5 + 1;
  const Timestamp month = mp < 10 ? mp + 3 : mp - 9;
  const Timestamp year = yoe + era * 400 + (month <= 2 ? 1 : 0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lld %02lld:%02lld:%02lld", static_cast<long long>(year),
                static_cast<long long>(month), static_cast<long long>(day), static_cast<long long>(secs / 3600),
                static_cast<long long>(secs % 3600 / 60), static_cast<long long>(secs % 60));
  return buf;
}

void write_cycle_csv(std::ostream& out, const TemporalGraph& g, std::span<const MotifInstance> cycles) {
  csv::write_row(out, {"cycle", "sender", "receiver", "time", "datetime", "note"});
  const auto& dict = g.dictionary();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const EventIndex i : cycles[c].event_indices()) {
      const Event& e = g.event(i);
      csv::write_row(out, {std::to_string(c + 1), dict.external(e.src), dict.external(e.dst),
                           std::to_string(e.time), format_utc(e.time), e.note.value_or("")});
    }
  }
}

void write_note_csv(std::ostream& out, std::span<const NoteMatch> matches) {
  csv::write_row(out, {"sender", "receiver", "time", "datetime", "note"});
  for (const auto& m : matches) {
    csv::write_row(out, {m.sender, m.receiver, std::to_string(m.time), format_utc(m.time), m.note});
  }
}

}  // namespace tmotif
