#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tmotif/motif_counter.hpp"
#include "tmotif/vendor.hpp"

namespace tmotif {
namespace {

using testing::id;
using P = PairType;

struct Tx {
  std::string src, dst;
  Timestamp time;
  std::optional<std::string> note = std::nullopt;
};

TemporalGraph build(const std::vector<Tx>& txs, const std::vector<std::string>& extra = {}) {
  TemporalGraph::Builder b;
  for (const auto& n : extra) b.add_node(n);
  for (const auto& t : txs) b.add_event(t.src, t.dst, t.time, std::nullopt, t.note);
  return std::move(b).build();
}

FriendshipSet friends_of(const TemporalGraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<FriendshipSet::Pair> ids;
  for (const auto& [a, b] : pairs) ids.emplace_back(id(g, a), id(g, b));
  return FriendshipSet(std::move(ids));
}

TEST(SplitTfTn, FriendEventsGoToTf) {
  const auto g = build({{"a", "b", 0}, {"a", "c", 1}, {"b", "a", 2}, {"a", "a", 3}});
  const auto split = split_tf_tn(g, friends_of(g, {{"b", "a"}}));
  EXPECT_EQ(split.friends.event_count(), 2u);
  EXPECT_EQ(split.strangers.event_count(), 2u);
  EXPECT_EQ(split.friends.node_count(), g.node_count());
  EXPECT_EQ(split.strangers.node_count(), g.node_count());
  EXPECT_EQ(split.friends.shared_dictionary(), g.shared_dictionary());
}

TEST(SplitTfTn, PartitionProperty) {
  Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(rng);
    std::vector<FriendshipSet::Pair> pairs;
    const auto nodes = g.nodes();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const NodeId u = nodes[rng.below(nodes.size())], v = nodes[rng.below(nodes.size())];
      if (u != v) pairs.emplace_back(u, v);
    }
    const FriendshipSet fs(pairs);
    const auto split = split_tf_tn(g, fs);
    ASSERT_EQ(split.friends.event_count() + split.strangers.event_count(), g.event_count());
    for (const auto& e : split.friends.events()) EXPECT_TRUE(!e.is_self_loop() && fs.contains(e.src, e.dst));
    for (const auto& e : split.strangers.events()) EXPECT_TRUE(e.is_self_loop() || !fs.contains(e.src, e.dst));
  }
}

TEST(RatioHeatmap, RatioOfCounts) {
  // TN: four repetition triples from one stranger pair. TF: one triple on each of two friend pairs.
  const auto g = build({{"a", "b", 0}, {"a", "b", 1}, {"a", "b", 2}, {"a", "b", 3},
                        {"c", "d", 100}, {"c", "d", 101}, {"c", "d", 102},
                        {"e", "f", 200}, {"e", "f", 201}, {"e", "f", 202}});
  const auto split = split_tf_tn(g, friends_of(g, {{"c", "d"}, {"e", "f"}}));
  const auto h = tn_tf_ratio_heatmap(split.friends, split.strangers, 10);
  const auto r = static_cast<std::size_t>(P::Repetition);
  EXPECT_EQ(h.tn_counts[r][r], 4u);
  EXPECT_EQ(h.tf_counts[r][r], 2u);
  ASSERT_TRUE(h.ratio[r][r].has_value());
  EXPECT_DOUBLE_EQ(*h.ratio[r][r], 2.0);
  const auto pp = static_cast<std::size_t>(P::PingPong);
  EXPECT_FALSE(h.ratio[pp][pp].has_value());

  std::ostringstream csv;
  write_heatmap_csv(csv, h);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "first,R,P,I,O,C,W");
  EXPECT_EQ(first, "R,2,NA,NA,NA,NA,NA");
}

TEST(RatioHeatmap, CellsAgreeWithCensusesProperty) {
  Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tf = testing::random_graph(rng), tn = testing::random_graph(rng);
    const auto h = tn_tf_ratio_heatmap(tf, tn, 8, 1 + trial % 3);
    const auto ctf = count_motifs(tf, 8), ctn = count_motifs(tn, 8);
    for (auto a : kAllPairTypes) {
      for (auto b : kAllPairTypes) {
        const auto i = static_cast<std::size_t>(a), j = static_cast<std::size_t>(b);
        const auto c = MotifClass::seq(a, b);
        EXPECT_EQ(h.tf_counts[i][j], ctf.count(c));
        EXPECT_EQ(h.tn_counts[i][j], ctn.count(c));
        EXPECT_EQ(h.ratio[i][j].has_value(), ctf.count(c) > 0);
        if (h.ratio[i][j]) EXPECT_DOUBLE_EQ(*h.ratio[i][j], double(ctn.count(c)) / double(ctf.count(c)));
      }
    }
  }
}

TEST(VendorScore, Arithmetic) {
  EXPECT_DOUBLE_EQ(vendor_score(0, 0), 0.0);
  EXPECT_NEAR(vendor_score(100, 0), 4.6151, 1e-4);
  EXPECT_NEAR(vendor_score(0, 100), -4.6151, 1e-4);
  EXPECT_DOUBLE_EQ(vendor_score(7, 7), 0.0);
}

TEST(VendorScore, MonotoneOverCountGrid) {
  for (std::uint64_t p = 0; p < 50; ++p) {
    for (std::uint64_t n = 0; n < 50; ++n) {
      EXPECT_LT(vendor_score(p, n), vendor_score(p + 1, n));
      EXPECT_GT(vendor_score(p, n), vendor_score(p, n + 1));
    }
  }
}

// Every class formed by orienting three time-ordered events over the three
// links of a triangle, found by counting each realization.
std::set<std::size_t> brute_triangle_classes() {
  const std::array<std::pair<std::string, std::string>, 6> arcs{
      {{"x", "y"}, {"y", "x"}, {"y", "z"}, {"z", "y"}, {"x", "z"}, {"z", "x"}}};
  std::set<std::size_t> out;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::size_t c = 0; c < 6; ++c) {
        if (a / 2 == b / 2 || b / 2 == c / 2 || a / 2 == c / 2) continue;
        const auto g = build({{arcs[a].first, arcs[a].second, 0},
                              {arcs[b].first, arcs[b].second, 1},
                              {arcs[c].first, arcs[c].second, 2}});
        const auto census = count_motifs(g, 10, MotifOrder::Three);
        for (std::size_t k = 0; k < kMotifClassCount; ++k) {
          if (census.counts[k] > 0) out.insert(k);
        }
      }
    }
  }
  return out;
}

TEST(Patterns, TriangleClassesMatchEnumeration) {
  const auto classes = triangle_classes();
  std::set<std::size_t> got;
  for (auto c : classes) got.insert(c.index());
  EXPECT_EQ(got, brute_triangle_classes());
  EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end(),
                             [](MotifClass l, MotifClass r) { return l.index() < r.index(); }));
}

TEST(Patterns, IsTriangle) {
  const auto g = build({{"a", "b", 0}, {"b", "c", 1}, {"c", "a", 2}, {"a", "b", 3}});
  const auto census_instances = enumerate_instances(g, 10, MotifClass::seq(P::Convey, P::Convey), 10);
  ASSERT_FALSE(census_instances.empty());
  EXPECT_TRUE(is_triangle(g, census_instances.front()));
  const auto path = build({{"a", "b", 0}, {"b", "c", 1}, {"c", "d", 2}});
  const auto chain = enumerate_instances(path, 10, MotifClass::seq(P::Convey, P::Convey), 10);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_FALSE(is_triangle(path, chain.front()));
}

PatternSet valid_set() {
  PatternSet s;
  s.positive = default_positive_patterns();
  const auto tri = triangle_classes();
  s.negative.assign(tri.begin(), tri.begin() + PatternSet::kNegativeCount);
  return s;
}

TEST(Patterns, Validation) {
  EXPECT_EQ(default_positive_patterns().size(), 7u);
  EXPECT_NO_THROW(valid_set().validate());
  auto seven = valid_set();
  seven.negative.pop_back();
  EXPECT_THROW(seven.validate(), std::invalid_argument);
  auto six = valid_set();
  six.positive.pop_back();
  EXPECT_THROW(six.validate(), std::invalid_argument);
  auto dup = valid_set();
  dup.negative.back() = dup.negative.front();
  EXPECT_THROW(dup.validate(), std::invalid_argument);
  auto wrong = valid_set();
  wrong.negative.back() = MotifClass::seq(P::Repetition, P::Repetition);
  EXPECT_THROW(wrong.validate(), std::invalid_argument);
}

TEST(Patterns, NegativeSelectionPrefersFriendTriangles) {
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tf = testing::random_graph(rng), tn = testing::random_graph(rng);
    const auto sel = select_negative_patterns(tf, tn, 10, 1 + trial % 2);
    ASSERT_EQ(sel.classes.size(), PatternSet::kNegativeCount);
    const auto ratio = [&](MotifClass c) {
      const auto f = sel.tf_triangles[c.index()];
      return f == 0 ? std::numeric_limits<double>::infinity() : double(sel.tn_triangles[c.index()]) / double(f);
    };
    double worst_kept = 0;
    for (auto c : sel.classes) worst_kept = std::max(worst_kept, ratio(c));
    for (auto c : triangle_classes()) {
      if (std::find(sel.classes.begin(), sel.classes.end(), c) == sel.classes.end()) {
        EXPECT_GE(ratio(c), worst_kept);
      }
    }
    PatternSet set{default_positive_patterns(), sel.classes};
    EXPECT_NO_THROW(set.validate());
  }
}

TEST(RoleNode, Roles) {
  const auto g = build({{"c1", "v", 0}, {"c2", "v", 1}, {"c1", "v", 2}, {"v", "c2", 3}});
  const auto in = enumerate_instances(g, 10, MotifClass::pair(P::InBurst), 10);
  ASSERT_FALSE(in.empty());
  EXPECT_EQ(role_node(g, in.front(), TargetRole::InBurstReceiver), id(g, "v"));
  const auto ii = enumerate_instances(g, 10, MotifClass::seq(P::InBurst, P::InBurst), 10);
  ASSERT_EQ(ii.size(), 1u);
  EXPECT_EQ(role_node(g, ii.front(), TargetRole::RepeatedReceiver), id(g, "v"));
  EXPECT_FALSE(role_node(g, ii.front(), TargetRole::ReceiverThenRefunder).has_value());
  const auto ip = enumerate_instances(g, 10, MotifClass::seq(P::InBurst, P::PingPong), 10);
  ASSERT_FALSE(ip.empty());
  EXPECT_EQ(role_node(g, ip.front(), TargetRole::ReceiverThenRefunder), id(g, "v"));
  const auto pp = build({{"a", "b", 0}, {"b", "a", 1}});
  const auto ping = enumerate_instances(pp, 10, MotifClass::pair(P::PingPong), 10);
  ASSERT_EQ(ping.size(), 1u);
  EXPECT_EQ(role_node(pp, ping.front(), TargetRole::PingPongFirstReceiver), id(pp, "b"));
}

// Friends pay each other around triangles; one vendor is paid by strangers.
std::pair<TemporalGraph, FriendshipSet> vendor_world(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Tx> txs;
  std::vector<std::pair<std::string, std::string>> fr;
  const int users = 30;
  auto name = [](int i) { return "u" + std::to_string(i); };
  Timestamp t = 0;
  for (int k = 0; k < 40; ++k) {
    const int a = static_cast<int>(rng.below(users));
    const int b = (a + 1 + static_cast<int>(rng.below(users - 1))) % users;
    const int c = (b + 1 + static_cast<int>(rng.below(users - 1))) % users;
    if (c == a) continue;
    fr.emplace_back(name(a), name(b));
    fr.emplace_back(name(b), name(c));
    fr.emplace_back(name(c), name(a));
    txs.push_back({name(a), name(b), t});
    txs.push_back({name(b), name(c), t + 10});
    txs.push_back({name(c), name(a), t + 20});
    t += 10000;
  }
  for (int k = 0; k < 20; ++k) {
    const int a = static_cast<int>(rng.below(users));
    const int b = (a + 1 + static_cast<int>(rng.below(users - 1))) % users;
    txs.push_back({name(a), "vendor", t});
    txs.push_back({name(b), "vendor", t + 60});
    txs.push_back({name(a), "vendor", t + 120});
    t += 10000;
  }
  const auto g = build(txs);
  return {g, friends_of(g, fr)};
}

TEST(RankVendors, PlantedVendorRanksFirst) {
  const auto [g, fs] = vendor_world(64);
  const auto split = split_tf_tn(g, fs);
  const auto patterns = default_pattern_set(split.friends, split.strangers, 3600);
  const auto top = rank_vendors(split.friends, split.strangers, 3600, patterns, 5);
  ASSERT_EQ(top.size(), 5u);
  EXPECT_EQ(top[0].external_id, "vendor");
  EXPECT_EQ(top[0].rank, 1u);
  EXPECT_GT(top[0].score, 0.0);
  EXPECT_EQ(top[0].negative, 0u);
  for (std::size_t i = 1; i < top.size(); ++i) {
    EXPECT_EQ(top[i].rank, i + 1);
    EXPECT_LE(top[i].score, top[i - 1].score);
  }
  EXPECT_DOUBLE_EQ(vendor_score(id(g, "vendor"), split.friends, split.strangers, 3600, patterns), top[0].score);
}

TEST(RankVendors, AllFriendTrianglesNeverScorePositive) {
  const auto [g, fs] = vendor_world(65);
  // Drop the vendor events: what remains is friends-only triangles.
  std::vector<EventIndex> keep;
  for (EventIndex i = 0; i < g.event_count(); ++i) {
    if (!g.event(i).touches(id(g, "vendor"))) keep.push_back(i);
  }
  std::vector<NodeId> nodes;
  for (auto n : g.nodes()) {
    if (n != id(g, "vendor")) nodes.push_back(n);
  }
  const auto friends_only = g.subgraph(keep, nodes);
  const auto split = split_tf_tn(friends_only, fs);
  ASSERT_EQ(split.strangers.event_count(), 0u);
  const auto patterns = default_pattern_set(split.friends, split.strangers, 3600);
  const auto all = rank_vendors(split.friends, split.strangers, 3600, patterns, 1000);
  EXPECT_EQ(all.size(), nodes.size());
  for (const auto& r : all) {
    EXPECT_LE(r.score, 0.0);
    EXPECT_EQ(r.positive, 0u);
  }
  EXPECT_LT(all.back().score, 0.0);
}

TEST(RankVendors, ThreadCountDoesNotChangeRanking) {
  Rng rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(rng);
    std::vector<FriendshipSet::Pair> pairs;
    for (auto e : g.events()) {
      if (!e.is_self_loop() && rng.bernoulli(0.4)) pairs.emplace_back(e.src, e.dst);
    }
    const auto split = split_tf_tn(g, FriendshipSet(pairs));
    const auto patterns = default_pattern_set(split.friends, split.strangers, 6);
    const auto one = rank_vendors(split.friends, split.strangers, 6, patterns, 5, 1);
    const auto many = rank_vendors(split.friends, split.strangers, 6, patterns, 5, 4);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].node, many[i].node);
      EXPECT_EQ(one[i].positive, many[i].positive);
      EXPECT_EQ(one[i].negative, many[i].negative);
    }
  }
}

TEST(RankVendors, KBeyondUserCountAndErrors) {
  const auto g = build({{"a", "b", 0}, {"c", "b", 1}});
  const auto split = split_tf_tn(g, FriendshipSet{});
  const auto patterns = valid_set();
  const auto r = rank_vendors(split.friends, split.strangers, 10, patterns, 50);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].external_id, "b");
  EXPECT_EQ(r[1].external_id, "a");
  EXPECT_EQ(r[2].external_id, "c");
  EXPECT_THROW(rank_vendors(split.friends, split.strangers, 10, patterns, 0), std::invalid_argument);
  std::ostringstream csv;
  write_vendor_csv(csv, r);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "rank,node,score,pos_count,neg_count");
}

TEST(MineCycles, Examples) {
  const auto cyc = build({{"a", "b", 0}, {"b", "c", 1}, {"c", "a", 2}});
  const auto one = mine_cycles(cyc, 10, 100);
  EXPECT_EQ(one.total_cycles, 1u);
  EXPECT_EQ(one.total_triples, 1u);
  EXPECT_DOUBLE_EQ(one.share, 1.0);
  const auto path = build({{"a", "b", 0}, {"b", "c", 1}, {"c", "d", 2}});
  EXPECT_EQ(mine_cycles(path, 10, 100).total_cycles, 0u);
  const auto two = build({{"a", "b", 0}, {"b", "c", 1}, {"x", "y", 2}, {"c", "a", 3}, {"y", "z", 4}, {"z", "x", 5}});
  const auto r = mine_cycles(two, 10, 100);
  EXPECT_EQ(r.total_cycles, 2u);
  ASSERT_EQ(r.cycles.size(), 2u);
  EXPECT_LT(r.cycles[0].events[0], r.cycles[1].events[0]);
  EXPECT_EQ(mine_cycles(two, 10, 1).cycles.size(), 1u);
  EXPECT_EQ(mine_cycles(two, 10, 1).total_cycles, 2u);
  EXPECT_THROW(mine_cycles(two, 10, 0), std::invalid_argument);
  EXPECT_THROW(mine_cycles(two, 0, 1), std::invalid_argument);
}

TEST(MineCycles, MatchesExhaustiveSearchProperty) {
  Rng rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_graph(rng, {.min_nodes = 3, .max_nodes = 6});
    const Seconds w = 1 + static_cast<Seconds>(rng.below(20));
    std::uint64_t cycles = 0, triples = 0;
    const auto cc = MotifClass::seq(P::Convey, P::Convey).index();
    for (const auto& inst : testing::brute_instances(g, w)) {
      if (inst.events.size() != 3) continue;
      ++triples;
      cycles += inst.motif == cc && inst.nodes.size() == 3;
    }
    const auto r = mine_cycles(g, w, 1000);
    EXPECT_EQ(r.total_cycles, cycles);
    EXPECT_EQ(r.total_triples, triples);
    for (const auto& c : r.cycles) EXPECT_TRUE(is_temporal_cycle(c));
  }
}

TEST(SearchNotes, KeywordMatchesOncePerEvent) {
  const auto g = build({{"a", "b", 0, "Poker"}, {"b", "c", 1, "Poker"}, {"c", "a", 2, "poker"},
                        {"c", "a", 3, "poker night"}, {"x", "y", 10, "rent"}, {"y", "z", 11, "rent"},
                        {"z", "x", 12}});
  const auto r = mine_cycles(g, 10, 100);
  ASSERT_EQ(r.total_cycles, 3u);
  const auto m = search_notes(g, r.cycles, "POKER");
  ASSERT_EQ(m.size(), 4u);
  for (std::size_t i = 1; i < m.size(); ++i) EXPECT_LT(m[i - 1].time, m[i].time);
  EXPECT_EQ(m[0].sender, "a");
  EXPECT_EQ(m[3].note, "poker night");
  EXPECT_TRUE(search_notes(g, r.cycles, "casino").empty());
  const std::vector<MotifInstance> first{r.cycles.front()};
  EXPECT_EQ(search_notes(g, first, "poker").size(), 3u);
}

TEST(FormatUtc, CivilDates) {
  EXPECT_EQ(format_utc(0), "1970-01-01 00:00:00");
  EXPECT_EQ(format_utc(1700000000), "2023-11-14 22:13:20");
  EXPECT_EQ(format_utc(951782400), "2000-02-29 00:00:00");
  EXPECT_EQ(format_utc(-1), "1969-12-31 23:59:59");
}

TEST(CycleCsv, Layout) {
  const auto g = build({{"a", "b", 0, "x"}, {"b", "c", 60}, {"c", "a", 120}});
  const auto r = mine_cycles(g, 100, 10);
  std::ostringstream out;
  write_cycle_csv(out, g, r.cycles);
  EXPECT_EQ(out.str(),
            "cycle,sender,receiver,time,datetime,note\n"
            "1,a,b,0,1970-01-01 00:00:00,x\n"
            "1,b,c,60,1970-01-01 00:01:00,\n"
            "1,c,a,120,1970-01-01 00:02:00,\n");
}

}  // namespace
}  // namespace tmotif
