#include <gtest/gtest.h>

#include <set>

#include "tmotif/motif_class.hpp"

namespace tmotif {
namespace {

Event ev(NodeId s, NodeId d, Timestamp t) { return Event{s, d, t, std::nullopt, std::nullopt}; }

TEST(MotifClass, FortyTwoDistinctNamesRoundTrip) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < kMotifClassCount; ++i) {
    const auto m = MotifClass::from_index(i);
    EXPECT_EQ(m.index(), i);
    names.insert(m.name());
    EXPECT_EQ(MotifClass::from_name(m.name()), m);
  }
  EXPECT_EQ(names.size(), 42u);
  EXPECT_THROW(MotifClass::from_index(42), std::out_of_range);
  EXPECT_FALSE(MotifClass::from_name("seq:convey"));
  EXPECT_FALSE(MotifClass::from_name("pair:nope"));
}

TEST(MotifClass, CanonicalEncoding) {
  EXPECT_EQ(MotifClass::pair(PairType::WeaklyConnected).index(), 5u);
  EXPECT_EQ(MotifClass::seq(PairType::Repetition, PairType::Repetition).index(), 6u);
  EXPECT_EQ(MotifClass::seq(PairType::Convey, PairType::Convey).index(), 6u + 6 * 4 + 4);
  EXPECT_EQ(MotifClass::seq(PairType::PingPong, PairType::OutBurst).name(), "seq:ping_pong+out_burst");
  EXPECT_EQ(MotifClass::pair(PairType::Convey).name(), "pair:convey");
  const auto m = MotifClass::seq(PairType::InBurst, PairType::Convey);
  EXPECT_EQ(m.first(), PairType::InBurst);
  EXPECT_EQ(m.second(), PairType::Convey);
  EXPECT_EQ(m.event_count(), 3u);
  EXPECT_TRUE(m.contains(PairType::Convey));
  EXPECT_FALSE(m.contains(PairType::OutBurst));
}

TEST(MotifClass, LettersMatchHeatmapLegend) {
  std::string letters;
  for (const PairType t : kAllPairTypes) letters += pair_type_letter(t);
  EXPECT_EQ(letters, "RPIOCW");
}

TEST(ClassifyPair, FigureExamples) {
  EXPECT_EQ(classify_pair(ev(0, 1, 0), ev(1, 0, 5)), PairType::PingPong);
  EXPECT_EQ(classify_pair(ev(0, 1, 0), ev(0, 2, 5)), PairType::OutBurst);
  EXPECT_EQ(classify_pair(ev(0, 1, 0), ev(2, 3, 5)), std::nullopt);
}

TEST(ClassifyPair, AllIdentificationPatterns) {
  // e1 = (0,1); e2 endpoints drawn from {0,1,2,3}.
  const Event e1 = ev(0, 1, 0);
  struct Case {
    NodeId s, d;
    std::optional<PairType> expect;
  };
  const Case cases[] = {
      {0, 1, PairType::Repetition}, {1, 0, PairType::PingPong},        {2, 1, PairType::InBurst},
      {0, 2, PairType::OutBurst},   {1, 2, PairType::Convey},          {2, 0, PairType::WeaklyConnected},
      {2, 3, std::nullopt},
  };
  for (const auto& c : cases) EXPECT_EQ(classify_pair(e1, ev(c.s, c.d, 1)), c.expect) << c.s << "->" << c.d;
}

TEST(ClassifyPair, TotalityOverNodeSharingPairsProperty) {
  // Every ordered non-self-loop pair over 4 labels that shares a node maps to
  // exactly one type, and that type's defining equalities hold.
  for (NodeId a = 0; a < 4; ++a)
    for (NodeId b = 0; b < 4; ++b)
      for (NodeId c = 0; c < 4; ++c)
        for (NodeId d = 0; d < 4; ++d) {
          if (a == b || c == d) continue;
          const Event e1 = ev(a, b, 0), e2 = ev(c, d, 1);
          const bool share = a == c || a == d || b == c || b == d;
          const auto t = classify_pair(e1, e2);
          ASSERT_EQ(t.has_value(), share);
          if (!t) continue;
          switch (*t) {
            case PairType::Repetition: EXPECT_TRUE(c == a && d == b); break;
            case PairType::PingPong: EXPECT_TRUE(c == b && d == a); break;
            case PairType::InBurst: EXPECT_TRUE(d == b && c != a); break;
            case PairType::OutBurst: EXPECT_TRUE(c == a && d != b); break;
            case PairType::Convey: EXPECT_TRUE(c == b && d != a); break;
            case PairType::WeaklyConnected: EXPECT_TRUE(d == a && c != b); break;
          }
        }
}

TEST(ClassifyPair, Errors) {
  EXPECT_THROW(classify_pair(ev(0, 1, 5), ev(1, 0, 1)), std::invalid_argument);
  EXPECT_THROW(classify_pair(ev(0, 1, 5), ev(1, 0, 5)), std::invalid_argument);
  EXPECT_THROW(classify_pair(ev(0, 0, 1), ev(0, 1, 5)), std::invalid_argument);
}

}  // namespace
}  // namespace tmotif
