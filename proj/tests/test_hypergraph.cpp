#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "ryser/hypergraph.hpp"

using namespace ryser;
using Kind = Violation::Kind;

namespace {

// Two sides {a0,a1} {b0,b1}; edges a0b0 and a1b1.
Hypergraph two_by_two() {
  Hypergraph h(2);
  for (auto [label, side] : {std::pair{"a0", 0}, {"a1", 0}, {"b0", 1}, {"b1", 1}}) h.add_vertex(label, side);
  h.add_edge({0, 2});
  h.add_edge({3, 1});
  return h;
}

bool has(const ValidationReport& rep, Kind k) {
  return std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST(Hypergraph, EdgesAreStoredSorted) {
  const auto h = two_by_two();
  EXPECT_EQ(h.edge(1), (std::vector<int>{1, 3}));
  EXPECT_EQ(h.find_edge({3, 1}), 1);
  EXPECT_EQ(h.find_vertex("b1"), 3);
  EXPECT_FALSE(h.find_vertex("zz").has_value());
  EXPECT_EQ(h.sides(), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
}

TEST(Validate, CleanGraphPasses) { EXPECT_TRUE(validate_partite(two_by_two()).ok()); }

TEST(Validate, ReportsEveryViolationKind) {
  {
    Hypergraph h(0);
    EXPECT_TRUE(has(validate_partite(h), Kind::BadArity));
  }
  {
    auto h = two_by_two();
    h.add_vertex("c", 5);
    EXPECT_TRUE(has(validate_partite(h), Kind::SideOutOfRange));
  }
  {
    auto h = two_by_two();
    h.add_edge({0, 9});
    EXPECT_TRUE(has(validate_partite(h), Kind::UnknownVertex));
  }
  {
    auto h = two_by_two();
    h.add_edge({0});
    const auto rep = validate_partite(h);
    EXPECT_TRUE(has(rep, Kind::EdgeSize));
    EXPECT_TRUE(has(rep, Kind::SideMissed));
  }
  {
    auto h = two_by_two();
    h.add_edge({0, 1});
    const auto rep = validate_partite(h);
    EXPECT_TRUE(has(rep, Kind::SideRepeated));
    EXPECT_TRUE(has(rep, Kind::SideMissed));
  }
  {
    auto h = two_by_two();
    h.add_edge({2, 0});
    const auto rep = validate_partite(h);
    EXPECT_TRUE(has(rep, Kind::DuplicateEdge));
    EXPECT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].edge, 2);
  }
}

TEST(Restrict, RenumbersSupportInOrder) {
  Hypergraph h(2);
  for (auto [label, side] : {std::pair{"a0", 0}, {"a1", 0}, {"a2", 0}, {"b0", 1}, {"b1", 1}, {"b2", 1}}) h.add_vertex(label, side);
  h.add_edge({0, 3});
  h.add_edge({1, 4});
  h.add_edge({2, 5});
  const auto sub = restrict(h, std::vector<int>{2, 0});
  ASSERT_EQ(sub.vertex_count(), 4);
  EXPECT_EQ(sub.vertex(0).label, "a0");
  EXPECT_EQ(sub.vertex(1).label, "a2");
  EXPECT_EQ(sub.vertex(2).label, "b0");
  EXPECT_EQ(sub.vertex(3).label, "b2");
  EXPECT_EQ(sub.edges(), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(validate_partite(sub).ok());
}

TEST(Restrict, UnknownEdgeThrows) {
  try {
    (void)restrict(two_by_two(), std::vector<int>{0, 7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownEdge);
  }
}

TEST(DisjointUnion, ShiftsAndPrefixes) {
  const auto u = disjoint_union(two_by_two(), two_by_two());
  EXPECT_EQ(u.vertex_count(), 8);
  EXPECT_EQ(u.edge_count(), 4);
  EXPECT_EQ(u.vertex(0).label, "a.a0");
  EXPECT_EQ(u.vertex(4).label, "b.a0");
  EXPECT_EQ(u.edge(3), (std::vector<int>{5, 7}));
  EXPECT_TRUE(validate_partite(u).ok());
}

TEST(DisjointUnion, ArityMismatchThrows) {
  try {
    (void)disjoint_union(two_by_two(), Hypergraph(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}
