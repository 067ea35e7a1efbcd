#include <gtest/gtest.h>

#include <vector>

#include "ryser/constructions.hpp"
#include "ryser/embedding.hpp"

using namespace ryser;

namespace {

int g1_vertex(int i, int j) { return 6 * (j - 1) + (i - 1); }

}  // namespace

TEST(Embedding, G1IntoH1) {
  const auto g1 = build_g1();
  const auto h1 = build_h1(3, 2);
  const auto emb = find_embedding(g1.graph, h1.graph);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(is_embedding(g1.graph, h1.graph, *emb));

  const auto& h = h1.graph;
  auto image = [&](int i, int j) { return h.vertex(emb->vertex_map[static_cast<std::size_t>(g1_vertex(i, j))]).label; };
  EXPECT_EQ(image(1, 2), "p1:(0:1:0)");  // v12 -> P
  EXPECT_EQ(image(5, 2), "v2");           // v52 -> the extra vertex
  EXPECT_EQ(h.edge(emb->edge_map[0]), h.edge(h1.recipe.named_edges.at("ell")));     // 1111 -> ell
  EXPECT_EQ(h.edge(emb->edge_map[13]), h.edge(h1.recipe.named_edges.at("e1_2")));   // 1211 -> e1
  EXPECT_EQ(h.edge(emb->edge_map[12]), h.edge(h1.recipe.named_edges.at("e2_2")));   // 2562 -> e2

  // The three named vertices plus Q2 form an arc of plane 2.
  const ProjectivePlane plane(3);
  std::vector<int> pts{0};
  for (auto [i, j] : {std::pair{2, 1}, {6, 3}, {2, 4}}) {
    const auto label = image(i, j);
    ASSERT_EQ(label.substr(0, 3), "p2:");
    const auto coords = label.substr(3);
    for (const auto& p : plane.points())
      if (plane.point_label(p.id) == coords) pts.push_back(p.id);
  }
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_TRUE(is_arc(plane, pts));
}

TEST(Embedding, PinsAreHonoured) {
  const auto g1 = build_g1().graph;
  const auto h = build_h1(3, 2).graph;
  const int p = *h.find_vertex("p1:(0:1:0)");
  const auto emb = find_embedding(g1, h, {{g1_vertex(1, 2), p}});
  ASSERT_TRUE(emb.has_value());
  EXPECT_EQ(emb->vertex_map[static_cast<std::size_t>(g1_vertex(1, 2))], p);
}

TEST(Embedding, LargerIntoSmallerFails) {
  EXPECT_FALSE(find_embedding(build_h1(3, 2).graph, build_g1().graph).has_value());
}

TEST(Embedding, IdentityOnItself) {
  for (const auto& h : {build_h1(3, 2).graph, build_g1().graph, truncated_plane(4).graph}) {
    const auto emb = find_embedding(h, h);
    ASSERT_TRUE(emb.has_value());
    for (int v = 0; v < h.vertex_count(); ++v) EXPECT_EQ(emb->vertex_map[static_cast<std::size_t>(v)], v);
  }
}

TEST(Embedding, SidesMayBePermuted) {
  Hypergraph small(2), big(2);
  small.add_vertex("a", 0);
  small.add_vertex("b", 1);
  small.add_edge({0, 1});
  big.add_vertex("x", 0);
  big.add_vertex("y", 1);
  big.add_vertex("z", 1);
  big.add_edge({0, 2});
  const auto emb = find_embedding(small, big);
  ASSERT_TRUE(emb.has_value());
  EXPECT_EQ(emb->vertex_map, (std::vector<int>{0, 2}));
  EXPECT_EQ(emb->side_map, (std::vector<int>{0, 1}));
}

TEST(Embedding, ArityMismatchThrows) {
  try {
    (void)find_embedding(build_g1().graph, build_h1(5, 2).graph);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}
