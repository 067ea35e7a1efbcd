#pragma once

// Deterministic builders for the hypergraph families: truncated planes,
// conic-truncated planes, the two nu-plane constructions H1 and H2, and the
// 4-partite example G1.
//
// Coordinates are fixed so each (family, q, nu) has one canonical instance.
// Every plane is a copy of the same PG(2,q) with Q = (0:0:1) (point 0) removed
// and P = (0:1:0) (point 1) shared by all copies. Side 0 collects the points
// of the line PQ; the other lines through Q, in increasing line id, give
// sides 1..q. Vertices are labelled "p<i>:(x:y:z)" for plane i (P keeps its
// plane-1 label) and "v<i>" for the extra vertices.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ryser/error.hpp"
#include "ryser/geometry.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

enum class Family { Truncated, ConicTruncated, H1, H2, G1 };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Truncated: return "truncated";
    case Family::ConicTruncated: return "conic";
    case Family::H1: return "h1";
    case Family::H2: return "h2";
    case Family::G1: return "g1";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (auto f : {Family::Truncated, Family::ConicTruncated, Family::H1, Family::H2, Family::G1})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

/// A named point, line or point set of one plane copy (planes are 1-based).
struct RecipeItem {
  enum class Kind { Point, Line, PointSet };
  Kind kind = Kind::Point;
  int plane = 1;
  std::vector<int> ids;

  friend bool operator==(const RecipeItem&, const RecipeItem&) = default;
};

inline std::string_view to_string(RecipeItem::Kind k) {
  switch (k) {
    case RecipeItem::Kind::Point: return "point";
    case RecipeItem::Kind::Line: return "line";
    case RecipeItem::Kind::PointSet: return "point_set";
  }
  return "?";
}

struct ConstructionRecipe {
  Family family = Family::Truncated;
  int q = 0;
  int nu = 1;
  std::map<std::string, RecipeItem> items;
  std::map<std::string, int> named_edges;
  // Edge ids grouped into nu pairwise-intersecting classes (H1/H2 only).
  std::vector<std::vector<int>> edge_classes;
  // H2: how many points S satisfy every constraint for the chosen T1, T2, T3.
  int s_candidates = 0;

  int point(const std::string& name) const { return items.at(name).ids.at(0); }
  int line(const std::string& name) const { return items.at(name).ids.at(0); }

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

struct Construction {
  Hypergraph graph;
  ConstructionRecipe recipe;
};

namespace detail {

constexpr int kQ = 0;  // (0:0:1)
constexpr int kP = 1;  // (0:1:0)

// Side index of a point X != Q: which line through Q carries it.
class SideMap {
 public:
  explicit SideMap(const ProjectivePlane& plane) : plane_(plane) {
    const int pq = plane.line_through(kP, kQ);
    side_of_line_.assign(static_cast<std::size_t>(plane.size()), -1);
    side_of_line_[static_cast<std::size_t>(pq)] = 0;
    int next = 1;
    for (int l : plane.lines_through(kQ))
      if (l != pq) side_of_line_[static_cast<std::size_t>(l)] = next++;
  }
  int side(int point) const { return side_of_line_[static_cast<std::size_t>(plane_.line_through(kQ, point))]; }

 private:
  const ProjectivePlane& plane_;
  std::vector<int> side_of_line_;
};

inline std::string plane_label(const ProjectivePlane& plane, int copy, int point) {
  return "p" + std::to_string(copy) + ":" + plane.point_label(point);
}

// Adds plane copy `copy` (1-based) minus Q; P is created only for copy 1 and
// reused afterwards. Returns the point-id -> vertex-id map (-1 for Q).
inline std::vector<int> add_plane_copy(Hypergraph& h, const ProjectivePlane& plane, const SideMap& sides, int copy,
                                       int shared_p_vertex) {
  std::vector<int> vid(static_cast<std::size_t>(plane.size()), -1);
  for (int x = 0; x < plane.size(); ++x) {
    if (x == kQ) continue;
    if (x == kP && copy > 1) {
      vid[static_cast<std::size_t>(x)] = shared_p_vertex;
      continue;
    }
    vid[static_cast<std::size_t>(x)] = h.add_vertex(plane_label(plane, copy, x), sides.side(x));
  }
  return vid;
}

inline std::vector<int> map_points(const std::vector<int>& vid, const std::vector<int>& pts) {
  std::vector<int> out;
  for (int x : pts) out.push_back(vid.at(static_cast<std::size_t>(x)));
  return out;
}

inline std::vector<int> without(std::vector<int> pts, std::initializer_list<int> drop) {
  std::erase_if(pts, [&](int x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); });
  return pts;
}

// Plane 1 of H1/H2: every line avoiding Q1 and P, plus ell. Returns ell.
inline int add_first_plane_edges(Hypergraph& h, const ProjectivePlane& plane, const std::vector<int>& vid,
                                 ConstructionRecipe& recipe) {
  int ell = -1;
  for (int l : plane.lines_through(kP))
    if (!plane.incident(kQ, l)) {
      ell = l;
      break;
    }
  recipe.items["P"] = {RecipeItem::Kind::Point, 1, {kP}};
  recipe.items["Q1"] = {RecipeItem::Kind::Point, 1, {kQ}};
  recipe.items["ell"] = {RecipeItem::Kind::Line, 1, {ell}};
  std::vector<int> cls;
  for (const auto& line : plane.lines()) {
    const bool avoids = !plane.incident(kQ, line.id) && !plane.incident(kP, line.id);
    if (!avoids && line.id != ell) continue;
    const int e = h.add_edge(map_points(vid, line.incident_points));
    cls.push_back(e);
    if (line.id == ell) recipe.named_edges["ell"] = e;
  }
  recipe.edge_classes.push_back(std::move(cls));
  return ell;
}

inline void check_nu(int nu) {
  if (nu < 2) throw Error(ErrorCode::NuTooSmall, "nu must be at least 2, got " + std::to_string(nu));
}

struct H2Choice {
  int t1 = -1, t2 = -1, t3 = -1, s = -1;
  int s_candidates = 0;
};

// First (T1, T2, T3, S) in lexicographic id order meeting the constraints.
inline H2Choice choose_h2_points(const ProjectivePlane& plane) {
  const int q = plane.order();
  const int pq = plane.line_through(kP, kQ);
  const int n = plane.size();
  for (int t1 : plane.line(pq).incident_points) {
    if (t1 == kP || t1 == kQ) continue;
    for (int t2 = 0; t2 < n; ++t2) {
      if (t2 == kP || t2 == kQ || t2 == t1) continue;
      for (int t3 = 0; t3 < n; ++t3) {
        if (t3 == kP || t3 == kQ || t3 == t1 || t3 == t2) continue;
        const std::vector<int> quad{t1, t2, t3, kQ};
        if (!is_arc(plane, quad)) continue;
        // PT3 must meet e2, i.e. avoid T2.
        if (plane.incident(kP, plane.line_through(t2, t3))) continue;
        std::vector<int> baer;
        if (q == 4) {
          baer = baer_closure(plane, quad);
          if (std::binary_search(baer.begin(), baer.end(), kP)) continue;
        }
        const int t1t3 = plane.line_through(t1, t3);
        H2Choice c{t1, t2, t3, -1, 0};
        for (int s : plane.line(plane.line_through(kQ, t2)).incident_points) {
          if (s == kQ || s == t2) continue;
          if (q == 4 && (std::binary_search(baer.begin(), baer.end(), s) || plane.incident(s, t1t3))) continue;
          if (c.s < 0) c.s = s;
          ++c.s_candidates;
        }
        if (c.s >= 0) return c;
      }
    }
  }
  throw Error(ErrorCode::InfeasibleChoice, "no admissible T1, T2, T3, S in PG(2," + std::to_string(q) + ")");
}

}  // namespace detail

/// PG(2,q) minus Q = (0:0:1) and the q+1 lines through it.
inline Construction truncated_plane(int q) {
  const ProjectivePlane plane(q);
  const detail::SideMap sides(plane);
  Construction c{Hypergraph(q + 1), {Family::Truncated, q, 1, {}, {}, {}, 0}};
  const auto vid = detail::add_plane_copy(c.graph, plane, sides, 1, -1);
  for (const auto& line : plane.lines())
    if (!plane.incident(detail::kQ, line.id)) c.graph.add_edge(detail::map_points(vid, line.incident_points));
  c.recipe.items["Q1"] = {RecipeItem::Kind::Point, 1, {detail::kQ}};
  return c;
}

/// Lines of the truncated plane that meet the canonical conic minus Q.
inline Construction conic_truncated(int q) {
  if (q < 3) throw Error(ErrorCode::QTooSmall, "conic-truncated plane needs q >= 3, got " + std::to_string(q));
  const ProjectivePlane plane(q);
  const detail::SideMap sides(plane);
  const auto conic = conic_canonical(plane);
  Construction c{Hypergraph(q + 1), {Family::ConicTruncated, q, 1, {}, {}, {}, 0}};
  const auto vid = detail::add_plane_copy(c.graph, plane, sides, 1, -1);
  for (const auto& line : plane.lines()) {
    if (plane.incident(detail::kQ, line.id)) continue;
    if (conic_intersection_size(conic, line) == 0) continue;
    c.graph.add_edge(detail::map_points(vid, line.incident_points));
  }
  c.recipe.items["Q1"] = {RecipeItem::Kind::Point, 1, {detail::kQ}};
  c.recipe.items["C1"] = {RecipeItem::Kind::PointSet, 1, conic.points};
  return c;
}

/// First construction: nu planes through P. Plane 1 carries all lines
/// avoiding Q1 and P plus ell; plane i >= 2 carries the lines meeting the
/// conic minus Q_i, plus e1 = ell - P + R_i and e2 = (C_i - Q_i) + v_i.
inline Construction build_h1(int q, int nu) {
  if (!is_prime(q) || q == 2)
    throw Error(ErrorCode::NotOddPrime, "build_h1 needs q an odd prime, got " + std::to_string(q));
  detail::check_nu(nu);
  const ProjectivePlane plane(q);
  const detail::SideMap sides(plane);
  const auto conic = conic_canonical(plane);
  const int pq = plane.line_through(detail::kP, detail::kQ);

  Construction c{Hypergraph(q + 1), {Family::H1, q, nu, {}, {}, {}, 0}};
  auto& h = c.graph;
  auto& recipe = c.recipe;
  const auto vid1 = detail::add_plane_copy(h, plane, sides, 1, -1);
  const int ell = detail::add_first_plane_edges(h, plane, vid1, recipe);
  const int p_vertex = vid1[detail::kP];
  const auto ell_minus_p = detail::map_points(vid1, detail::without(plane.line(ell).incident_points, {detail::kP}));

  int r_point = -1;
  for (int x : plane.line(pq).incident_points)
    if (x != detail::kP && x != detail::kQ) {
      r_point = x;
      break;
    }
  const auto conic_rest = detail::without(conic.points, {detail::kQ});

  for (int i = 2; i <= nu; ++i) {
    const auto vid = detail::add_plane_copy(h, plane, sides, i, p_vertex);
    const int v = h.add_vertex("v" + std::to_string(i), 0);
    const auto si = std::to_string(i);
    recipe.items["Q" + si] = {RecipeItem::Kind::Point, i, {detail::kQ}};
    recipe.items["R" + si] = {RecipeItem::Kind::Point, i, {r_point}};
    recipe.items["PQ" + si] = {RecipeItem::Kind::Line, i, {pq}};
    recipe.items["C" + si] = {RecipeItem::Kind::PointSet, i, conic.points};

    std::vector<int> cls;
    for (const auto& line : plane.lines()) {
      if (plane.incident(detail::kQ, line.id)) continue;
      const bool meets = std::any_of(conic_rest.begin(), conic_rest.end(),
                                     [&](int x) { return plane.incident(x, line.id); });
      if (meets) cls.push_back(h.add_edge(detail::map_points(vid, line.incident_points)));
    }
    auto e1 = ell_minus_p;
    e1.push_back(vid[static_cast<std::size_t>(r_point)]);
    recipe.named_edges["e1_" + si] = h.add_edge(e1);
    recipe.edge_classes[0].push_back(recipe.named_edges["e1_" + si]);

    auto e2 = detail::map_points(vid, conic_rest);
    e2.push_back(v);
    recipe.named_edges["e2_" + si] = h.add_edge(e2);
    cls.push_back(recipe.named_edges["e2_" + si]);
    recipe.edge_classes.push_back(std::move(cls));
  }
  return c;
}

namespace detail {

inline Construction build_h2_from(const ProjectivePlane& plane, int nu, const H2Choice& choice) {
  const int q = plane.order();
  const SideMap sides(plane);
  const int t1t2 = plane.line_through(choice.t1, choice.t2);
  const int t1s = plane.line_through(choice.t1, choice.s);
  const int pt3 = plane.line_through(kP, choice.t3);
  const std::vector<int> arc{choice.t1, choice.t2, choice.t3, kQ};

  Construction c{Hypergraph(q + 1), {Family::H2, q, nu, {}, {}, {}, choice.s_candidates}};
  auto& h = c.graph;
  auto& recipe = c.recipe;
  const auto vid1 = add_plane_copy(h, plane, sides, 1, -1);
  const int ell = add_first_plane_edges(h, plane, vid1, recipe);
  const int p_vertex = vid1[kP];
  const auto ell_minus_p = map_points(vid1, without(plane.line(ell).incident_points, {kP}));

  for (int i = 2; i <= nu; ++i) {
    const auto vid = add_plane_copy(h, plane, sides, i, p_vertex);
    const int v = h.add_vertex("v" + std::to_string(i), 0);
    const auto si = std::to_string(i);
    recipe.items["Q" + si] = {RecipeItem::Kind::Point, i, {kQ}};
    recipe.items["T1_" + si] = {RecipeItem::Kind::Point, i, {choice.t1}};
    recipe.items["T2_" + si] = {RecipeItem::Kind::Point, i, {choice.t2}};
    recipe.items["T3_" + si] = {RecipeItem::Kind::Point, i, {choice.t3}};
    recipe.items["S_" + si] = {RecipeItem::Kind::Point, i, {choice.s}};

    std::vector<int> cls;
    for (const auto& line : plane.lines()) {
      const bool avoids = std::none_of(arc.begin(), arc.end(), [&](int x) { return plane.incident(x, line.id); });
      if (!avoids && line.id != t1t2 && line.id != t1s && line.id != pt3) continue;
      cls.push_back(h.add_edge(map_points(vid, line.incident_points)));
    }
    auto e1 = ell_minus_p;
    e1.push_back(vid[static_cast<std::size_t>(choice.t1)]);
    recipe.named_edges["e1_" + si] = h.add_edge(e1);
    recipe.edge_classes[0].push_back(recipe.named_edges["e1_" + si]);

    auto e2 = map_points(vid, without(plane.line(t1t2).incident_points, {choice.t1, choice.t2}));
    e2.push_back(v);
    e2.push_back(vid[static_cast<std::size_t>(choice.s)]);
    recipe.named_edges["e2_" + si] = h.add_edge(e2);
    cls.push_back(recipe.named_edges["e2_" + si]);
    recipe.edge_classes.push_back(std::move(cls));
  }
  return c;
}

}  // namespace detail

/// Second construction: plane i >= 2 carries the lines avoiding the arc
/// {T1, T2, T3, Q_i} plus T1T2, T1S, PT3; the special edges are
/// e1 = ell - P + T1 and e2 = T1T2 - {T1, T2} + {v_i, S}.
inline Construction build_h2(int q, int nu) {
  if (q < 4) throw Error(ErrorCode::QTooSmall, "build_h2 needs q >= 4, got " + std::to_string(q));
  if (!is_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  detail::check_nu(nu);
  const ProjectivePlane plane(q);
  return detail::build_h2_from(plane, nu, detail::choose_h2_points(plane));
}

/// The 4-partite hypergraph G1 on sides of six vertices. Edge "abcd" takes
/// the a-th vertex of side 1, the b-th of side 2, and so on; vertex v<i><j>
/// is the i-th vertex of side j and has id 6(j-1) + (i-1).
inline Construction build_g1() {
  static constexpr const char* kEdges[] = {"1111", "1333", "1444", "5314", "6341", "6413", "2222",
                                           "2155", "3162", "4652", "4265", "2666", "2562", "1211"};
  Construction c{Hypergraph(4), {Family::G1, 3, 2, {}, {}, {}, 0}};
  for (int j = 1; j <= 4; ++j)
    for (int i = 1; i <= 6; ++i) c.graph.add_vertex("v" + std::to_string(i) + std::to_string(j), j - 1);
  for (const char* code : kEdges) {
    std::vector<int> vs;
    for (int j = 0; j < 4; ++j) vs.push_back(6 * j + (code[j] - '1'));
    c.graph.add_edge(vs);
  }
  c.recipe.edge_classes = {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}};
  return c;
}

/// Re-checks every recorded point constraint of an H1/H2 recipe against a
/// freshly built plane. Returns one message per failed constraint.
inline std::vector<std::string> validate_recipe(const ConstructionRecipe& recipe) {
  std::vector<std::string> fails;
  if (recipe.family != Family::H1 && recipe.family != Family::H2) return fails;
  const ProjectivePlane plane(recipe.q);
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  };
  const int p = recipe.point("P");
  const int q1 = recipe.point("Q1");
  const int ell = recipe.line("ell");
  need(p != q1, "Q1 differs from P");
  need(plane.incident(p, ell) && !plane.incident(q1, ell), "ell passes through P and not Q1");

  const auto conic = conic_canonical(plane);
  for (int i = 2; i <= recipe.nu; ++i) {
    const auto si = std::to_string(i);
    const int qi = recipe.point("Q" + si);
    need(qi != p, "Q" + si + " differs from P");
    const int pq = plane.line_through(p, qi);
    if (recipe.family == Family::H1) {
      const int r = recipe.point("R" + si);
      need(conic.contains(qi), "Q" + si + " lies on the conic");
      need(classify_line(conic, plane.line(pq)) == LineClass::Tangent, "PQ" + si + " is tangent to the conic at Q" + si);
      need(plane.incident(r, pq) && r != p && r != qi, "R" + si + " lies on PQ" + si + " minus {P, Q" + si + "}");
      need(recipe.items.at("C" + si).ids == conic.points, "C" + si + " is the canonical conic");
    } else {
      const int t1 = recipe.point("T1_" + si);
      const int t2 = recipe.point("T2_" + si);
      const int t3 = recipe.point("T3_" + si);
      const int s = recipe.point("S_" + si);
      const std::vector<int> quad{t1, t2, t3, qi};
      need(is_arc(plane, quad) && t1 != t2 && t1 != t3 && t2 != t3, "{T1, T2, T3, Q" + si + "} is an arc");
      for (int t : {t1, t2, t3}) need(t != p && t != qi, "T points avoid P and Q" + si);
      need(plane.incident(t1, pq), "T1 lies on PQ" + si);
      need(!plane.incident(p, plane.line_through(t2, t3)), "P is off the line T2T3");
      need(s != qi && s != t2 && plane.incident(s, plane.line_through(qi, t2)), "S lies on Q" + si + "T2 minus {Q, T2}");
      if (recipe.q == 4) {
        const auto baer = baer_closure(plane, quad);
        need(!std::binary_search(baer.begin(), baer.end(), p), "P is outside the Baer subplane");
        need(!std::binary_search(baer.begin(), baer.end(), s), "S is outside the Baer subplane");
        need(!plane.incident(s, plane.line_through(t1, t3)), "S is off the line T1T3");
      }
    }
  }
  return fails;
}

/// Dispatch used by the CLI.
inline Construction build(Family family, int q, int nu) {
  switch (family) {
    case Family::Truncated: return truncated_plane(q);
    case Family::ConicTruncated: return conic_truncated(q);
    case Family::H1: return build_h1(q, nu);
    case Family::H2: return build_h2(q, nu);
    case Family::G1: return build_g1();
  }
  throw Error(ErrorCode::InvalidInput, "unknown family");
}

}  // namespace ryser
