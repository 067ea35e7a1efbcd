#pragma once

// PG(2,q) as an explicit incidence structure, plus the conic, arc and Baer
// subplane machinery the constructions and oracles rely on.
//
// Points and lines are both stored as normalized homogeneous triples (the
// leftmost nonzero coordinate is 1) and numbered by the lexicographic rank of
// the triple's element indices. Point 0 is (0:0:1), point 1 is (0:1:0); line 0
// is x2 = 0.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ryser/error.hpp"
#include "ryser/gf.hpp"

namespace ryser {

using Triple = std::array<FieldElement, 3>;

struct PlanePoint {
  int id = 0;
  Triple coords{};
};

struct PlaneLine {
  int id = 0;
  Triple coeffs{};
  std::vector<int> incident_points;  // sorted, q+1 entries
};

class ProjectivePlane {
 public:
  explicit ProjectivePlane(int q) : field_(FieldSpec::create(q)) { build(); }

  const FieldSpec& field() const { return field_; }
  int order() const { return field_.q(); }
  int size() const { return static_cast<int>(points_.size()); }  // q^2+q+1

  const std::vector<PlanePoint>& points() const { return points_; }
  const std::vector<PlaneLine>& lines() const { return lines_; }
  const PlanePoint& point(int id) const { return points_.at(static_cast<std::size_t>(id)); }
  const PlaneLine& line(int id) const { return lines_.at(static_cast<std::size_t>(id)); }

  /// Ids of the q+1 lines through a point, ascending.
  const std::vector<int>& lines_through(int point_id) const { return point_lines_.at(static_cast<std::size_t>(point_id)); }

  bool incident(int point_id, int line_id) const {
    return incidence_[static_cast<std::size_t>(point_id) * points_.size() + static_cast<std::size_t>(line_id)] != 0;
  }

  /// Id of the unique line through two distinct points.
  int line_through(int a, int b) const {
    if (a == b) throw Error(ErrorCode::SamePoint, "line_through needs two distinct points, got " + std::to_string(a) + " twice");
    return line_id(cross(point(a).coords, point(b).coords));
  }

  /// Id of the common point of two distinct lines.
  int meet(int l1, int l2) const {
    if (l1 == l2) throw Error(ErrorCode::SamePoint, "meet needs two distinct lines");
    return point_id(cross(line(l1).coeffs, line(l2).coeffs));
  }

  bool collinear(int a, int b, int c) const {
    if (a == b || a == c || b == c) return true;
    return incident(c, line_through(a, b));
  }

  /// Id of the point with the given (not necessarily normalized) coordinates.
  int point_id(const Triple& t) const { return triple_rank_.at(code(normalize(t))); }
  int line_id(const Triple& t) const { return triple_rank_.at(code(normalize(t))); }

  std::string point_label(int id) const { return triple_label(point(id).coords); }
  std::string triple_label(const Triple& t) const {
    return "(" + std::to_string(t[0].index) + ":" + std::to_string(t[1].index) + ":" + std::to_string(t[2].index) + ")";
  }

 private:
  Triple normalize(Triple t) const {
    for (auto& c : t) {
      if (c.index == 0) continue;
      const auto s = field_.inv(c);
      for (auto& x : t) x = field_.mul(x, s);
      return t;
    }
    throw Error(ErrorCode::InvalidInput, "zero vector is not a projective point");
  }

  Triple cross(const Triple& a, const Triple& b) const {
    const auto& f = field_;
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
  }

  std::size_t code(const Triple& t) const {
    const auto q = static_cast<std::size_t>(field_.q());
    return (static_cast<std::size_t>(t[0].index) * q + static_cast<std::size_t>(t[1].index)) * q +
           static_cast<std::size_t>(t[2].index);
  }

  void build() {
    const int q = field_.q();
    const auto qs = static_cast<std::size_t>(q);
    triple_rank_.assign(qs * qs * qs, -1);
    // Normalized triples in lexicographic order double as point and line lists.
    std::vector<Triple> canon;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          const Triple t{FieldElement{a}, FieldElement{b}, FieldElement{c}};
          const int lead = a != 0 ? a : (b != 0 ? b : c);
          if (lead != 1) continue;
          triple_rank_[code(t)] = static_cast<int>(canon.size());
          canon.push_back(t);
        }

    const std::size_t n = canon.size();
    points_.resize(n);
    lines_.resize(n);
    point_lines_.assign(n, {});
    incidence_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      points_[i] = {static_cast<int>(i), canon[i]};
      lines_[i].id = static_cast<int>(i);
      lines_[i].coeffs = canon[i];
    }
    for (std::size_t l = 0; l < n; ++l) {
      const auto& a = lines_[l].coeffs;
      for (std::size_t p = 0; p < n; ++p) {
        const auto& x = points_[p].coords;
        const auto dot = field_.add(field_.add(field_.mul(a[0], x[0]), field_.mul(a[1], x[1])), field_.mul(a[2], x[2]));
        if (dot.index != 0) continue;
        incidence_[p * n + l] = 1;
        lines_[l].incident_points.push_back(static_cast<int>(p));
        point_lines_[p].push_back(static_cast<int>(l));
      }
    }
  }

  FieldSpec field_;
  std::vector<PlanePoint> points_;
  std::vector<PlaneLine> lines_;
  std::vector<std::vector<int>> point_lines_;
  std::vector<char> incidence_;  // point-major
  std::vector<int> triple_rank_;
};

inline ProjectivePlane plane_build(int q) { return ProjectivePlane(q); }

enum class LineClass { Tangent, Secant, External };

inline std::string_view to_string(LineClass c) {
  switch (c) {
    case LineClass::Tangent: return "tangent";
    case LineClass::Secant: return "secant";
    case LineClass::External: return "external";
  }
  return "?";
}

/// The conic x1^2 = x0*x2: points (1:t:t^2) and (0:0:1). For even q the
/// nucleus is (0:1:0).
struct Conic {
  std::vector<int> points;  // sorted ids
  std::optional<int> nucleus;
  std::vector<char> member;  // indexed by point id

  bool contains(int point_id) const { return member.at(static_cast<std::size_t>(point_id)) != 0; }
};

inline Conic conic_canonical(const ProjectivePlane& plane) {
  const auto& f = plane.field();
  Conic c;
  c.member.assign(static_cast<std::size_t>(plane.size()), 0);
  for (const auto t : f.elements()) c.points.push_back(plane.point_id({f.one(), t, f.mul(t, t)}));
  c.points.push_back(plane.point_id({f.zero(), f.zero(), f.one()}));
  std::sort(c.points.begin(), c.points.end());
  for (int p : c.points) c.member[static_cast<std::size_t>(p)] = 1;
  if (f.p() == 2) c.nucleus = plane.point_id({f.zero(), f.one(), f.zero()});
  return c;
}

inline int conic_intersection_size(const Conic& conic, const PlaneLine& line) {
  return static_cast<int>(std::count_if(line.incident_points.begin(), line.incident_points.end(),
                                        [&](int p) { return conic.contains(p); }));
}

// A conic is an arc, so a line meets it in at most two points.
inline LineClass classify_line(const Conic& conic, const PlaneLine& line) {
  switch (conic_intersection_size(conic, line)) {
    case 0: return LineClass::External;
    case 1: return LineClass::Tangent;
    default: return LineClass::Secant;
  }
}

/// True iff no three of the (distinct) points are collinear.
inline bool is_arc(const ProjectivePlane& plane, std::span<const int> pts) {
  std::vector<int> on_line(static_cast<std::size_t>(plane.size()), 0);
  std::vector<char> seen(static_cast<std::size_t>(plane.size()), 0);
  for (int p : pts) {
    if (seen.at(static_cast<std::size_t>(p))) continue;
    seen[static_cast<std::size_t>(p)] = 1;
    for (int l : plane.lines_through(p))
      if (++on_line[static_cast<std::size_t>(l)] > 2) return false;
  }
  return true;
}

inline bool is_square(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

/// Smallest point set containing `quad` that is closed under adding the meet
/// of any two lines joining its points. For square q and a 4-arc this is the
/// Baer subplane through the four points.
inline std::vector<int> baer_closure(const ProjectivePlane& plane, std::span<const int> quad) {
  if (!is_square(plane.order()))
    throw Error(ErrorCode::NotSquareOrder, "Baer subplanes need a square order, got " + std::to_string(plane.order()));
  std::vector<int> pts(quad.begin(), quad.end());
  std::sort(pts.begin(), pts.end());
  if (pts.size() != 4 || std::adjacent_find(pts.begin(), pts.end()) != pts.end() || !is_arc(plane, pts))
    throw Error(ErrorCode::NotAnArc, "baer_closure needs four points in general position");

  std::vector<char> in(static_cast<std::size_t>(plane.size()), 0);
  for (int p : pts) in[static_cast<std::size_t>(p)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> spanned;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) spanned.push_back(plane.line_through(pts[i], pts[j]));
    std::sort(spanned.begin(), spanned.end());
    spanned.erase(std::unique(spanned.begin(), spanned.end()), spanned.end());
    for (std::size_t i = 0; i < spanned.size(); ++i)
      for (std::size_t j = i + 1; j < spanned.size(); ++j) {
        const int x = plane.meet(spanned[i], spanned[j]);
        if (in[static_cast<std::size_t>(x)]) continue;
        in[static_cast<std::size_t>(x)] = 1;
        pts.push_back(x);
        grew = true;
      }
    std::sort(pts.begin(), pts.end());
  }
  return pts;
}

}  // namespace ryser
