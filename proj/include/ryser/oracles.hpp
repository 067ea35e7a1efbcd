#pragma once

// Exhaustive blocking-set searches in small planes, used to check the
// blocking-set facts the constructions depend on.
//
// All searches share one hitting-set enumerator: take the first unblocked
// target line L, and for each point x of L (in id order) branch on "x is the
// first point of L in the set", excluding the earlier points of L. Every
// minimal blocking set within the size budget is produced exactly once, and a
// minimum blocking set is always minimal, so scanning budgets upwards yields
// the minimum size together with every minimum blocker.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "ryser/detail/bitset.hpp"
#include "ryser/error.hpp"
#include "ryser/geometry.hpp"

namespace ryser {

enum class BlockerTarget { AllLines, ConicTangentSecant, NontrivialAllLines };
enum class BlockerClass { Line, Conic, ConicSwap, BaerSubplane, Other };

inline std::string_view to_string(BlockerTarget t) {
  switch (t) {
    case BlockerTarget::AllLines: return "all_lines";
    case BlockerTarget::ConicTangentSecant: return "conic_tangent_secant";
    case BlockerTarget::NontrivialAllLines: return "all_lines_nontrivial";
  }
  return "?";
}

inline std::string_view to_string(BlockerClass c) {
  switch (c) {
    case BlockerClass::Line: return "Line";
    case BlockerClass::Conic: return "Conic";
    case BlockerClass::ConicSwap: return "ConicSwap";
    case BlockerClass::BaerSubplane: return "BaerSubplane";
    case BlockerClass::Other: return "Other";
  }
  return "?";
}

struct ClassifiedBlocker {
  std::vector<int> points;  // ascending point ids
  BlockerClass kind = BlockerClass::Other;
};

struct BlockerReport {
  int q = 0;
  BlockerTarget target = BlockerTarget::AllLines;
  int minimum = 0;
  std::vector<ClassifiedBlocker> blockers;  // every blocker of minimum size, sorted
  std::vector<int> target_lines;            // ids of the lines that must be blocked

  std::size_t count() const { return blockers.size(); }

  std::map<BlockerClass, std::size_t> histogram() const {
    std::map<BlockerClass, std::size_t> h;
    for (const auto& b : blockers) ++h[b.kind];
    return h;
  }
};

namespace detail {

class BlockerSearch {
 public:
  BlockerSearch(const ProjectivePlane& plane, std::vector<int> target_lines, bool forbid_full_line)
      : plane_(plane), targets_(std::move(target_lines)), forbid_full_line_(forbid_full_line) {
    const auto n = static_cast<std::size_t>(plane.size());
    line_points_.assign(n, Bitset(n));
    for (const auto& l : plane.lines())
      for (int p : l.incident_points) line_points_[static_cast<std::size_t>(l.id)].set(static_cast<std::size_t>(p));
    is_target_.assign(n, 0);
    for (int l : targets_) is_target_[static_cast<std::size_t>(l)] = 1;
  }

  // All minimal blockers with at most `budget` points.
  std::vector<std::vector<int>> run(int budget) {
    found_.clear();
    const auto n = static_cast<std::size_t>(plane_.size());
    Bitset chosen(n), excluded(n);
    search(chosen, excluded, budget);
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool contains_full_line_through(const Bitset& chosen, int x) const {
    for (int l : plane_.lines_through(x))
      if (line_points_[static_cast<std::size_t>(l)].is_subset_of(chosen)) return true;
    return false;
  }

  void search(Bitset& chosen, Bitset& excluded, int budget) {
    ++nodes_;
    int first = -1;
    std::vector<int> open;
    for (int l : targets_) {
      if (line_points_[static_cast<std::size_t>(l)].intersects(chosen)) continue;
      if (first < 0) first = l;
      open.push_back(l);
    }
    if (first < 0) {
      found_.push_back(chosen.to_vector());
      return;
    }
    const int room = budget - static_cast<int>(chosen.count());
    if (room <= 0) return;
    if (!enough_room(open, chosen, excluded, room)) return;

    const auto& cand = plane_.line(first).incident_points;
    std::vector<int> tried;
    for (int x : cand) {
      const auto xi = static_cast<std::size_t>(x);
      if (excluded.test(xi)) continue;
      chosen.set(xi);
      if (!(forbid_full_line_ && contains_full_line_through(chosen, x))) search(chosen, excluded, budget);
      chosen.reset(xi);
      excluded.set(xi);
      tried.push_back(x);
    }
    for (int x : tried) excluded.reset(static_cast<std::size_t>(x));
  }

  // Sorted-degree bound: `room` more points must block every open line.
  bool enough_room(const std::vector<int>& open, const Bitset& chosen, const Bitset& excluded, int room) {
    degree_.assign(static_cast<std::size_t>(plane_.size()), 0);
    for (int l : open)
      for (int p : plane_.line(l).incident_points) {
        const auto pi = static_cast<std::size_t>(p);
        if (!excluded.test(pi) && !chosen.test(pi)) ++degree_[pi];
      }
    std::sort(degree_.begin(), degree_.end(), std::greater<>());
    long sum = 0;
    for (int i = 0; i < room && i < static_cast<int>(degree_.size()); ++i) sum += degree_[static_cast<std::size_t>(i)];
    return sum >= static_cast<long>(open.size());
  }

  const ProjectivePlane& plane_;
  std::vector<int> targets_;
  bool forbid_full_line_;
  std::vector<Bitset> line_points_;
  std::vector<char> is_target_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> found_;
  std::uint64_t nodes_ = 0;
};

inline bool is_line_set(const ProjectivePlane& plane, const std::vector<int>& pts) {
  if (static_cast<int>(pts.size()) != plane.order() + 1) return false;
  return plane.line(plane.line_through(pts[0], pts[1])).incident_points == pts;
}

inline bool is_baer_subplane(const ProjectivePlane& plane, const std::vector<int>& pts) {
  const int q = plane.order();
  if (!is_square(q)) return false;
  int root = 1;
  while (root * root < q) ++root;
  if (static_cast<int>(pts.size()) != q + root + 1) return false;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::vector<int> quad{pts[a], pts[b], pts[c], pts[d]};
          if (!is_arc(plane, quad)) continue;
          return baer_closure(plane, quad) == pts;
        }
  return false;
}

}  // namespace detail

/// Valid |S1| = |S2| for a conic swap when n = |C minus the line|: proper
/// nontrivial subgroup orders of a cyclic group of order n (n = q-1 or q+1),
/// or of the elementary abelian group of order q = p^k (n = q).
inline bool valid_swap_size(int q, int n, int d) {
  if (n == q - 1 || n == q + 1) return d > 1 && d < n && n % d == 0;
  if (n == q) {
    int p = 2;
    while (q % p != 0) ++p;
    for (int pj = p; pj < q; pj *= p)
      if (pj == d) return true;
  }
  return false;
}

/// Tests the swap shape (C - S1) + S2 with S2 inside a line l off the conic,
/// S1 a set of conic points off l, and |S1| a valid subgroup size.
inline bool is_conic_swap(const ProjectivePlane& plane, const Conic& conic, const std::vector<int>& pts) {
  std::vector<int> s2;
  for (int x : pts)
    if (!conic.contains(x)) s2.push_back(x);
  std::vector<int> s1;
  std::set_difference(conic.points.begin(), conic.points.end(), pts.begin(), pts.end(), std::back_inserter(s1));
  if (s2.empty() || s1.size() != s2.size()) return false;

  std::vector<int> lines;
  if (s2.size() == 1) lines = plane.lines_through(s2[0]);
  else lines.push_back(plane.line_through(s2[0], s2[1]));
  const int q = plane.order();
  for (int l : lines) {
    const bool s2_on = std::all_of(s2.begin(), s2.end(), [&](int x) { return plane.incident(x, l); });
    const bool s1_off = std::none_of(s1.begin(), s1.end(), [&](int x) { return plane.incident(x, l); });
    if (!s2_on || !s1_off) continue;
    const int n = q + 1 - conic_intersection_size(conic, plane.line(l));
    if (valid_swap_size(q, n, static_cast<int>(s1.size()))) return true;
  }
  return false;
}

inline bool blocks_all(const ProjectivePlane& plane, const std::vector<int>& pts, const std::vector<int>& lines) {
  return std::all_of(lines.begin(), lines.end(), [&](int l) {
    return std::any_of(pts.begin(), pts.end(), [&](int p) { return plane.incident(p, l); });
  });
}

namespace detail {

inline BlockerReport minimum_blockers(const ProjectivePlane& plane, BlockerTarget target, std::vector<int> lines,
                                      bool forbid_full_line, int max_size) {
  BlockerReport rep;
  rep.q = plane.order();
  rep.target = target;
  rep.target_lines = lines;
  BlockerSearch search(plane, std::move(lines), forbid_full_line);
  for (int m = 1; m <= max_size; ++m) {
    auto sets = search.run(m);
    std::erase_if(sets, [&](const auto& s) { return static_cast<int>(s.size()) != m; });
    if (sets.empty()) continue;
    std::sort(sets.begin(), sets.end());
    rep.minimum = m;
    for (auto& s : sets) rep.blockers.push_back({std::move(s), BlockerClass::Other});
    return rep;
  }
  throw Error(ErrorCode::InfeasibleChoice, "no blocker of size <= " + std::to_string(max_size));
}

inline std::vector<int> all_line_ids(const ProjectivePlane& plane) {
  std::vector<int> out;
  for (const auto& l : plane.lines()) out.push_back(l.id);
  return out;
}

}  // namespace detail

/// Minimum blocking sets of all lines of PG(2,q), q <= 5.
inline BlockerReport min_blocking_sets(int q) {
  if (q > 5) throw Error(ErrorCode::SearchTooLarge, "min_blocking_sets is limited to q <= 5");
  const ProjectivePlane plane(q);
  auto rep = detail::minimum_blockers(plane, BlockerTarget::AllLines, detail::all_line_ids(plane), false, q + 1);
  for (auto& b : rep.blockers)
    b.kind = detail::is_line_set(plane, b.points) ? BlockerClass::Line : BlockerClass::Other;
  return rep;
}

/// Every (q+1)-point blocker of the tangent and secant lines of the canonical
/// conic, classified as a line, the conic, a conic swap, or other.
inline BlockerReport classify_conic_blockers(int q) {
  if (!is_prime(q) || q == 2) throw Error(ErrorCode::NotOddPrime, "classify_conic_blockers needs an odd prime q");
  if (q > 5) throw Error(ErrorCode::SearchTooLarge, "classify_conic_blockers is limited to q <= 5");
  const ProjectivePlane plane(q);
  const auto conic = conic_canonical(plane);
  std::vector<int> lines;
  for (const auto& l : plane.lines())
    if (classify_line(conic, l) != LineClass::External) lines.push_back(l.id);
  auto rep = detail::minimum_blockers(plane, BlockerTarget::ConicTangentSecant, std::move(lines), false, q + 1);
  for (auto& b : rep.blockers) {
    if (detail::is_line_set(plane, b.points)) b.kind = BlockerClass::Line;
    else if (b.points == conic.points) b.kind = BlockerClass::Conic;
    else if (is_conic_swap(plane, conic, b.points)) b.kind = BlockerClass::ConicSwap;
    else b.kind = BlockerClass::Other;
  }
  return rep;
}

/// Smallest blocking sets of PG(2,q) that contain no full line, q in {3,4,5}.
inline BlockerReport min_nontrivial_blocking(int q) {
  if (q > 5) throw Error(ErrorCode::SearchTooLarge, "min_nontrivial_blocking is limited to q <= 5");
  if (q < 3) throw Error(ErrorCode::InvalidInput, "PG(2," + std::to_string(q) + ") has no nontrivial blocking set");
  const ProjectivePlane plane(q);
  auto rep = detail::minimum_blockers(plane, BlockerTarget::NontrivialAllLines, detail::all_line_ids(plane), true,
                                      plane.size());
  for (auto& b : rep.blockers)
    b.kind = detail::is_baer_subplane(plane, b.points) ? BlockerClass::BaerSubplane : BlockerClass::Other;
  return rep;
}

}  // namespace ryser
