#pragma once

// Exact matching number and vertex cover number.
//
// Both solvers are complete searches and return the lexicographically least
// optimal witness (compared as sorted id sequences), so results are stable
// across runs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ryser/detail/bitset.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

enum class CertificateKind { Matching, Cover, Ryser, NoDisjointPair, DisjointPair };

inline std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Matching: return "Matching";
    case CertificateKind::Cover: return "Cover";
    case CertificateKind::Ryser: return "Ryser";
    case CertificateKind::NoDisjointPair: return "NoDisjointPair";
    case CertificateKind::DisjointPair: return "DisjointPair";
  }
  return "?";
}

/// A re-checkable witness for nu, tau, the Ryser predicate, or the outcome of
/// a disjoint-pair search. Only the fields relevant to `kind` are filled.
struct Certificate {
  CertificateKind kind = CertificateKind::Matching;
  int r = 0;
  std::optional<int> nu;
  std::optional<int> tau;
  std::vector<int> matching;                 // edge ids
  std::vector<int> cover;                    // vertex ids
  std::vector<std::vector<int>> families;    // DisjointPair: the two edge families
  bool ryser = false;                        // tau >= (r-1) nu
  bool conjecture_bound = false;             // tau <= (r-1) nu
  bool exhaustive = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

// Incidence view of a hypergraph as bitsets, shared by the solvers.
struct Incidence {
  explicit Incidence(const Hypergraph& h)
      : n(h.vertex_count()), m(h.edge_count()), edges(h.edges()) {
    edges_of.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(m)));
    vertex_sets.assign(static_cast<std::size_t>(m), Bitset(static_cast<std::size_t>(n)));
    for (int e = 0; e < m; ++e)
      for (int v : edges[static_cast<std::size_t>(e)]) {
        edges_of[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(e));
        vertex_sets[static_cast<std::size_t>(e)].set(static_cast<std::size_t>(v));
      }
  }

  Bitset all_edges() const {
    Bitset b(static_cast<std::size_t>(m));
    b.set_all();
    return b;
  }
  Bitset all_vertices() const {
    Bitset b(static_cast<std::size_t>(n));
    b.set_all();
    return b;
  }

  int n;
  int m;
  std::vector<std::vector<int>> edges;
  std::vector<Bitset> edges_of;     // per vertex
  std::vector<Bitset> vertex_sets;  // per edge
};

// Branch-and-bound hitting set: branch on the uncovered edge with the fewest
// usable vertices, excluding earlier siblings; prune with the larger of a
// greedy disjoint-edge packing and a sorted-degree bound.
class CoverSearch {
 public:
  explicit CoverSearch(const Incidence& inc) : inc_(inc), degree_(static_cast<std::size_t>(inc.n), 0) {}

  // Is there a set of at most `budget` vertices from `allowed` hitting every
  // edge in `uncovered`? On success `found()` holds such a set.
  bool feasible(const Bitset& uncovered, const Bitset& allowed, int budget) {
    found_.clear();
    stack_.clear();
    return search(uncovered, allowed, budget);
  }

  int lower_bound(const Bitset& uncovered, const Bitset& allowed) { return bound(uncovered, allowed); }

  const std::vector<int>& found() const { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int bound(const Bitset& uncovered, const Bitset& allowed) {
    const auto need = static_cast<long>(uncovered.count());
    if (need == 0) return 0;
    // packing: uncovered edges pairwise disjoint on allowed vertices
    int packing = 0;
    Bitset used(static_cast<std::size_t>(inc_.n));
    uncovered.for_each([&](std::size_t e) {
      const auto& vs = inc_.vertex_sets[e];
      bool clash = false;
      bool usable = false;
      for (std::size_t w = 0; w < vs.words().size(); ++w) {
        const auto a = vs.words()[w] & allowed.words()[w];
        if (a) usable = true;
        if (a & used.words()[w]) clash = true;
      }
      if (!usable) {
        packing = 1 << 20;  // unhittable edge
        return;
      }
      if (clash) return;
      ++packing;
      for (int v : inc_.edges[e])
        if (allowed.test(static_cast<std::size_t>(v))) used.set(static_cast<std::size_t>(v));
    });
    // degree: the k best vertices together hit at most the sum of their degrees
    degrees_.clear();
    touched_.clear();
    uncovered.for_each([&](std::size_t e) {
      for (int v : inc_.edges[e]) {
        const auto vi = static_cast<std::size_t>(v);
        if (!allowed.test(vi)) continue;
        if (degree_[vi]++ == 0) touched_.push_back(v);
      }
    });
    for (int v : touched_) {
      degrees_.push_back(degree_[static_cast<std::size_t>(v)]);
      degree_[static_cast<std::size_t>(v)] = 0;
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
    long sum = 0;
    int k = 0;
    for (int d : degrees_) {
      if (sum >= need) break;
      sum += d;
      ++k;
    }
    if (sum < need) return 1 << 20;
    return std::max(packing, k);
  }

  bool search(const Bitset& uncovered, Bitset allowed, int budget) {
    ++nodes_;
    if (uncovered.none()) {
      found_ = stack_;
      std::sort(found_.begin(), found_.end());
      return true;
    }
    if (budget <= 0) return false;
    if (bound(uncovered, allowed) > budget) return false;

    // branching edge: fewest usable vertices
    std::size_t best_edge = 0;
    std::size_t best_count = SIZE_MAX;
    uncovered.for_each([&](std::size_t e) {
      const std::size_t c = inc_.vertex_sets[e].intersection_count(allowed);
      if (c < best_count) {
        best_count = c;
        best_edge = e;
      }
    });
    if (best_count == 0) return false;

    std::vector<std::pair<int, int>> order;  // (-degree, vertex)
    for (int v : inc_.edges[best_edge]) {
      if (!allowed.test(static_cast<std::size_t>(v))) continue;
      order.emplace_back(-static_cast<int>(inc_.edges_of[static_cast<std::size_t>(v)].intersection_count(uncovered)), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [neg_deg, v] : order) {
      const auto vi = static_cast<std::size_t>(v);
      allowed.reset(vi);
      Bitset rest = uncovered;
      rest.subtract(inc_.edges_of[vi]);
      stack_.push_back(v);
      if (search(rest, allowed, budget - 1)) return true;
      stack_.pop_back();
    }
    return false;
  }

  const Incidence& inc_;
  std::vector<int> degree_;
  std::vector<int> degrees_;
  std::vector<int> touched_;
  std::vector<int> stack_;
  std::vector<int> found_;
  std::uint64_t nodes_ = 0;
};

// Exact tau of the edge family `edges` (a subset of inc's edges).
inline int cover_number_of(CoverSearch& search, const Incidence& inc, const Bitset& edges) {
  const Bitset allowed = inc.all_vertices();
  for (int k = search.lower_bound(edges, allowed); k <= inc.n; ++k)
    if (search.feasible(edges, allowed, k)) return k;
  throw Error(ErrorCode::InvalidInput, "edge family has no vertex cover");  // only an empty edge gets here
}

// Lexicographically least cover of size tau, fixing one element at a time:
// the next element is the smallest v for which the remaining edges still have
// a cover of the remaining size using only vertices above v.
inline std::vector<int> lex_least_cover(CoverSearch& search, const Incidence& inc, const Bitset& edges, int tau) {
  std::vector<int> chosen;
  Bitset uncovered = edges;
  int last = -1;
  while (static_cast<int>(chosen.size()) < tau) {
    bool placed = false;
    for (int v = last + 1; v < inc.n && !placed; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!inc.edges_of[vi].intersects(uncovered)) continue;
      Bitset rest = uncovered;
      rest.subtract(inc.edges_of[vi]);
      Bitset allowed(static_cast<std::size_t>(inc.n));
      for (int u = v + 1; u < inc.n; ++u) allowed.set(static_cast<std::size_t>(u));
      if (!search.feasible(rest, allowed, tau - static_cast<int>(chosen.size()) - 1)) continue;
      chosen.push_back(v);
      uncovered = rest;
      last = v;
      placed = true;
    }
    if (!placed) break;  // unreachable when tau is exact
  }
  return chosen;
}

}  // namespace detail

/// Exact nu with the lexicographically least maximum matching.
inline Certificate matching_number(const Hypergraph& h) {
  const detail::Incidence inc(h);
  const auto m = static_cast<std::size_t>(inc.m);
  std::vector<detail::Bitset> later_disjoint(m, detail::Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!inc.vertex_sets[a].intersects(inc.vertex_sets[b])) later_disjoint[a].set(b);

  std::vector<int> best;
  std::vector<int> cur;
  // Preorder over increasing edge ids visits edge sets in lexicographic
  // order, so the first maximum found is the least one. Pruning only drops
  // subtrees that cannot exceed the current best.
  auto dfs = [&](auto&& self, const detail::Bitset& candidates) -> void {
    if (cur.size() > best.size()) best = cur;
    const auto cands = candidates.to_vector();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cur.size() + (cands.size() - i) <= best.size()) break;
      const auto e = static_cast<std::size_t>(cands[i]);
      cur.push_back(cands[i]);
      self(self, candidates & later_disjoint[e]);
      cur.pop_back();
    }
  };
  detail::Bitset all(m);
  all.set_all();
  dfs(dfs, all);

  Certificate c;
  c.kind = CertificateKind::Matching;
  c.r = h.r();
  c.nu = static_cast<int>(best.size());
  c.matching = best;
  c.exhaustive = true;
  return c;
}

/// Exact tau with the lexicographically least minimum cover.
inline Certificate cover_number(const Hypergraph& h) {
  const detail::Incidence inc(h);
  detail::CoverSearch search(inc);
  const auto edges = inc.all_edges();
  const int tau = detail::cover_number_of(search, inc, edges);
  Certificate c;
  c.kind = CertificateKind::Cover;
  c.r = h.r();
  c.tau = tau;
  c.cover = detail::lex_least_cover(search, inc, edges, tau);
  c.exhaustive = true;
  return c;
}

/// nu, tau and whether tau >= (r-1) nu. Also records whether Ryser's bound
/// tau <= (r-1) nu holds for this instance.
inline Certificate is_ryser(const Hypergraph& h) {
  const auto m = matching_number(h);
  const auto t = cover_number(h);
  Certificate c;
  c.kind = CertificateKind::Ryser;
  c.r = h.r();
  c.nu = m.nu;
  c.tau = t.tau;
  c.matching = m.matching;
  c.cover = t.cover;
  c.ryser = *c.tau >= (h.r() - 1) * *c.nu;
  c.conjecture_bound = *c.tau <= (h.r() - 1) * *c.nu;
  c.exhaustive = true;
  return c;
}

inline bool is_matching(const Hypergraph& h, const std::vector<int>& edge_ids) {
  std::vector<char> used(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= h.edge_count()) return false;
    for (int v : h.edge(e)) {
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

inline bool is_cover(const Hypergraph& h, const std::vector<int>& vertex_ids) {
  std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
  for (int v : vertex_ids) {
    if (v < 0 || v >= h.vertex_count()) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const auto& e) {
    return std::any_of(e.begin(), e.end(), [&](int v) { return in[static_cast<std::size_t>(v)] != 0; });
  });
}

/// Re-checks the witnesses in a Matching, Cover or Ryser certificate against
/// `h`: disjointness, covering, and agreement of the sizes with the values.
inline bool recheck(const Hypergraph& h, const Certificate& c) {
  if (c.r != h.r()) return false;
  if (c.nu) {
    if (static_cast<int>(c.matching.size()) != *c.nu || !is_matching(h, c.matching)) return false;
  }
  if (c.tau) {
    if (static_cast<int>(c.cover.size()) != *c.tau || !is_cover(h, c.cover)) return false;
  }
  if (c.kind == CertificateKind::Ryser) {
    if (!c.nu || !c.tau) return false;
    if (c.ryser != (*c.tau >= (c.r - 1) * *c.nu)) return false;
    if (c.conjecture_bound != (*c.tau <= (c.r - 1) * *c.nu)) return false;
  }
  return true;
}

}  // namespace ryser
