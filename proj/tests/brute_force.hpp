#pragma once

// Naive reference solvers shared by the unit and acceptance tests. They share
// no code with the library's search routines.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ryser/hypergraph.hpp"
#include "ryser/solve.hpp"

namespace brute {

using ryser::Hypergraph;

// Lex-least maximum matching over all edge subsets (m <= 20).
inline std::vector<int> matching(const Hypergraph& h) {
  const int m = h.edge_count();
  std::vector<int> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> set;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1u) set.push_back(e);
    if (!ryser::is_matching(h, set)) continue;
    if (set.size() > best.size() || (set.size() == best.size() && set < best)) best = set;
  }
  return best;
}

// Plain branching on the first uncovered edge of `mask`, no bounds or exclusions.
inline bool cover_within(const Hypergraph& h, std::uint64_t mask, std::vector<char>& in, int budget) {
  for (int e = 0; e < h.edge_count(); ++e) {
    if (!(mask >> e & 1u)) continue;
    const auto& edge = h.edge(e);
    if (std::any_of(edge.begin(), edge.end(), [&](int v) { return in[static_cast<std::size_t>(v)]; })) continue;
    if (budget == 0) return false;
    for (int v : edge) {
      in[static_cast<std::size_t>(v)] = 1;
      const bool ok = cover_within(h, mask, in, budget - 1);
      in[static_cast<std::size_t>(v)] = 0;
      if (ok) return true;
    }
    return false;
  }
  return true;
}

inline int tau(const Hypergraph& h, std::uint64_t mask = ~std::uint64_t{0}) {
  std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
  int k = 0;
  while (!cover_within(h, mask, in, k)) ++k;
  return k;
}

// Lex-least k-subset of vertices covering h, by enumerating subsets in order.
inline std::vector<int> lex_cover(const Hypergraph& h, int k) {
  const int n = h.vertex_count();
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (ryser::is_cover(h, idx)) return idx;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return {};
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Whether two disjoint edge subsets are both intersecting with tau >= r-1 and
// have disjoint supports. Exhaustive over 3^m states (m <= 12, n < 64).
inline bool disjoint_pair_exists(const Hypergraph& h) {
  const int m = h.edge_count();
  const unsigned full = 1u << m;
  std::vector<char> qual(full, 0);
  std::vector<std::uint64_t> support(full, 0);
  for (unsigned mask = 1; mask < full; ++mask) {
    bool intersecting = true;
    for (int a = 0; a < m && intersecting; ++a)
      for (int b = a + 1; b < m && intersecting; ++b) {
        if (!(mask >> a & 1u) || !(mask >> b & 1u)) continue;
        const auto &ea = h.edge(a), &eb = h.edge(b);
        std::vector<int> c;
        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(c));
        intersecting = !c.empty();
      }
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1u)
        for (int v : h.edge(e)) support[mask] |= std::uint64_t{1} << v;
    if (!intersecting) continue;
    std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
    qual[mask] = !cover_within(h, mask, in, h.r() - 2);
  }
  for (unsigned a = 1; a < full; ++a) {
    if (!qual[a]) continue;
    for (unsigned b = a + 1; b < full; ++b)
      if (qual[b] && !(a & b) && !(support[a] & support[b])) return true;
  }
  return false;
}

inline Hypergraph random_sub(const Hypergraph& base, std::mt19937& rng, int max_edges) {
  std::vector<int> ids(static_cast<std::size_t>(base.edge_count()));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_edges));
  ids.resize(static_cast<std::size_t>(std::min(m, base.edge_count())));
  return ryser::restrict(base, ids);
}

inline double binomial(int n, int k) {
  double b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace brute
