#pragma once

// Search for two vertex-disjoint intersecting r-Ryser subhypergraphs.
//
// A kernel is a pairwise-intersecting edge family F with tau(F) >= r-1 such
// that every F - {e} has tau < r-1. The search is complete because of
// monotonicity: if (V1, F1) and (V2, F2) are a disjoint pair of intersecting
// Ryser subhypergraphs, shrink each F_i to a minimal subfamily that still has
// tau >= r-1. Subfamilies stay pairwise intersecting, their supports only
// shrink, and tau never increases when edges are removed, so the result is a
// pair of kernels with disjoint supports. Conversely any two kernels with
// disjoint supports are such a pair. Hence enumerating all kernels and testing
// every pair for support-disjointness decides the question.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ryser/detail/bitset.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/solve.hpp"

namespace ryser {

inline constexpr std::uint64_t kDefaultCliqueCap = 10'000'000;

struct RyserKernel {
  std::vector<int> edge_ids;  // ascending
  std::vector<int> support;   // ascending vertex ids
  int tau = 0;

  friend bool operator==(const RyserKernel&, const RyserKernel&) = default;
};

struct WitnessPair {
  RyserKernel first;
  RyserKernel second;
};

enum class SearchStatus { Exhausted, CapHit };

struct KernelEnumeration {
  std::vector<RyserKernel> kernels;  // in discovery (lexicographic) order
  SearchStatus status = SearchStatus::Exhausted;
  std::uint64_t visited = 0;  // cliques visited
};

enum class PairOutcome { Found, NoneExhaustive, Inconclusive };

inline std::string_view to_string(PairOutcome o) {
  switch (o) {
    case PairOutcome::Found: return "Found";
    case PairOutcome::NoneExhaustive: return "None";
    case PairOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct PairSearch {
  PairOutcome outcome = PairOutcome::NoneExhaustive;
  std::optional<WitnessPair> pair;
  std::uint64_t visited = 0;
  std::size_t kernel_count = 0;
};

namespace detail {

class KernelFinder {
 public:
  explicit KernelFinder(const Hypergraph& h) : h_(h), inc_(h), search_(inc_), all_vertices_(inc_.all_vertices()) {
    const auto m = static_cast<std::size_t>(inc_.m);
    later_meeting_.assign(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (inc_.vertex_sets[a].intersects(inc_.vertex_sets[b])) later_meeting_[a].set(b);
  }

  KernelEnumeration run(std::uint64_t cap) {
    out_ = {};
    cap_ = cap;
    Bitset all(static_cast<std::size_t>(inc_.m));
    all.set_all();
    Bitset clique(static_cast<std::size_t>(inc_.m));
    extend(clique, all);
    return std::move(out_);
  }

  // tau(F) >= r-1, memoized by edge set.
  bool qualifies(const Bitset& family) {
    if (auto it = memo_.find(family); it != memo_.end()) return it->second;
    const int budget = h_.r() - 2;
    const bool q = budget < 0 || !search_.feasible(family, all_vertices_, budget);
    memo_.emplace(family, q);
    return q;
  }

  int tau(const Bitset& family) { return cover_number_of(search_, inc_, family); }

  std::vector<int> support(const Bitset& family) const {
    Bitset s(static_cast<std::size_t>(inc_.n));
    family.for_each([&](std::size_t e) { s |= inc_.vertex_sets[e]; });
    return s.to_vector();
  }

 private:
  // Returns false once the cap is hit.
  bool extend(Bitset& clique, const Bitset& candidates) {
    bool keep_going = true;
    candidates.for_each([&](std::size_t e) {
      if (!keep_going) return;
      if (out_.visited >= cap_) {
        out_.status = SearchStatus::CapHit;
        keep_going = false;
        return;
      }
      ++out_.visited;
      clique.set(e);
      if (qualifies(clique)) {
        if (is_minimal(clique))
          out_.kernels.push_back({clique.to_vector(), support(clique), tau(clique)});
      } else {
        keep_going = extend(clique, candidates & later_meeting_[e]);
      }
      clique.reset(e);
    });
    return keep_going;
  }

  // By monotonicity it suffices to drop one edge at a time.
  bool is_minimal(const Bitset& clique) {
    bool minimal = true;
    clique.for_each([&](std::size_t e) {
      if (!minimal) return;
      Bitset smaller = clique;
      smaller.reset(e);
      if (qualifies(smaller)) minimal = false;
    });
    return minimal;
  }

  const Hypergraph& h_;
  Incidence inc_;
  CoverSearch search_;
  Bitset all_vertices_;
  std::vector<Bitset> later_meeting_;
  std::unordered_map<Bitset, bool, BitsetHash> memo_;
  KernelEnumeration out_;
  std::uint64_t cap_ = 0;
};

}  // namespace detail

/// Depth-first enumeration of the minimal intersecting Ryser edge families,
/// visiting cliques of the edge-intersection graph in lexicographic order and
/// stopping after `cap` cliques.
inline KernelEnumeration enumerate_kernels(const Hypergraph& h, std::uint64_t cap = kDefaultCliqueCap) {
  detail::KernelFinder finder(h);
  return finder.run(cap);
}

inline bool supports_disjoint(const RyserKernel& a, const RyserKernel& b) {
  std::size_t i = 0, j = 0;
  while (i < a.support.size() && j < b.support.size()) {
    if (a.support[i] == b.support[j]) return false;
    if (a.support[i] < b.support[j]) ++i;
    else ++j;
  }
  return true;
}

/// Decides whether h contains two vertex-disjoint intersecting r-Ryser
/// subhypergraphs. A witness is returned whenever one is found, even after a
/// cap hit; "none" is only reported for an exhausted enumeration.
inline PairSearch find_disjoint_ryser_pair(const Hypergraph& h, std::uint64_t cap = kDefaultCliqueCap) {
  auto en = enumerate_kernels(h, cap);
  PairSearch res;
  res.visited = en.visited;
  res.kernel_count = en.kernels.size();
  for (std::size_t i = 0; i < en.kernels.size() && !res.pair; ++i)
    for (std::size_t j = i + 1; j < en.kernels.size(); ++j)
      if (supports_disjoint(en.kernels[i], en.kernels[j])) {
        res.pair = WitnessPair{en.kernels[i], en.kernels[j]};
        break;
      }
  if (res.pair) res.outcome = PairOutcome::Found;
  else if (en.status == SearchStatus::Exhausted) res.outcome = PairOutcome::NoneExhaustive;
  else res.outcome = PairOutcome::Inconclusive;
  return res;
}

/// Re-checks a kernel against h: pairwise intersection, tau(restrict) >= r-1
/// with the recorded tau exact, minimality and the recorded support.
inline bool recheck_kernel(const Hypergraph& h, const RyserKernel& k) {
  if (k.edge_ids.empty()) return false;
  for (int e : k.edge_ids)
    if (e < 0 || e >= h.edge_count()) return false;
  const auto sub = restrict(h, k.edge_ids);
  if (*matching_number(sub).nu != 1) return false;
  if (*cover_number(sub).tau != k.tau || k.tau < h.r() - 1) return false;
  for (std::size_t i = 0; i < k.edge_ids.size(); ++i) {
    auto fewer = k.edge_ids;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (*cover_number(restrict(h, fewer)).tau >= h.r() - 1) return false;
  }
  std::vector<int> support;
  for (int e : k.edge_ids) support.insert(support.end(), h.edge(e).begin(), h.edge(e).end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support == k.support;
}

inline Certificate to_certificate(const Hypergraph& h, const PairSearch& res) {
  Certificate c;
  c.r = h.r();
  if (res.pair) {
    c.kind = CertificateKind::DisjointPair;
    c.families = {res.pair->first.edge_ids, res.pair->second.edge_ids};
    c.exhaustive = true;
  } else {
    c.kind = CertificateKind::NoDisjointPair;
    c.exhaustive = res.outcome == PairOutcome::NoneExhaustive;
  }
  return c;
}

}  // namespace ryser
