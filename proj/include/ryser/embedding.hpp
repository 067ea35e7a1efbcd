#pragma once

// Subhypergraph embedding: an injective vertex map phi together with a side
// bijection sigma such that phi sends side s into side sigma(s) and every edge
// of the small hypergraph onto an edge of the big one.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "ryser/error.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

struct Embedding {
  std::vector<int> side_map;    // small side -> big side
  std::vector<int> vertex_map;  // small vertex id -> big vertex id
  std::vector<int> edge_map;    // small edge id -> big edge id

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Hypergraph& small, const Hypergraph& big, const std::map<int, int>& pins)
      : small_(small), big_(big), pins_(pins) {
    const int r = big.r();
    at_side_.assign(static_cast<std::size_t>(big.edge_count()), std::vector<int>(static_cast<std::size_t>(r), -1));
    through_.assign(static_cast<std::size_t>(big.vertex_count()), {});
    for (int f = 0; f < big.edge_count(); ++f)
      for (int v : big.edge(f)) {
        const int s = big.vertex(v).side;
        if (s >= 0 && s < r) at_side_[static_cast<std::size_t>(f)][static_cast<std::size_t>(s)] = v;
        through_[static_cast<std::size_t>(v)].push_back(f);
      }
  }

  std::optional<Embedding> run() {
    const int r = small_.r();
    std::vector<int> sigma(static_cast<std::size_t>(r));
    std::iota(sigma.begin(), sigma.end(), 0);
    const auto small_sides = small_.sides();
    const auto big_sides = big_.sides();
    do {
      bool fits = true;
      for (int s = 0; s < r && fits; ++s)
        fits = small_sides[static_cast<std::size_t>(s)].size() <= big_sides[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s)])].size();
      for (const auto& [sv, bv] : pins_)
        if (fits) fits = big_.vertex(bv).side == sigma[static_cast<std::size_t>(small_.vertex(sv).side)];
      if (!fits) continue;
      sigma_ = sigma;
      phi_.assign(static_cast<std::size_t>(small_.vertex_count()), -1);
      used_.assign(static_cast<std::size_t>(big_.vertex_count()), 0);
      edge_map_.assign(static_cast<std::size_t>(small_.edge_count()), -1);
      for (const auto& [sv, bv] : pins_) {
        if (used_[static_cast<std::size_t>(bv)]) fits = false;
        phi_[static_cast<std::size_t>(sv)] = bv;
        used_[static_cast<std::size_t>(bv)] = 1;
      }
      if (fits && place(0) && place_isolated()) return Embedding{sigma_, phi_, edge_map_};
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
  }

 private:
  // Maps small edge e onto big edge f if consistent; records newly bound vertices.
  bool bind(int e, int f, std::vector<int>& fresh) {
    for (int v : small_.edge(e)) {
      const int s = sigma_[static_cast<std::size_t>(small_.vertex(v).side)];
      const int w = at_side_[static_cast<std::size_t>(f)][static_cast<std::size_t>(s)];
      auto& cur = phi_[static_cast<std::size_t>(v)];
      if (w < 0) return false;
      if (cur >= 0) {
        if (cur != w) return false;
        continue;
      }
      if (used_[static_cast<std::size_t>(w)]) return false;
      cur = w;
      used_[static_cast<std::size_t>(w)] = 1;
      fresh.push_back(v);
    }
    return true;
  }

  void unbind(std::vector<int>& fresh) {
    for (int v : fresh) {
      used_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(v)])] = 0;
      phi_[static_cast<std::size_t>(v)] = -1;
    }
    fresh.clear();
  }

  bool place(int e) {
    if (e == small_.edge_count()) return true;
    const std::vector<int>* cands = nullptr;
    for (int v : small_.edge(e))
      if (int w = phi_[static_cast<std::size_t>(v)]; w >= 0) {
        const auto* through = &through_[static_cast<std::size_t>(w)];
        if (!cands || through->size() < cands->size()) cands = through;
      }
    std::vector<int> all;
    if (!cands) {
      all.resize(static_cast<std::size_t>(big_.edge_count()));
      std::iota(all.begin(), all.end(), 0);
      cands = &all;
    }
    std::vector<int> fresh;
    for (int f : *cands) {
      if (bind(e, f, fresh)) {
        edge_map_[static_cast<std::size_t>(e)] = f;
        if (place(e + 1)) return true;
      }
      unbind(fresh);
    }
    edge_map_[static_cast<std::size_t>(e)] = -1;
    return false;
  }

  // Vertices in no edge go to the least unused vertex of the target side.
  bool place_isolated() {
    for (int v = 0; v < small_.vertex_count(); ++v) {
      if (phi_[static_cast<std::size_t>(v)] >= 0) continue;
      const int s = sigma_[static_cast<std::size_t>(small_.vertex(v).side)];
      bool ok = false;
      for (int w = 0; w < big_.vertex_count() && !ok; ++w)
        if (!used_[static_cast<std::size_t>(w)] && big_.vertex(w).side == s) {
          phi_[static_cast<std::size_t>(v)] = w;
          used_[static_cast<std::size_t>(w)] = 1;
          ok = true;
        }
      if (!ok) return false;
    }
    return true;
  }

  const Hypergraph& small_;
  const Hypergraph& big_;
  const std::map<int, int>& pins_;
  std::vector<std::vector<int>> at_side_;
  std::vector<std::vector<int>> through_;
  std::vector<int> sigma_, phi_, used_, edge_map_;
};

}  // namespace detail

/// Lexicographically first embedding of `small` into `big` (ordered by side
/// map, then by the sequence of edge images), or nullopt after an exhaustive
/// search. `pins` forces chosen small vertices onto given big vertices.
inline std::optional<Embedding> find_embedding(const Hypergraph& small, const Hypergraph& big,
                                               const std::map<int, int>& pins = {}) {
  if (small.r() != big.r())
    throw Error(ErrorCode::ArityMismatch, "cannot embed r=" + std::to_string(small.r()) + " into r=" + std::to_string(big.r()));
  for (const auto& [sv, bv] : pins)
    if (sv < 0 || sv >= small.vertex_count() || bv < 0 || bv >= big.vertex_count())
      throw Error(ErrorCode::InvalidInput, "pin out of range");
  if (small.edge_count() > big.edge_count() || small.vertex_count() > big.vertex_count()) return std::nullopt;
  detail::EmbeddingSearch search(small, big, pins);
  return search.run();
}

/// Independent check of an embedding.
inline bool is_embedding(const Hypergraph& small, const Hypergraph& big, const Embedding& emb) {
  const auto r = static_cast<std::size_t>(small.r());
  if (small.r() != big.r() || emb.side_map.size() != r) return false;
  auto perm = emb.side_map;
  std::sort(perm.begin(), perm.end());
  for (std::size_t i = 0; i < r; ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  if (emb.vertex_map.size() != static_cast<std::size_t>(small.vertex_count())) return false;
  std::vector<int> seen = emb.vertex_map;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (int v = 0; v < small.vertex_count(); ++v) {
    const int w = emb.vertex_map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= big.vertex_count()) return false;
    if (big.vertex(w).side != emb.side_map[static_cast<std::size_t>(small.vertex(v).side)]) return false;
  }
  for (const auto& e : small.edges()) {
    std::vector<int> img;
    for (int v : e) img.push_back(emb.vertex_map[static_cast<std::size_t>(v)]);
    if (!big.find_edge(img)) return false;
  }
  return true;
}

}  // namespace ryser
