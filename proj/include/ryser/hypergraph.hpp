#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ryser/error.hpp"

namespace ryser {

struct Vertex {
  int id = 0;
  std::string label;
  int side = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// An r-partite hypergraph. Vertex ids are positions in `vertices()`, edge
/// ids are positions in `edges()`. Building does not enforce the partite
/// invariants; `validate_partite` reports every violation instead.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int r) : r_(r) {}

  int r() const { return r_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const Vertex& vertex(int id) const { return vertices_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  int add_vertex(std::string label, int side) {
    const int id = vertex_count();
    vertices_.push_back({id, std::move(label), side});
    return id;
  }

  /// Appends an edge (stored sorted) and returns its id.
  int add_edge(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    edges_.push_back(std::move(vs));
    return edge_count() - 1;
  }

  /// Vertex ids per side, ascending.
  std::vector<std::vector<int>> sides() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(std::max(r_, 0)));
    for (const auto& v : vertices_)
      if (v.side >= 0 && v.side < r_) out[static_cast<std::size_t>(v.side)].push_back(v.id);
    return out;
  }

  std::optional<int> find_vertex(const std::string& label) const {
    for (const auto& v : vertices_)
      if (v.label == label) return v.id;
    return std::nullopt;
  }

  std::optional<int> find_edge(std::vector<int> vs) const {
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i] == vs) return static_cast<int>(i);
    return std::nullopt;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> edges_;
};

struct Violation {
  enum class Kind { BadArity, VertexIdMismatch, SideOutOfRange, UnknownVertex, EdgeSize, SideMissed, SideRepeated, UnsortedEdge, DuplicateEdge };
  Kind kind;
  int edge = -1;    // -1 when not about an edge
  int vertex = -1;  // -1 when not about a vertex
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_partite(const Hypergraph& h) {
  using K = Violation::Kind;
  ValidationReport rep;
  auto add = [&](K kind, int e, int v, std::string msg) { rep.violations.push_back({kind, e, v, std::move(msg)}); };

  if (h.r() < 1) add(K::BadArity, -1, -1, "r must be positive, got " + std::to_string(h.r()));
  for (int i = 0; i < h.vertex_count(); ++i) {
    const auto& v = h.vertex(i);
    if (v.id != i) add(K::VertexIdMismatch, -1, i, "vertex at position " + std::to_string(i) + " has id " + std::to_string(v.id));
    if (v.side < 0 || v.side >= h.r())
      add(K::SideOutOfRange, -1, i, "vertex " + std::to_string(i) + " has side " + std::to_string(v.side));
  }

  std::set<std::vector<int>> seen;
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edge(e);
    const std::string tag = "edge " + std::to_string(e);
    if (!std::is_sorted(edge.begin(), edge.end())) add(K::UnsortedEdge, e, -1, tag + " is not sorted");
    if (static_cast<int>(edge.size()) != h.r())
      add(K::EdgeSize, e, -1, tag + " has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(h.r()));
    std::vector<int> hits(static_cast<std::size_t>(std::max(h.r(), 0)), 0);
    for (int v : edge) {
      if (v < 0 || v >= h.vertex_count()) {
        add(K::UnknownVertex, e, v, tag + " references unknown vertex " + std::to_string(v));
        continue;
      }
      const int s = h.vertex(v).side;
      if (s >= 0 && s < h.r()) ++hits[static_cast<std::size_t>(s)];
    }
    for (int s = 0; s < h.r(); ++s) {
      const int c = hits[static_cast<std::size_t>(s)];
      if (c == 0) add(K::SideMissed, e, -1, tag + " misses side " + std::to_string(s));
      if (c > 1) add(K::SideRepeated, e, -1, tag + " meets side " + std::to_string(s) + " " + std::to_string(c) + " times");
    }
    auto sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) add(K::DuplicateEdge, e, -1, tag + " duplicates an earlier edge");
  }
  return rep;
}

/// Subhypergraph on the chosen edges and their support. Vertices are
/// renumbered in increasing original id; labels and sides carry over.
inline Hypergraph restrict(const Hypergraph& h, std::span<const int> edge_ids) {
  std::vector<int> chosen(edge_ids.begin(), edge_ids.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<int> remap(static_cast<std::size_t>(h.vertex_count()), -1);
  for (int e : chosen) {
    if (e < 0 || e >= h.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e) + " out of range");
    for (int v : h.edge(e)) remap.at(static_cast<std::size_t>(v)) = 0;
  }
  Hypergraph out(h.r());
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (remap[static_cast<std::size_t>(v)] < 0) continue;
    remap[static_cast<std::size_t>(v)] = out.add_vertex(h.vertex(v).label, h.vertex(v).side);
  }
  for (int e : chosen) {
    std::vector<int> vs;
    for (int v : h.edge(e)) vs.push_back(remap[static_cast<std::size_t>(v)]);
    out.add_edge(std::move(vs));
  }
  return out;
}

/// Vertex-disjoint union; a's vertices come first. Labels get an "a." or
/// "b." prefix so they stay unique.
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.r() != b.r())
    throw Error(ErrorCode::ArityMismatch, "cannot unite r=" + std::to_string(a.r()) + " with r=" + std::to_string(b.r()));
  Hypergraph out(a.r());
  for (const auto& v : a.vertices()) out.add_vertex("a." + v.label, v.side);
  for (const auto& v : b.vertices()) out.add_vertex("b." + v.label, v.side);
  for (const auto& e : a.edges()) out.add_edge(e);
  for (const auto& e : b.edges()) {
    std::vector<int> vs;
    for (int v : e) vs.push_back(v + a.vertex_count());
    out.add_edge(std::move(vs));
  }
  return out;
}

}  // namespace ryser
