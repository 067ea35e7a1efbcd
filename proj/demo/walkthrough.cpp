// Builds the smallest first-construction hypergraph, prints its parameters,
// a minimum cover, the decomposition verdict and the embedding of G1.

#include <iostream>

#include "ryser/constructions.hpp"
#include "ryser/decompose.hpp"
#include "ryser/embedding.hpp"
#include "ryser/solve.hpp"

int main() {
  using namespace ryser;
  const auto h1 = build_h1(3, 2);
  const auto& h = h1.graph;
  std::cout << "H1(q=3, nu=2): r=" << h.r() << ", " << h.vertex_count() << " vertices, " << h.edge_count()
            << " edges\n";

  const auto cert = is_ryser(h);
  std::cout << "nu=" << *cert.nu << " tau=" << *cert.tau << " (r-1)nu=" << (h.r() - 1) * *cert.nu
            << (cert.ryser ? "  -> Ryser-extremal\n" : "\n");
  std::cout << "matching:";
  for (int e : cert.matching) {
    std::cout << " {";
    for (int v : h.edge(e)) std::cout << " " << h.vertex(v).label;
    std::cout << " }";
  }
  std::cout << "\ncover:";
  for (int v : cert.cover) std::cout << " " << h.vertex(v).label;
  std::cout << "\n";

  const auto split = find_disjoint_ryser_pair(h);
  std::cout << "disjoint intersecting Ryser pair: " << to_string(split.outcome) << " (" << split.kernel_count
            << " minimal kernels, " << split.visited << " cliques)\n";

  const auto g1 = build_g1();
  if (const auto emb = find_embedding(g1.graph, h)) {
    std::cout << "G1 embeds into H1(3,2):\n";
    for (int v = 0; v < g1.graph.vertex_count(); ++v)
      std::cout << "  " << g1.graph.vertex(v).label << " -> " << h.vertex(emb->vertex_map[static_cast<std::size_t>(v)]).label
                << "\n";
  } else {
    std::cout << "G1 does not embed into H1(3,2)\n";
  }
}
