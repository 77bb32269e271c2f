#pragma once

#include <vector>

#include "projwidth/embedded_graph.hpp"

namespace projwidth {

/// Applies local-orientation flips so that every edge of a breadth-first
/// spanning tree from vertex 0 is positive. Cycle sign products are unchanged,
/// and the scheme is orientable iff no negative edge survives.
inline EmbeddedGraph normalize_signature(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  if (!g.is_connected()) throw Error("normalize_signature: disconnected input");
  std::vector<int> flip(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue;
  if (n > 0) {
    queue.push_back(0);
    seen[0] = 1;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (DartId d : g.rotation(v)) {
      const VertexId w = g.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      const bool negative = g.sign(edge_of(d)) == Sign::Negative;
      flip[w] = flip[v] ^ (negative ? 1 : 0);
      queue.push_back(w);
    }
  }

  std::vector<EmbeddedEdge> edges = g.edges();
  for (auto& e : edges)
    if (!e.is_loop() && (flip[e.u] ^ flip[e.v])) e.sign = flipped(e.sign);
  std::vector<std::vector<DartId>> rot = g.rotations();
  for (VertexId v = 0; v < n; ++v)
    if (flip[v]) std::reverse(rot[v].begin(), rot[v].end());
  return EmbeddedGraph(n, std::move(edges), std::move(rot), g.label());
}

inline bool all_positive(const EmbeddedGraph& g) {
  for (const auto& e : g.edges())
    if (e.sign == Sign::Negative) return false;
  return true;
}

}  // namespace projwidth
