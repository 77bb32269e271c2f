#pragma once

#include <vector>

#include "projwidth/embedded_graph.hpp"

namespace projwidth {

namespace detail {

// Drops the listed edges and vertices, renumbering the survivors in order.
// Surviving edges must not touch a dropped vertex.
inline EmbeddedGraph rebuild(const EmbeddedGraph& g,
                             std::vector<EmbeddedEdge> edges,
                             std::vector<std::vector<DartId>> rot,
                             const std::vector<char>& drop_edge,
                             const std::vector<char>& drop_vertex) {
  const int n = g.num_vertices();
  std::vector<VertexId> new_vertex(n, -1);
  int vn = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!drop_vertex[v]) new_vertex[v] = vn++;
  std::vector<EdgeId> new_edge(edges.size(), -1);
  int en = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!drop_edge[e]) new_edge[e] = en++;

  std::vector<EmbeddedEdge> out_edges;
  out_edges.reserve(en);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (drop_edge[e]) continue;
    EmbeddedEdge ed = edges[e];
    ed.u = new_vertex[ed.u];
    ed.v = new_vertex[ed.v];
    out_edges.push_back(ed);
  }
  std::vector<std::vector<DartId>> out_rot(vn);
  for (VertexId v = 0; v < n; ++v) {
    if (drop_vertex[v]) continue;
    for (DartId d : rot[v])
      if (!drop_edge[edge_of(d)])
        out_rot[new_vertex[v]].push_back(dart_of(new_edge[edge_of(d)], end_of(d)));
  }
  return EmbeddedGraph(vn, std::move(out_edges), std::move(out_rot), g.label());
}

}  // namespace detail

inline EmbeddedGraph delete_edge(const EmbeddedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw Error("delete_edge: unknown edge id");
  std::vector<char> drop_edge(g.num_edges(), 0), drop_vertex(g.num_vertices(), 0);
  drop_edge[e] = 1;
  return detail::rebuild(g, g.edges(), g.rotations(), drop_edge, drop_vertex);
}

/// Contracts a non-loop edge. The higher-numbered endpoint is absorbed into
/// the lower one: its rotation is spliced in place of the contracted dart,
/// after flipping its local orientation when the edge is negative. Parallel
/// edges become loops.
inline EmbeddedGraph contract_edge(const EmbeddedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges())
    throw Error("contract_edge: unknown edge id");
  if (g.edge(e).is_loop()) throw Error("contract_edge: cannot contract a loop");

  const EmbeddedEdge ce = g.edge(e);
  const VertexId keep = std::min(ce.u, ce.v);
  const VertexId gone = std::max(ce.u, ce.v);
  const EmbeddedGraph h =
      ce.sign == Sign::Negative ? flip_vertex(g, gone) : g;

  const DartId keep_dart = dart_of(e, h.edge(e).u == keep ? 0 : 1);
  const DartId gone_dart = opposite_dart(keep_dart);

  std::vector<DartId> spliced;
  const auto keep_rot = h.rotation(keep);
  const auto gone_rot = h.rotation(gone);
  for (DartId d : keep_rot) {
    if (d != keep_dart) {
      spliced.push_back(d);
      continue;
    }
    const int start = h.position(gone_dart);
    for (std::size_t i = 1; i < gone_rot.size(); ++i)
      spliced.push_back(gone_rot[(start + i) % gone_rot.size()]);
  }

  std::vector<EmbeddedEdge> edges = h.edges();
  for (auto& ed : edges) {
    if (ed.u == gone) ed.u = keep;
    if (ed.v == gone) ed.v = keep;
  }
  std::vector<std::vector<DartId>> rot = h.rotations();
  rot[keep] = std::move(spliced);
  rot[gone].clear();

  std::vector<char> drop_edge(g.num_edges(), 0), drop_vertex(g.num_vertices(), 0);
  drop_edge[e] = 1;
  drop_vertex[gone] = 1;
  return detail::rebuild(h, std::move(edges), std::move(rot), drop_edge,
                         drop_vertex);
}

/// Keeps only the connected component carrying a negative cycle, dropping
/// orientable components and isolated vertices. Returns the input unchanged if
/// it is connected. A graph with no such component reduces to nothing.
inline EmbeddedGraph keep_nonorientable_component(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<int> parity(n, 0);
  std::vector<char> unbalanced;
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    unbalanced.push_back(0);
    comp[s] = count;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : g.rotation(v)) {
        const VertexId w = g.head(d);
        const int p = parity[v] ^ (g.sign(edge_of(d)) == Sign::Negative);
        if (comp[w] == -1) {
          comp[w] = count;
          parity[w] = p;
          stack.push_back(w);
        } else if (parity[w] != p) {
          unbalanced[count] = 1;
        }
      }
    }
    ++count;
  }
  if (count <= 1) return g;
  int chosen = -1;
  for (int c = 0; c < count; ++c)
    if (unbalanced[c] && chosen == -1) chosen = c;
  std::vector<char> drop_vertex(n, 0), drop_edge(g.num_edges(), 0);
  for (VertexId v = 0; v < n; ++v) drop_vertex[v] = comp[v] != chosen;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    drop_edge[e] = comp[g.edge(e).u] != chosen;
  return detail::rebuild(g, g.edges(), g.rotations(), drop_edge, drop_vertex);
}

}  // namespace projwidth
