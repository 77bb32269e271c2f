#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projwidth/graph.hpp"

namespace projwidth {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign flipped(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

struct EmbeddedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::Positive;

  bool is_loop() const { return u == v; }
  bool operator==(const EmbeddedEdge&) const = default;
};

// Darts: dart 2e sits at edge(e).u, dart 2e+1 at edge(e).v. A loop has both
// darts at the same vertex.
constexpr DartId dart_of(EdgeId e, int end) { return 2 * e + end; }
constexpr EdgeId edge_of(DartId d) { return d >> 1; }
constexpr int end_of(DartId d) { return d & 1; }
constexpr DartId opposite_dart(DartId d) { return d ^ 1; }

/// A multigraph with an embedding scheme: a cyclic order of darts around every
/// vertex plus a sign per edge. Sign -1 means the local orientations at the two
/// endpoints disagree across the edge.
///
/// Values are immutable once built; every operation returns a new graph.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Builds from dart rotations. Throws Error if a dart is missing, repeated,
  /// or listed at the wrong vertex.
  EmbeddedGraph(int n, std::vector<EmbeddedEdge> edges,
                std::vector<std::vector<DartId>> rotations,
                std::string label = {})
      : edges_(std::move(edges)),
        rotations_(std::move(rotations)),
        label_(std::move(label)) {
    if (n < 0 || static_cast<int>(rotations_.size()) != n)
      throw Error("rotation count does not match vertex count");
    const int m = static_cast<int>(edges_.size());
    for (const auto& e : edges_)
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw Error("edge endpoint out of range");
    dart_vertex_.assign(2 * static_cast<std::size_t>(m), -1);
    dart_position_.assign(2 * static_cast<std::size_t>(m), -1);
    for (VertexId v = 0; v < n; ++v) {
      const auto& rot = rotations_[v];
      for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
        const DartId d = rot[i];
        if (d < 0 || d >= 2 * m) throw Error("dangling dart in rotation");
        if (dart_vertex_[d] != -1) throw Error("dart listed twice");
        const auto& e = edges_[edge_of(d)];
        if ((end_of(d) == 0 ? e.u : e.v) != v)
          throw Error("dart listed at the wrong vertex");
        dart_vertex_[d] = v;
        dart_position_[d] = i;
      }
    }
    for (int d = 0; d < 2 * m; ++d)
      if (dart_vertex_[d] == -1) throw Error("dart missing from rotations");
  }

  /// Builds from rotations given as edge-id sequences (the PQ1 view). A loop
  /// id listed twice at a vertex: first occurrence is end 0, second end 1.
  static EmbeddedGraph from_edge_rotations(
      int n, std::vector<EmbeddedEdge> edges,
      const std::vector<std::vector<EdgeId>>& edge_rotations,
      std::string label = {}) {
    std::vector<std::vector<DartId>> rot(edge_rotations.size());
    std::vector<int> seen(edges.size(), 0);
    for (std::size_t v = 0; v < edge_rotations.size(); ++v) {
      for (EdgeId e : edge_rotations[v]) {
        if (e < 0 || e >= static_cast<int>(edges.size()))
          throw Error("dangling edge id in rotation");
        const auto& ed = edges[e];
        int end;
        if (ed.is_loop())
          end = seen[e]++;
        else
          end = (ed.u == static_cast<VertexId>(v)) ? 0 : 1;
        if (end > 1) throw Error("edge multiplicity");
        rot[v].push_back(dart_of(e, end));
      }
    }
    return EmbeddedGraph(n, std::move(edges), std::move(rot), std::move(label));
  }

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  const EmbeddedEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EmbeddedEdge>& edges() const { return edges_; }
  Sign sign(EdgeId e) const { return edges_[e].sign; }

  std::span<const DartId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<DartId>>& rotations() const {
    return rotations_;
  }
  int degree(VertexId v) const {
    return static_cast<int>(rotations_[v].size());
  }
  int max_degree() const {
    int best = 0;
    for (const auto& r : rotations_)
      best = std::max(best, static_cast<int>(r.size()));
    return best;
  }

  VertexId tail(DartId d) const { return dart_vertex_[d]; }
  VertexId head(DartId d) const { return dart_vertex_[opposite_dart(d)]; }
  int position(DartId d) const { return dart_position_[d]; }

  DartId succ(DartId d) const {
    const auto& rot = rotations_[tail(d)];
    return rot[(position(d) + 1) % rot.size()];
  }
  DartId pred(DartId d) const {
    const auto& rot = rotations_[tail(d)];
    return rot[(position(d) + rot.size() - 1) % rot.size()];
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    const auto& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  const std::string& label() const { return label_; }
  EmbeddedGraph with_label(std::string label) const {
    EmbeddedGraph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  std::vector<std::vector<EdgeId>> edge_rotations() const {
    std::vector<std::vector<EdgeId>> out(rotations_.size());
    for (std::size_t v = 0; v < rotations_.size(); ++v)
      for (DartId d : rotations_[v]) out[v].push_back(edge_of(d));
    return out;
  }

  Graph abstract_graph() const {
    Graph g(num_vertices());
    for (const auto& e : edges_) g.add_edge(e.u, e.v);
    return g;
  }

  bool is_simple() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    for (const auto& e : edges_) {
      if (e.is_loop()) return false;
      keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  bool is_connected() const {
    const int n = num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : rotations_[v]) {
        const VertexId w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n;
  }

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    if (a.rotations_ != b.rotations_ || a.edges_.size() != b.edges_.size())
      return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.sign != y.sign) return false;
    }
    return true;
  }

 private:
  std::vector<EmbeddedEdge> edges_;
  std::vector<std::vector<DartId>> rotations_;
  std::string label_;
  std::vector<VertexId> dart_vertex_;
  std::vector<int> dart_position_;
};

/// Reverses the local orientation at v: its rotation is reversed and the
/// signs of its non-loop edges toggle. The embedding is unchanged.
inline EmbeddedGraph flip_vertex(const EmbeddedGraph& g, VertexId v) {
  std::vector<EmbeddedEdge> edges = g.edges();
  std::vector<std::vector<DartId>> rot = g.rotations();
  std::reverse(rot[v].begin(), rot[v].end());
  for (auto& e : edges)
    if (!e.is_loop() && (e.u == v || e.v == v)) e.sign = flipped(e.sign);
  return EmbeddedGraph(g.num_vertices(), std::move(edges), std::move(rot),
                       g.label());
}

/// Renumbers edges by (min endpoint, max endpoint, current id). Rotations keep
/// their starting dart; loop darts keep their order of appearance.
inline EmbeddedGraph canonicalize(const EmbeddedGraph& g) {
  const int m = g.num_edges();
  std::vector<EdgeId> order(m);
  for (int e = 0; e < m; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const auto& x = g.edge(a);
    const auto& y = g.edge(b);
    const auto kx = std::pair(std::min(x.u, x.v), std::max(x.u, x.v));
    const auto ky = std::pair(std::min(y.u, y.v), std::max(y.u, y.v));
    return kx < ky;
  });
  std::vector<EdgeId> new_id(m);
  for (int i = 0; i < m; ++i) new_id[order[i]] = i;

  std::vector<EmbeddedEdge> edges(m);
  for (int e = 0; e < m; ++e) {
    EmbeddedEdge ed = g.edge(e);
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    edges[new_id[e]] = ed;
  }
  // Rebuild darts with the edge-id view so that loop ends follow appearance.
  std::vector<std::vector<EdgeId>> er(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (DartId d : g.rotation(v)) er[v].push_back(new_id[edge_of(d)]);
  return EmbeddedGraph::from_edge_rotations(g.num_vertices(), std::move(edges),
                                            er, g.label());
}

}  // namespace projwidth
