#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "projwidth/embedded_graph.hpp"

namespace projwidth {

using FlagId = int;

/// Flag system (graph-encoded map) of an embedding: three fixed-point-free
/// involutions on the flag set.
///
///   vertex_switch  moves to the other end of the same edge, same side
///   edge_switch    moves to the neighbouring edge around the same corner
///   face_switch    moves to the other side of the same dart
///
/// Faces are orbits of <vertex_switch, edge_switch>, vertices are orbits of
/// <edge_switch, face_switch>, edges are orbits of <vertex_switch, face_switch>.
struct FlagSystem {
  std::vector<FlagId> vertex_switch;
  std::vector<FlagId> edge_switch;
  std::vector<FlagId> face_switch;

  int size() const { return static_cast<int>(vertex_switch.size()); }

  /// Dual map: faces and vertices exchange roles.
  FlagSystem dual() const { return {face_switch, edge_switch, vertex_switch}; }
};

// Flag of an embedded graph: 2*dart + side. Side 1 lies between the dart and
// its rotation successor, side 0 between the predecessor and the dart.
constexpr FlagId flag_of(DartId d, int side) { return 2 * d + side; }
constexpr DartId flag_dart(FlagId f) { return f >> 1; }
constexpr int flag_side(FlagId f) { return f & 1; }

inline FlagSystem flag_system(const EmbeddedGraph& g) {
  const int count = 2 * g.num_darts();
  FlagSystem fs;
  fs.vertex_switch.resize(count);
  fs.edge_switch.resize(count);
  fs.face_switch.resize(count);
  for (DartId d = 0; d < g.num_darts(); ++d) {
    const bool positive = g.sign(edge_of(d)) == Sign::Positive;
    for (int s = 0; s < 2; ++s) {
      const FlagId f = flag_of(d, s);
      fs.face_switch[f] = flag_of(d, 1 - s);
      fs.vertex_switch[f] = flag_of(opposite_dart(d), positive ? 1 - s : s);
    }
    fs.edge_switch[flag_of(d, 1)] = flag_of(g.succ(d), 0);
    fs.edge_switch[flag_of(g.succ(d), 0)] = flag_of(d, 1);
  }
  return fs;
}

/// Reads an embedding scheme back out of a flag system.
///
/// `vertex_starts` lists one flag per vertex orbit; the vertex order and the
/// starting dart of each rotation follow it. That flag is labelled side 1 and
/// the rotation is read by alternating edge_switch and face_switch. Edge ids
/// follow the smallest flag of each edge orbit; end 0 of an edge is the dart
/// holding that smallest flag.
inline EmbeddedGraph embedded_graph_from_flags(
    const FlagSystem& fs, const std::vector<FlagId>& vertex_starts,
    std::string label = {}) {
  const int count = fs.size();
  std::vector<int> edge_id(count, -1);
  std::vector<int> edge_end(count, -1);
  int m = 0;
  for (FlagId f = 0; f < count; ++f) {
    if (edge_id[f] != -1) continue;
    const FlagId a = f, b = fs.face_switch[f];
    const FlagId c = fs.vertex_switch[f], d = fs.face_switch[c];
    for (FlagId x : {a, b}) edge_id[x] = m, edge_end[x] = 0;
    for (FlagId x : {c, d}) edge_id[x] = m, edge_end[x] = 1;
    ++m;
  }

  const int n = static_cast<int>(vertex_starts.size());
  std::vector<int> label_of(count, -1);
  std::vector<VertexId> vertex_of(count, -1);
  std::vector<std::vector<DartId>> rotations(n);
  for (VertexId v = 0; v < n; ++v) {
    FlagId y = vertex_starts[v];
    if (vertex_of[y] != -1) throw Error("vertex start flags share an orbit");
    do {
      const FlagId partner = fs.face_switch[y];
      label_of[y] = 1;
      label_of[partner] = 0;
      vertex_of[y] = vertex_of[partner] = v;
      rotations[v].push_back(dart_of(edge_id[y], edge_end[y]));
      y = fs.face_switch[fs.edge_switch[y]];
    } while (y != vertex_starts[v]);
  }
  for (FlagId f = 0; f < count; ++f)
    if (vertex_of[f] == -1) throw Error("vertex start flags miss an orbit");

  std::vector<EmbeddedEdge> edges(m);
  for (FlagId f = 0; f < count; ++f) {
    if (edge_end[f] != 0 || label_of[f] != 1) continue;
    const FlagId across = fs.vertex_switch[f];
    auto& e = edges[edge_id[f]];
    e.u = vertex_of[f];
    e.v = vertex_of[across];
    e.sign = label_of[across] == 0 ? Sign::Positive : Sign::Negative;
  }
  return EmbeddedGraph(n, std::move(edges), std::move(rotations),
                       std::move(label));
}

/// Canonical code of a connected flag system, invariant under relabelling
/// flags (hence under embedded isomorphism and local orientation flips).
inline std::vector<int> canonical_code(const FlagSystem& fs) {
  const int count = fs.size();
  std::vector<int> best;
  std::vector<int> number(count);
  std::vector<FlagId> order;
  order.reserve(count);
  for (FlagId root = 0; root < count; ++root) {
    std::fill(number.begin(), number.end(), -1);
    order.clear();
    number[root] = 0;
    order.push_back(root);
    std::vector<int> code;
    code.reserve(3 * static_cast<std::size_t>(count));
    bool worse = false;
    bool better = best.empty();
    for (std::size_t head = 0; head < order.size(); ++head) {
      const FlagId x = order[head];
      for (const auto* inv : {&fs.vertex_switch, &fs.edge_switch,
                              &fs.face_switch}) {
        const FlagId y = (*inv)[x];
        if (number[y] == -1) {
          number[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
        code.push_back(number[y]);
        if (!better) {
          const std::size_t i = code.size() - 1;
          if (code[i] < best[i]) better = true;
          else if (code[i] > best[i]) { worse = true; break; }
        }
      }
      if (worse) break;
    }
    if (!worse && (better || code < best)) best = std::move(code);
  }
  return best;
}

inline bool isomorphic_embeddings(const EmbeddedGraph& a,
                                  const EmbeddedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  return canonical_code(flag_system(a)) == canonical_code(flag_system(b));
}

}  // namespace projwidth
