#pragma once

#include <variant>
#include <vector>

#include "projwidth/faces.hpp"

namespace projwidth {

/// Dual map. Dual vertex i is face i of `s`; dual edge e crosses primal edge
/// e. End j of dual edge e lies on the face holding flag 4e + j.
inline EmbeddedGraph dual(const Surface& s) {
  const FlagSystem d = s.flags().dual();
  std::vector<FlagId> starts;
  for (const auto& f : s.faces()) starts.push_back(f.boundary.front().flag);
  return embedded_graph_from_flags(d, starts, s.graph().label());
}

inline EmbeddedGraph dual(const EmbeddedGraph& g) { return dual(Surface(g)); }

/// Dual dart -> primal flag on the face the dual dart sits at: the two sides
/// of dart 0 of the primal edge.
constexpr FlagId primal_flag_of_dual_dart(DartId dual_dart) {
  return flag_of(dart_of(edge_of(dual_dart), 0), end_of(dual_dart));
}

struct RadialOrigin {
  enum class Kind { Vertex, Face } kind;
  int index;  // primal vertex id or face id
};

/// Corner data of a radial edge: primal vertex, face, and boundary position.
struct RadialCorner {
  VertexId vertex;
  int face;
  int position;
};

struct RadialMap {
  EmbeddedGraph graph;
  std::vector<RadialOrigin> origin;   // per radial vertex
  std::vector<RadialCorner> corners;  // per radial edge
};

/// Vertex-face incidence map on the same surface. Radial vertices 0..n-1 are
/// the primal vertices, n..n+F-1 the faces; one radial edge per corner.
inline RadialMap radial(const Surface& s) {
  const FlagSystem& fs = s.flags();
  const int count = fs.size();
  // Radial flag 2x is (x, vertex end), 2x+1 is (x, face end).
  FlagSystem r;
  r.vertex_switch.resize(2 * count);
  r.edge_switch.resize(2 * count);
  r.face_switch.resize(2 * count);
  for (FlagId x = 0; x < count; ++x) {
    const FlagId at_vertex = 2 * x, at_face = 2 * x + 1;
    r.vertex_switch[at_vertex] = at_face;
    r.vertex_switch[at_face] = at_vertex;
    r.face_switch[at_vertex] = 2 * fs.edge_switch[x];
    r.face_switch[at_face] = 2 * fs.edge_switch[x] + 1;
    r.edge_switch[at_vertex] = 2 * fs.face_switch[x];
    r.edge_switch[at_face] = 2 * fs.vertex_switch[x] + 1;
  }

  const EmbeddedGraph& g = s.graph();
  std::vector<FlagId> starts;
  std::vector<RadialOrigin> origin;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) throw Error("radial: isolated vertex");
    starts.push_back(2 * flag_of(g.rotation(v)[0], 1));
    origin.push_back({RadialOrigin::Kind::Vertex, v});
  }
  for (int f = 0; f < s.num_faces(); ++f) {
    starts.push_back(2 * s.face(f).boundary.front().flag + 1);
    origin.push_back({RadialOrigin::Kind::Face, f});
  }
  RadialMap out{embedded_graph_from_flags(r, starts, g.label()),
                std::move(origin),
                {}};

  // Radial edge ids follow the smallest radial flag of each corner orbit,
  // i.e. the smallest primal flag of the corner.
  std::vector<char> seen(count, 0);
  for (FlagId x = 0; x < count; ++x) {
    if (seen[x]) continue;
    seen[x] = seen[fs.edge_switch[x]] = 1;
    out.corners.push_back({g.tail(flag_dart(x)), s.face_of_flag(x),
                           s.corner_position(x)});
  }
  return out;
}

inline RadialMap radial(const EmbeddedGraph& g) { return radial(Surface(g)); }

}  // namespace projwidth
