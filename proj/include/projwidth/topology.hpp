#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "projwidth/derived.hpp"
#include "projwidth/signature.hpp"
#include "projwidth/support_set.hpp"

namespace projwidth {

/// Width value; "infinite" is an explicit state, never a large integer.
class Width {
 public:
  static Width infinite() { return Width(); }
  static Width of(int value) { return Width(value); }

  bool finite() const { return value_.has_value(); }
  int value() const {
    if (!value_) throw Error("width is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Width&, const Width&) = default;

 private:
  Width() = default;
  explicit Width(int v) : value_(v) {}
  std::optional<int> value_;
};

/// Closed walk: edges[i] joins vertices[i] to vertices[(i+1) % length].
struct ClosedWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool odd() const { return length() % 2 == 1; }
};

/// Closed walk with pairwise distinct vertices.
struct Cycle : ClosedWalk {
  std::optional<bool> contractible;
};

inline bool is_closed_walk(const Graph& g, const ClosedWalk& w) {
  const int k = w.length();
  if (k == 0 || static_cast<int>(w.vertices.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (w.edges[i] < 0 || w.edges[i] >= g.num_edges()) return false;
    auto [a, b] = g.edge(w.edges[i]);
    const VertexId x = w.vertices[i], y = w.vertices[(i + 1) % k];
    if (!((a == x && b == y) || (a == y && b == x))) return false;
  }
  return true;
}

inline bool has_distinct_vertices(const ClosedWalk& w) {
  std::vector<VertexId> v = w.vertices;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline Sign sign_product(const EmbeddedGraph& g, const ClosedWalk& w) {
  Sign s = Sign::Positive;
  for (EdgeId e : w.edges) s = s * g.sign(e);
  return s;
}

/// In the projective plane a closed walk is contractible iff it preserves
/// local orientation, i.e. its sign product is +1.
inline bool is_contractible_walk(const EmbeddedGraph& g, const ClosedWalk& w) {
  if (!is_closed_walk(g.abstract_graph(), w))
    throw Error("is_contractible_walk: not a closed walk of the graph");
  return sign_product(g, w) == Sign::Positive;
}

/// Concatenation of two closed walks sharing their first vertex.
inline ClosedWalk concatenate(const ClosedWalk& a, const ClosedWalk& b) {
  if (a.vertices.front() != b.vertices.front())
    throw Error("concatenate: walks do not share a base vertex");
  ClosedWalk out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

inline ClosedWalk face_walk(const Face& f) {
  ClosedWalk w;
  for (const auto& st : f.boundary) {
    w.vertices.push_back(st.vertex);
    w.edges.push_back(st.edge);
  }
  return w;
}

struct Bipartition {
  bool bipartite = true;
  std::vector<int> side;  // 0/1 per vertex when bipartite
  ClosedWalk odd_walk;    // witness when not bipartite
};

/// Two-colours every component by breadth-first search, or returns an odd
/// closed walk through a monochromatic edge.
inline Bipartition is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  Bipartition out;
  out.side.assign(n, -1);
  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  for (VertexId root = 0; root < n; ++root) {
    if (out.side[root] != -1) continue;
    out.side[root] = 0;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (const auto& inc : g.incident(v)) {
        const VertexId w = inc.neighbor;
        if (out.side[w] == -1) {
          out.side[w] = 1 - out.side[v];
          parent[w] = v;
          parent_edge[w] = inc.edge;
          queue.push_back(w);
        } else if (out.side[w] == out.side[v]) {
          // Paths to the common ancestor plus the edge (v, w).
          std::vector<VertexId> pv{v}, pw{w};
          std::vector<EdgeId> ev, ew;
          std::vector<int> depth(n, -1);
          auto climb = [&](std::vector<VertexId>& path,
                           std::vector<EdgeId>& edges) {
            edges.push_back(parent_edge[path.back()]);
            path.push_back(parent[path.back()]);
          };
          auto level = [&](VertexId x) {
            int d = 0;
            while (parent[x] != -1) x = parent[x], ++d;
            return d;
          };
          while (level(pv.back()) > level(pw.back())) climb(pv, ev);
          while (level(pw.back()) > level(pv.back())) climb(pw, ew);
          while (pv.back() != pw.back()) climb(pv, ev), climb(pw, ew);
          ClosedWalk walk;
          // ancestor .. v, then w .. ancestor
          for (int i = static_cast<int>(pv.size()) - 1; i >= 0; --i) {
            walk.vertices.push_back(pv[i]);
            if (i > 0) walk.edges.push_back(ev[i - 1]);
          }
          walk.edges.push_back(inc.edge);
          for (int i = 0; i + 1 < static_cast<int>(pw.size()); ++i) {
            walk.vertices.push_back(pw[i]);
            walk.edges.push_back(ew[i]);
          }
          out.bipartite = false;
          out.side.clear();
          out.odd_walk = std::move(walk);
          return out;
        }
      }
    }
  }
  return out;
}

inline Bipartition is_bipartite(const EmbeddedGraph& g) {
  return is_bipartite(g.abstract_graph());
}

inline bool is_orientable(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw Error("is_orientable: disconnected input");
  return all_positive(normalize_signature(g));
}

inline ValidationReport validate(const Surface& s) {
  ValidationReport r;
  const EmbeddedGraph& g = s.graph();
  r.connected = g.is_connected();
  r.euler_characteristic = s.euler_characteristic();
  r.is_bipartite_graph = is_bipartite(g).bipartite;
  if (!r.connected) {
    r.messages.push_back("graph is disconnected");
  } else {
    r.orientable = is_orientable(g);
  }
  int total = 0;
  bool all_four = true;
  for (const auto& f : s.faces()) {
    total += f.length();
    if (f.length() != 4) all_four = false;
  }
  if (total != 2 * g.num_edges())
    r.messages.push_back("face lengths do not sum to 2m");
  if (r.connected && r.orientable && r.euler_characteristic == 2)
    r.messages.push_back("planar scheme: no non-contractible cycle");
  else if (r.connected && r.euler_characteristic != 1)
    r.messages.push_back("Euler characteristic " +
                         std::to_string(r.euler_characteristic) +
                         " is not that of the projective plane");
  r.is_quadrangulation = r.projective() && all_four &&
                         g.num_edges() == 2 * g.num_vertices() - 2;
  if (r.projective() && !all_four)
    r.messages.push_back("some face is not a quadrilateral");
  return r;
}

inline ValidationReport validate(const EmbeddedGraph& g) {
  return validate(Surface(g));
}

struct EdgeWidthResult {
  Width length = Width::infinite();
  Cycle witness;
};

/// Shortest non-contractible cycle by breadth-first search in the signed
/// double cover from every vertex: positive edges stay in a layer, negative
/// edges cross, and a shortest path between the two copies of a vertex is a
/// shortest orientation-reversing closed walk through it.
///
/// Ties: lowest start vertex, then the lexicographically smallest vertex
/// sequence (smallest edge id among parallel choices).
inline EdgeWidthResult edge_width(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  const int inf = std::numeric_limits<int>::max();
  auto state = [](VertexId v, int layer) { return 2 * v + layer; };
  auto cross = [&](EdgeId e) {
    return g.sign(e) == Sign::Negative ? 1 : 0;
  };

  auto bfs = [&](int source, int cutoff, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[source] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      if (dist[x] >= cutoff) break;
      const VertexId v = x / 2;
      const int layer = x % 2;
      for (DartId d : g.rotation(v)) {
        const int y = state(g.head(d), layer ^ cross(edge_of(d)));
        if (dist[y] == inf) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  };

  std::vector<int> dist(2 * static_cast<std::size_t>(n));
  int best = inf;
  VertexId best_start = -1;
  for (VertexId s = 0; s < n; ++s) {
    bfs(state(s, 0), best, dist);
    const int d = dist[state(s, 1)];
    if (d < best) {
      best = d;
      best_start = s;
    }
  }
  EdgeWidthResult out;
  if (best_start == -1) return out;
  out.length = Width::of(best);

  // Greedy lexicographic reconstruction against distances to the target.
  const int target = state(best_start, 1);
  bfs(target, inf, dist);
  struct Pred {
    int state;
    EdgeId edge;
  };
  std::vector<std::vector<std::pair<int, Pred>>> layers;
  std::vector<std::pair<int, Pred>> frontier{{state(best_start, 0), {-1, -1}}};
  layers.push_back(frontier);
  for (int step = best; step > 0; --step) {
    std::vector<std::pair<int, Pred>> next;
    VertexId best_vertex = std::numeric_limits<VertexId>::max();
    for (const auto& [x, pred] : frontier) {
      for (DartId d : g.rotation(x / 2)) {
        const EdgeId e = edge_of(d);
        const int y = state(g.head(d), (x % 2) ^ cross(e));
        if (dist[y] != step - 1) continue;
        if (y / 2 < best_vertex) {
          best_vertex = y / 2;
          next.clear();
        }
        if (y / 2 != best_vertex) continue;
        auto it = std::find_if(next.begin(), next.end(),
                               [y](const auto& p) { return p.first == y; });
        if (it == next.end())
          next.push_back({y, {x, e}});
        else if (e < it->second.edge)
          it->second = {x, e};
      }
    }
    frontier = next;
    layers.push_back(frontier);
  }
  // Walk back from the target.
  int cur = target;
  std::vector<VertexId> verts;
  std::vector<EdgeId> edges;
  for (int step = best; step > 0; --step) {
    const auto& layer = layers[step];
    auto it = std::find_if(layer.begin(), layer.end(),
                           [cur](const auto& p) { return p.first == cur; });
    edges.push_back(it->second.edge);
    cur = it->second.state;
    verts.push_back(cur / 2);
  }
  std::reverse(verts.begin(), verts.end());
  std::reverse(edges.begin(), edges.end());
  out.witness.vertices = std::move(verts);
  out.witness.edges = std::move(edges);
  out.witness.contractible = false;
  if (!has_distinct_vertices(out.witness))
    throw Error("edge_width: shortest witness is not a cycle");
  return out;
}

struct FaceWidthResult {
  Width width = Width::infinite();
  SupportSet witness;
};

/// Face-width as half the edge-width of the radial map. The witness lists the
/// primal vertices met by the radial cycle, each pair witnessed by the face
/// between them.
inline FaceWidthResult face_width(const Surface& s) {
  // A sphere has no non-contractible curve at all.
  if (s.euler_characteristic() == 2) return {};
  const RadialMap r = radial(s);
  const EdgeWidthResult ew = edge_width(r.graph);
  if (!ew.length.finite()) return {};
  FaceWidthResult out;
  out.width = Width::of(ew.length.value() / 2);

  const auto& cyc = ew.witness;
  const int len = cyc.length();
  int start = 0;
  while (r.origin[cyc.vertices[start]].kind != RadialOrigin::Kind::Vertex)
    ++start;
  for (int i = 0; i < len; i += 2) {
    const int at = (start + i) % len;
    const RadialCorner& in = r.corners[cyc.edges[at]];
    const RadialCorner& outc = r.corners[cyc.edges[(at + 1) % len]];
    out.witness.vertices.push_back(in.vertex);
    out.witness.pairs.push_back({in.face, in.position, outc.position});
  }
  return out;
}

inline FaceWidthResult face_width(const EmbeddedGraph& g) {
  return face_width(Surface(g));
}

struct WidthReport {
  Width edge_width = Width::infinite();
  Cycle witness;
  Width dual_edge_width = Width::infinite();
  Width face_width = Width::infinite();
  SupportSet fw_witness;
};

inline WidthReport width_report(const Surface& s) {
  WidthReport w;
  auto ew = edge_width(s.graph());
  w.edge_width = ew.length;
  w.witness = std::move(ew.witness);
  w.dual_edge_width = edge_width(dual(s)).length;
  auto fw = face_width(s);
  w.face_width = fw.width;
  w.fw_witness = std::move(fw.witness);
  return w;
}

}  // namespace projwidth
