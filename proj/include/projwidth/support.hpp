#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "projwidth/derived.hpp"
#include "projwidth/support_set.hpp"
#include "projwidth/topology.hpp"

namespace projwidth {

namespace detail {

inline int mod(int a, int len) { return ((a % len) + len) % len; }

// Positions strictly between `from` and `to` going forward around the face.
inline std::vector<int> forward_route(const Face& f, int from, int to) {
  const int len = f.length();
  std::vector<int> route;
  for (int p = mod(from + 1, len); p != mod(to, len); p = mod(p + 1, len))
    route.push_back(p);
  return route;
}

}  // namespace detail

/// Support pair for traversing edge e starting at vertex `from`, witnessed by
/// the first face side of e (in flag order) carrying it in that direction or
/// the other.
inline SupportPair edge_pair(const Surface& s, EdgeId e, VertexId from) {
  const EmbeddedGraph& g = s.graph();
  if (g.edge(e).u != from && g.edge(e).v != from)
    throw Error("edge_pair: vertex is not an endpoint");
  const FlagId x = flag_of(dart_of(e, 0), 0);
  const int f = s.face_of_flag(x);
  const int i = s.step_of_flag(x);
  const Face& face = s.face(f);
  const int len = face.length();
  if (face.boundary[i].edge != e) throw Error("edge_pair: flag bookkeeping");
  if (face.vertex_at(i) == from) return {f, i, detail::mod(i + 1, len)};
  return {f, detail::mod(i + 1, len), i};
}

/// Reads a closed walk as a support set with every pair adjacent.
inline SupportSet support_from_walk(const Surface& s, const ClosedWalk& w) {
  SupportSet out;
  for (int i = 0; i < w.length(); ++i) {
    out.vertices.push_back(w.vertices[i]);
    out.pairs.push_back(edge_pair(s, w.edges[i], w.vertices[i]));
  }
  return out;
}

/// Support set met by a closed walk of the radial map that starts at a
/// primal-vertex node.
inline SupportSet support_from_radial_walk(const RadialMap& r,
                                           const ClosedWalk& w) {
  const int len = w.length();
  if (len % 2 != 0) throw Error("radial walk has odd length");
  int start = 0;
  while (start < len &&
         r.origin[w.vertices[start]].kind != RadialOrigin::Kind::Vertex)
    ++start;
  SupportSet out;
  for (int i = 0; i < len; i += 2) {
    const int at = (start + i) % len;
    const RadialCorner& in = r.corners[w.edges[at]];
    const RadialCorner& next = r.corners[w.edges[(at + 1) % len]];
    if (in.face != next.face) throw Error("radial walk breaks at a face node");
    out.vertices.push_back(in.vertex);
    out.pairs.push_back({in.face, in.position, next.position});
  }
  return out;
}

/// Face edges traversed by the forward route of pair p.
inline ClosedWalk pair_route(const Surface& s, const SupportPair& p) {
  const Face& f = s.face(p.face);
  ClosedWalk out;
  const int steps = detail::mod(p.to - p.from, f.length());
  for (int t = 0; t < steps; ++t) {
    const int at = detail::mod(p.from + t, f.length());
    out.vertices.push_back(f.vertex_at(at));
    out.edges.push_back(f.boundary[at].edge);
  }
  return out;
}

/// Orientation character of the curve through the support set, read off the
/// forward face routes. Faces are discs, so either route gives the same sign.
inline Sign homology_sign(const Surface& s, const SupportSet& set) {
  Sign sign = Sign::Positive;
  for (const auto& p : set.pairs)
    for (EdgeId e : pair_route(s, p).edges) sign = sign * s.graph().sign(e);
  return sign;
}

/// Inserts a common neighbour inside opposite pair i. Without `via`, the
/// smallest-id vertex among the two intermediate face positions is used.
inline SupportSet shift(const Surface& s, const SupportSet& set, int i,
                        std::optional<VertexId> via = std::nullopt) {
  if (i < 0 || i >= set.size()) throw Error("shift: pair index out of range");
  const SupportPair p = set.pairs[i];
  if (pair_kind(s, p) != PairKind::Opposite)
    throw Error("shift: pair is not opposite");
  const Face& f = s.face(p.face);

  // Candidate routes: forward and backward along the face.
  std::vector<std::vector<int>> routes{detail::forward_route(f, p.from, p.to),
                                       detail::forward_route(f, p.to, p.from)};
  std::reverse(routes[1].begin(), routes[1].end());
  if (routes[0].size() != 1 && routes[1].size() != 1)
    throw Error("shift: no common neighbour on the witnessing face");
  std::vector<int> mids;
  for (const auto& r : routes)
    if (r.size() == 1) mids.push_back(r.front());
  std::sort(mids.begin(), mids.end(), [&](int a, int b) {
    return f.vertex_at(a) != f.vertex_at(b) ? f.vertex_at(a) < f.vertex_at(b)
                                            : a < b;
  });
  int mid = mids.front();
  if (via) {
    auto it = std::find_if(mids.begin(), mids.end(),
                           [&](int q) { return f.vertex_at(q) == *via; });
    if (it == mids.end()) throw Error("shift: requested vertex is not a common neighbour");
    mid = *it;
  }
  SupportSet out;
  for (int j = 0; j < set.size(); ++j) {
    out.vertices.push_back(set.vertices[j]);
    if (j != i) {
      out.pairs.push_back(set.pairs[j]);
      continue;
    }
    out.pairs.push_back({p.face, p.from, mid});
    out.vertices.push_back(f.vertex_at(mid));
    out.pairs.push_back({p.face, mid, p.to});
  }
  return out;
}

/// Shifts every opposite pair and drops repeated consecutive vertices,
/// yielding a closed walk of the same parity. Faces longer than four are
/// routed the short way, so the parity claim needs a quadrangulation.
inline ClosedWalk to_closed_walk(const Surface& s, const SupportSet& set) {
  if (!is_valid_support(s, set)) throw Error("to_closed_walk: invalid support set");
  ClosedWalk w;
  for (int i = 0; i < set.size(); ++i) {
    const SupportPair& p = set.pairs[i];
    if (pair_kind(s, p) == PairKind::Same) continue;
    const Face& f = s.face(p.face);
    const int len = f.length();
    const int fwd = detail::mod(p.to - p.from, len);
    // Opposite pairs go through the smaller-id common neighbour, matching shift.
    bool forward = fwd < len - fwd;
    if (fwd == len - fwd)
      forward = f.vertex_at(p.from + 1) <= f.vertex_at(p.from - 1);
    ClosedWalk part;
    if (forward) {
      part = pair_route(s, p);
    } else {
      for (int t = 0; t < len - fwd; ++t) {
        part.vertices.push_back(f.vertex_at(p.from - t));
        part.edges.push_back(f.boundary[detail::mod(p.from - t - 1, len)].edge);
      }
    }
    w.vertices.insert(w.vertices.end(), part.vertices.begin(), part.vertices.end());
    w.edges.insert(w.edges.end(), part.edges.begin(), part.edges.end());
  }
  return w;
}

/// Parity of the order, cross-checked against the homology of the support
/// set on non-bipartite quadrangulations.
inline bool is_odd(const Surface& s, const SupportSet& set) {
  const bool odd = parity_odd(s, set);
  bool quad = true;
  for (const auto& f : s.faces()) quad = quad && f.length() == 4;
  if (quad && !is_bipartite(s.graph()).bipartite &&
      odd != (homology_sign(s, set) == Sign::Negative))
    throw Error("is_odd: parity disagrees with homology");
  return odd;
}

namespace detail {

inline SupportSet arc(const SupportSet& set, int from, int to) {
  // Vertices from..to-1 (circular) with their outgoing pairs.
  SupportSet out;
  const int k = set.size();
  for (int i = from; i != to || out.vertices.empty(); i = (i + 1) % k) {
    out.vertices.push_back(set.vertices[i]);
    out.pairs.push_back(set.pairs[i]);
    if ((i + 1) % k == to) break;
  }
  return out;
}

inline std::optional<SupportPair> shared_face(const Surface& s, VertexId x,
                                              VertexId y) {
  std::optional<SupportPair> best;
  for (const auto& cx : s.corners_at(x))
    for (const auto& cy : s.corners_at(y)) {
      if (cx.face != cy.face) continue;
      const SupportPair p{cx.face, cx.position, cy.position};
      if (!best || std::tie(p.face, p.from, p.to) <
                       std::tie(best->face, best->from, best->to))
        best = p;
    }
  return best;
}

}  // namespace detail

/// Reduces an odd support set to one with pairwise distinct vertices in which
/// only consecutive vertices share a face, without raising the order:
///  - a repeated vertex splits the circle in two, and the odd half is kept;
///  - a consecutive pair that is opposite on its face but also joined by an
///    edge yields the two-vertex set closed by that edge (order 1);
///  - a shared face between non-consecutive vertices splits the circle at
///    that chord, keeping the odd half.
/// Exactly one half is odd each time since the orders add up (plus two for an
/// adjacent chord, which cannot hand the odd half a larger order).
inline SupportSet reduce_support(const Surface& s, SupportSet set) {
  if (!is_valid_support(s, set)) throw Error("reduce_support: invalid support set");
  if (!is_odd(s, set)) throw Error("reduce_support: support set is even");
  const EmbeddedGraph& g = s.graph();

  auto pick_odd = [&](SupportSet a, SupportSet b) {
    const bool ao = parity_odd(s, a), bo = parity_odd(s, b);
    if (ao == bo) throw Error("reduce_support: split halves share parity");
    return ao ? a : b;
  };

  for (;;) {
    const int k = set.size();
    // Drop same-position pairs (a vertex listed twice in a row).
    bool changed = false;
    for (int i = 0; i < k && set.size() > 1; ++i)
      if (pair_kind(s, set.pairs[i]) == PairKind::Same) {
        set.vertices.erase(set.vertices.begin() + i);
        set.pairs.erase(set.pairs.begin() + i);
        changed = true;
        break;
      }
    if (changed) continue;

    // Repeated vertex.
    for (int i = 0; i < k && !changed; ++i)
      for (int j = i + 1; j < k && !changed; ++j)
        if (set.vertices[i] == set.vertices[j]) {
          set = pick_odd(detail::arc(set, i, j), detail::arc(set, j, i));
          changed = true;
        }
    if (changed) continue;

    // Opposite pair also joined by an edge.
    for (int i = 0; i < k && k > 2 && !changed; ++i) {
      if (pair_kind(s, set.pairs[i]) != PairKind::Opposite) continue;
      const VertexId x = set.vertices[i], y = set.vertices[(i + 1) % k];
      for (DartId d : g.rotation(y)) {
        if (g.head(d) != x || g.edge(edge_of(d)).is_loop()) continue;
        SupportSet two;
        two.vertices = {x, y};
        two.pairs = {set.pairs[i], edge_pair(s, edge_of(d), y)};
        if (!parity_odd(s, two)) continue;
        set = two;
        changed = true;
        break;
      }
    }
    if (changed) continue;

    // Chord between non-consecutive vertices.
    for (int i = 0; i < k && !changed; ++i)
      for (int j = i + 2; j < k && !changed; ++j) {
        if (i == 0 && j == k - 1) continue;
        const auto chord =
            detail::shared_face(s, set.vertices[i], set.vertices[j]);
        if (!chord) continue;
        SupportSet a = detail::arc(set, i, j);  // v_i .. v_{j-1}
        a.vertices.push_back(set.vertices[j]);
        a.pairs.push_back({chord->face, chord->to, chord->from});
        SupportSet b = detail::arc(set, j, i);  // v_j .. v_{i-1}
        b.vertices.push_back(set.vertices[i]);
        b.pairs.push_back(*chord);
        set = pick_odd(std::move(a), std::move(b));
        changed = true;
      }
    if (!changed) return set;
  }
}

/// Machine-checkable conditions on a reduced support set relative to its
/// source.
struct ReductionCheck {
  bool valid = false;
  bool odd = false;
  bool order_not_larger = false;
  bool distinct = false;
  bool faces_only_consecutive = false;

  bool ok() const {
    return valid && odd && order_not_larger && distinct && faces_only_consecutive;
  }
};

inline ReductionCheck check_reduction(const Surface& s, const SupportSet& source,
                                      const SupportSet& reduced) {
  ReductionCheck c;
  c.valid = is_valid_support(s, reduced);
  if (!c.valid) return c;
  c.odd = is_odd(s, reduced);
  c.order_not_larger = order(s, reduced) <= order(s, source);
  std::vector<VertexId> vs = reduced.vertices;
  std::sort(vs.begin(), vs.end());
  c.distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
  c.faces_only_consecutive = true;
  const int k = reduced.size();
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (detail::shared_face(s, reduced.vertices[i], reduced.vertices[j]))
        c.faces_only_consecutive = false;
    }
  return c;
}

/// Shortens an odd closed walk to an odd cycle on a subset of its vertices by
/// repeatedly splitting at a repeated vertex and keeping the odd part.
inline Cycle extract_odd_cycle(const EmbeddedGraph& g, ClosedWalk w) {
  if (!w.odd()) throw Error("extract_odd_cycle: walk is even");
  if (!is_closed_walk(g.abstract_graph(), w))
    throw Error("extract_odd_cycle: not a closed walk of the graph");
  for (;;) {
    const int k = w.length();
    int a = -1, b = -1;
    for (int i = 0; i < k && a == -1; ++i)
      for (int j = i + 1; j < k; ++j)
        if (w.vertices[i] == w.vertices[j]) {
          a = i;
          b = j;
          break;
        }
    if (a == -1) break;
    ClosedWalk inner, outer;
    for (int i = a; i < b; ++i) {
      inner.vertices.push_back(w.vertices[i]);
      inner.edges.push_back(w.edges[i]);
    }
    for (int i = b; i != a; i = (i + 1) % k) {
      outer.vertices.push_back(w.vertices[i]);
      outer.edges.push_back(w.edges[i]);
    }
    w = inner.odd() ? std::move(inner) : std::move(outer);
  }
  Cycle c;
  c.vertices = std::move(w.vertices);
  c.edges = std::move(w.edges);
  c.contractible = sign_product(g, c) == Sign::Positive;
  return c;
}

}  // namespace projwidth
