#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "projwidth/bounds.hpp"
#include "projwidth/minor.hpp"
#include "projwidth/support.hpp"

namespace projwidth {

enum class CertificateKind { OddCycle, FaceWidth, SingleEdge };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OddCycle: return "odd-cycle";
    case CertificateKind::FaceWidth: return "face-width";
    case CertificateKind::SingleEdge: return "single-edge";
  }
  return "?";
}

/// Odd cycle transversal together with the facts that justify it.
struct TransversalCertificate {
  CertificateKind kind = CertificateKind::FaceWidth;
  std::vector<VertexId> vertices;  // sorted, distinct
  std::vector<std::pair<VertexId, VertexId>> induced_edges;
  bool remainder_bipartite = false;
  SurdBound size_bound;

  int size() const { return static_cast<int>(vertices.size()); }
  int induced_edge_count() const { return static_cast<int>(induced_edges.size()); }
  bool within_bound() const { return size_bound.admits(size()); }
};

inline SurdBound bound_for(CertificateKind kind, const Graph& g) {
  switch (kind) {
    case CertificateKind::OddCycle: return edge_width_bound(g.num_vertices());
    case CertificateKind::FaceWidth: return face_width_bound(g.num_vertices());
    case CertificateKind::SingleEdge:
      return single_edge_bound(g.max_degree(), g.num_vertices());
  }
  throw Error("unknown certificate kind");
}

/// Builds a certificate for T, recomputing every claim from the graph.
inline TransversalCertificate certify(const Graph& g, std::vector<VertexId> t,
                                      CertificateKind kind) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  TransversalCertificate c;
  c.kind = kind;
  c.vertices = t;
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : t) {
    if (v < 0 || v >= g.num_vertices()) throw Error("certify: unknown vertex");
    in[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) c.induced_edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(c.induced_edges.begin(), c.induced_edges.end());
  c.remainder_bipartite = is_bipartite(g.without(in)).bipartite;
  c.size_bound = bound_for(kind, g);
  return c;
}

namespace detail {

inline void require_nonbipartite_quadrangulation(const Surface& s,
                                                 const char* who) {
  const ValidationReport r = validate(s);
  if (!r.is_quadrangulation)
    throw Error(std::string(who) + ": not a projective quadrangulation");
  if (r.is_bipartite_graph) throw Error(std::string(who) + ": bipartite input");
}

// A shortest non-contractible dual cycle read as the faces it visits. side[i]
// is the primal flag of the dual dart leaving faces[i] across edges[i].
struct DualStrip {
  std::vector<int> faces;
  std::vector<EdgeId> edges;
  std::vector<FlagId> side;
  int length() const { return static_cast<int>(faces.size()); }
};

inline DualStrip dual_strip(const Surface& s) {
  const EmbeddedGraph d = dual(s);
  const EdgeWidthResult ew = edge_width(d);
  if (!ew.length.finite()) throw Error("dual has no non-contractible cycle");
  DualStrip strip;
  const auto& c = ew.witness;
  const int k = c.length();
  for (int i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    const int end = d.edge(e).u == c.vertices[i] ? 0 : 1;
    const FlagId z = primal_flag_of_dual_dart(dart_of(e, end));
    if (s.face_of_flag(z) != c.vertices[i])
      throw Error("dual_strip: dual dart does not sit on its face");
    strip.faces.push_back(c.vertices[i]);
    strip.edges.push_back(e);
    strip.side.push_back(z);
  }
  return strip;
}

inline VertexId flag_vertex(const Surface& s, FlagId x) {
  return s.graph().tail(flag_dart(x));
}

// Steps along face f from position `from` to `to` the short way; ties go
// through the smaller vertex at the first step. Returns the positions visited
// after `from`.
inline std::vector<int> face_path(const Face& f, int from, int to) {
  const int len = f.length();
  const int fwd = mod(to - from, len);
  const int back = len - fwd;
  bool forward = fwd < back;
  if (fwd == back) forward = f.vertex_at(from + 1) <= f.vertex_at(from - 1);
  std::vector<int> out;
  const int steps = forward ? fwd : back;
  for (int t = 1; t <= steps; ++t) out.push_back(mod(from + (forward ? t : -t), len));
  return out;
}

// The end flag of e_i (a flag of the edge side in `targets`) reached from
// corner c of face f. A target at c itself always wins; otherwise the nearest
// (or, with prefer_far, the farthest) one, then the smaller vertex.
inline FlagId nearest_target(const Surface& s, int f, int c,
                             const std::vector<FlagId>& targets,
                             bool prefer_far = false) {
  const int len = s.face(f).length();
  FlagId best = -1;
  int best_key = 0;
  VertexId best_vertex = 0;
  for (FlagId t : targets) {
    const int p = s.corner_position(t);
    const int dist = std::min(mod(p - c, len), mod(c - p, len));
    const int key = dist == 0 ? -len : (prefer_far ? -dist : dist);
    const VertexId v = flag_vertex(s, t);
    if (best == -1 || key < best_key || (key == best_key && v < best_vertex)) {
      best = t;
      best_key = key;
      best_vertex = v;
    }
  }
  return best;
}

}  // namespace detail

struct ShortOddCycle {
  Cycle cycle;              // returned cycle, within the length bound
  Cycle constructed;        // cycle extracted from the dual-strip walk
  ClosedWalk walk;          // primal walk along the dual cycle
  int dual_width = 0;       // length of that dual cycle
  int edge_width = 0;
};

/// Odd cycle of length at most (1 + sqrt(8n - 7)) / 2.
///
/// From a shortest non-contractible dual cycle, pick an end of each crossed
/// edge (keeping the previous vertex when it is an end, stepping along the
/// face otherwise) and shorten the closed walk to a cycle of length at most
/// l* + 1. That length is only bounded by 1 + (2n - 2) / l, so the returned
/// cycle is the shorter of it and a shortest odd cycle, whose length l meets
/// the bound because l <= l* + 1 and l * l* <= m.
inline ShortOddCycle short_odd_cycle(const Surface& s) {
  detail::require_nonbipartite_quadrangulation(s, "short_odd_cycle");
  const EmbeddedGraph& g = s.graph();
  const FlagSystem& fs = s.flags();
  ShortOddCycle out;
  const EdgeWidthResult ew = edge_width(g);
  out.edge_width = ew.length.value();
  const detail::DualStrip strip = detail::dual_strip(s);
  const int k = strip.length();
  out.dual_width = k;
  if (static_cast<std::int64_t>(out.edge_width) * k > g.num_edges())
    throw Error("short_odd_cycle: edge-width times dual edge-width exceeds m");

  // Start at the smaller-id end of the first crossed edge.
  const FlagId z0 = strip.side[0];
  const FlagId start =
      detail::flag_vertex(s, fs.vertex_switch[z0]) < detail::flag_vertex(s, z0)
          ? fs.vertex_switch[z0]
          : z0;

  ClosedWalk& w = out.walk;
  VertexId cur = detail::flag_vertex(s, start);
  FlagId x = start;
  for (int i = 1; i <= k; ++i) {
    const FlagId y = fs.face_switch[x];
    const int f = strip.faces[i % k];
    if (s.face_of_flag(y) != f) throw Error("short_odd_cycle: strip is broken");
    const int c = s.corner_position(y);
    std::vector<FlagId> targets;
    if (i < k)
      targets = {strip.side[i], fs.vertex_switch[strip.side[i]]};
    else
      targets = {start};
    const FlagId t = detail::nearest_target(s, f, c, targets);
    const Face& face = s.face(f);
    int at = c;
    for (int p : detail::face_path(face, c, s.corner_position(t))) {
      w.vertices.push_back(cur);
      w.edges.push_back(edge_of(s.face_edge_dart(f, at, p)));
      cur = face.vertex_at(p);
      at = p;
    }
    x = t;
  }
  if (cur != detail::flag_vertex(s, start))
    throw Error("short_odd_cycle: walk does not close");
  if (sign_product(g, w) != Sign::Negative)
    throw Error("short_odd_cycle: walk is contractible");
  if (w.length() > k + 1) throw Error("short_odd_cycle: walk longer than dual width + 1");
  out.constructed = extract_odd_cycle(g, w);
  if (out.constructed.length() < out.edge_width)
    throw Error("short_odd_cycle: cycle shorter than the edge-width");
  out.cycle = out.constructed.length() <= out.edge_width ? out.constructed : ew.witness;
  if (!edge_width_bound(g.num_vertices()).admits(out.cycle.length()))
    throw Error("short_odd_cycle: length bound violated");
  return out;
}

/// Transversal formed by the vertices of a short odd cycle: a projective
/// quadrangulation has no two disjoint odd cycles.
inline TransversalCertificate odd_cycle_transversal(const Surface& s) {
  const ShortOddCycle c = short_odd_cycle(s);
  auto cert = certify(s.graph().abstract_graph(), c.cycle.vertices,
                      CertificateKind::OddCycle);
  if (!cert.remainder_bipartite)
    throw Error("odd_cycle_transversal: remainder is not bipartite");
  return cert;
}

/// Transversal from the face-width witness, of size exactly the face-width.
inline TransversalCertificate facewidth_transversal(const Surface& s) {
  if (is_bipartite(s.graph()).bipartite)
    throw Error("facewidth_transversal: bipartite input");
  const FaceWidthResult fw = face_width(s);
  if (!fw.width.finite()) throw Error("facewidth_transversal: face-width 0");
  const SupportSet reduced = reduce_support(s, fw.witness);
  auto cert = certify(s.graph().abstract_graph(), reduced.vertices,
                      CertificateKind::FaceWidth);
  if (!cert.remainder_bipartite)
    throw Error("facewidth_transversal: remainder is not bipartite");
  if (cert.size() != fw.width.value())
    throw Error("facewidth_transversal: witness size differs from face-width");
  return cert;
}

namespace detail {

// Corner pair between consecutive darts d and succ(d) at their common tail.
inline SupportPair fan_pair(const Surface& s, DartId d) {
  const FlagSystem& fs = s.flags();
  const FlagId x = flag_of(d, 1);
  const FlagId y = fs.edge_switch[x];
  return {s.face_of_flag(x), s.corner_position(fs.vertex_switch[x]),
          s.corner_position(fs.vertex_switch[y])};
}

}  // namespace detail

/// Replaces the stretch between each two consecutive adjacent pairs by fans of
/// neighbours around the interior vertices, leaving a single adjacent pair.
/// Each fan sweeps in rotation order from the dart toward the previous support
/// vertex (or shared neighbour) and stops at the first dart leading to a
/// vertex of the next pair's face beside the vertex.
inline SupportSet fan_out(const Surface& s, const SupportSet& set) {
  const EmbeddedGraph& g = s.graph();
  const int k = set.size();
  std::vector<int> adj;
  for (int i = 0; i < k; ++i)
    if (pair_kind(s, set.pairs[i]) == PairKind::Adjacent) adj.push_back(i);
  if (adj.size() % 2 == 0) throw Error("fan_out: support set is even");

  std::vector<SupportPair> pairs;
  int next_segment = 0;
  for (int idx = 0; idx < k;) {
    if (next_segment + 1 >= static_cast<int>(adj.size()) ||
        idx != adj[next_segment]) {
      pairs.push_back(set.pairs[idx]);
      ++idx;
      continue;
    }
    const int i = adj[next_segment], j = adj[next_segment + 1];
    next_segment += 2;
    // Dart at v_{i+1} toward v_i.
    const SupportPair& first = set.pairs[i];
    DartId d = s.face_edge_dart(first.face, first.to, first.from);
    for (int t = i + 1; t <= j; ++t) {
      const SupportPair& out_pair = set.pairs[t];
      const Face& f = s.face(out_pair.face);
      std::vector<std::pair<DartId, int>> stops;  // dart, position on f
      if (t == j) {
        stops.push_back({s.face_edge_dart(out_pair.face, out_pair.from, out_pair.to),
                         out_pair.to});
      } else {
        for (int side : {1, -1}) {
          const int p = detail::mod(out_pair.from + side, f.length());
          stops.push_back({s.face_edge_dart(out_pair.face, out_pair.from, p), p});
        }
      }
      int stop = -1;
      for (int guard = 0; guard <= g.degree(set.vertices[t]); ++guard) {
        for (const auto& [sd, p] : stops)
          if (sd == d) stop = p;
        if (stop != -1) break;
        pairs.push_back(detail::fan_pair(s, d));
        d = g.succ(d);
      }
      if (stop == -1) throw Error("fan_out: sweep missed the next face");
      if (t < j) {
        // Continue from the shared neighbour at `stop` on f, seen from v_{t+1}.
        d = s.face_edge_dart(out_pair.face, out_pair.to, stop);
        if (f.vertex_at(out_pair.to) != set.vertices[(t + 1) % k])
          throw Error("fan_out: pair bookkeeping");
      }
    }
    idx = j + 1;
  }
  SupportSet out;
  out.pairs = std::move(pairs);
  for (const auto& p : out.pairs) out.vertices.push_back(s.face(p.face).vertex_at(p.from));
  if (!is_valid_support(s, out)) throw Error("fan_out: produced an invalid support set");
  if (order(s, out) != 1) throw Error("fan_out: order is not 1");
  if (homology_sign(s, out) != homology_sign(s, set))
    throw Error("fan_out: homology changed");
  return out;
}

struct SingleEdgeResult {
  TransversalCertificate certificate;
  SupportSet support;    // reduced support set of order 1
  bool cycle_branch = false;
};

inline SingleEdgeResult single_edge_from_support(const Surface& s,
                                                 const SupportSet& set) {
  if (!is_odd(s, set)) throw Error("single_edge_transversal: support set is even");
  SingleEdgeResult r;
  r.support = reduce_support(s, fan_out(s, set));
  r.certificate = certify(s.graph().abstract_graph(), r.support.vertices,
                          CertificateKind::SingleEdge);
  if (r.certificate.induced_edge_count() != 1)
    throw Error("single_edge_transversal: transversal induces " +
                std::to_string(r.certificate.induced_edge_count()) + " edges");
  if (!r.certificate.remainder_bipartite)
    throw Error("single_edge_transversal: remainder is not bipartite");
  return r;
}

/// Support set along a shortest dual cycle: keep the previous vertex when it
/// ends the next crossed edge, otherwise jump to the opposite corner.
inline SupportSet dual_strip_support(const Surface& s) {
  const FlagSystem& fs = s.flags();
  const detail::DualStrip strip = detail::dual_strip(s);
  const int k = strip.length();
  const FlagId z0 = strip.side[0];
  const FlagId start =
      detail::flag_vertex(s, fs.vertex_switch[z0]) < detail::flag_vertex(s, z0)
          ? fs.vertex_switch[z0]
          : z0;
  SupportSet set;
  set.vertices.push_back(detail::flag_vertex(s, start));
  FlagId x = start;
  for (int i = 1; i <= k; ++i) {
    const FlagId y = fs.face_switch[x];
    const int f = strip.faces[i % k];
    const int c = s.corner_position(y);
    std::vector<FlagId> targets;
    if (i < k)
      targets = {strip.side[i], fs.vertex_switch[strip.side[i]]};
    else
      targets = {start};
    const FlagId t = detail::nearest_target(s, f, c, targets, true);
    if (s.corner_position(t) != c) {
      set.pairs.push_back({f, c, s.corner_position(t)});
      set.vertices.push_back(detail::flag_vertex(s, t));
    }
    x = t;
  }
  if (set.vertices.size() < 2 || set.vertices.back() != set.vertices.front())
    throw Error("dual_strip_support: strip does not close");
  set.vertices.pop_back();
  return set;
}

/// Transversal of size at most sqrt(2 * Delta * n) inducing exactly one edge.
/// Short edge-width (l^2 * Delta <= 2n) fans out a shortest odd cycle;
/// otherwise the support set comes from a shortest dual cycle.
inline SingleEdgeResult single_edge_transversal(const Surface& s) {
  detail::require_nonbipartite_quadrangulation(s, "single_edge_transversal");
  const EmbeddedGraph& g = s.graph();
  const EdgeWidthResult ew = edge_width(g);
  const std::int64_t l = ew.length.value();
  const std::int64_t delta = g.max_degree();
  const std::int64_t n = g.num_vertices();
  if (l * l * delta <= 2 * n) {
    SingleEdgeResult r = single_edge_from_support(s, support_from_walk(s, ew.witness));
    r.cycle_branch = true;
    return r;
  }
  const SupportSet strip = dual_strip_support(s);
  if (!is_odd(s, strip)) throw Error("single_edge_transversal: strip support set is even");
  SingleEdgeResult r;
  r.support = reduce_support(s, strip);
  r.certificate = certify(g.abstract_graph(), r.support.vertices,
                          CertificateKind::SingleEdge);
  if (r.certificate.induced_edge_count() != 1)
    throw Error("single_edge_transversal: transversal induces " +
                std::to_string(r.certificate.induced_edge_count()) + " edges");
  if (!r.certificate.remainder_bipartite)
    throw Error("single_edge_transversal: remainder is not bipartite");
  return r;
}

struct MinimizeResult {
  EmbeddedGraph graph;
  int face_width = 0;
  int deletions = 0;
  int contractions = 0;

  /// Edge count of a minimal scheme of face-width k.
  int expected_edges() const { return 2 * face_width * face_width - face_width; }
};

/// Deletes or contracts edges while the face-width stays at its initial value.
/// Each pass scans edges in id order (or a shuffled order when seeded), trying
/// deletion before contraction, and restarts after every accepted edit. After
/// a deletion only the component carrying a non-contractible cycle is kept.
inline MinimizeResult minimize_facewidth(const EmbeddedGraph& g,
                                         std::optional<std::uint64_t> seed = std::nullopt) {
  const FaceWidthResult start = face_width(g);
  if (!start.width.finite() || start.width.value() == 0)
    throw Error("face-width 0");
  const int k = start.width.value();
  std::mt19937_64 rng(seed.value_or(0));
  MinimizeResult r{g, k, 0, 0};

  auto keeps_width = [k](const EmbeddedGraph& h) {
    if (h.num_edges() == 0) return false;
    const FaceWidthResult fw = face_width(h);
    return fw.width.finite() && fw.width.value() == k;
  };

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<EdgeId> ids(r.graph.num_edges());
    std::iota(ids.begin(), ids.end(), 0);
    if (seed) std::shuffle(ids.begin(), ids.end(), rng);
    for (EdgeId e : ids) {
      EmbeddedGraph h = keep_nonorientable_component(delete_edge(r.graph, e));
      if (keeps_width(h)) {
        r.graph = std::move(h);
        ++r.deletions;
        changed = true;
        break;
      }
      if (r.graph.edge(e).is_loop()) continue;
      h = contract_edge(r.graph, e);
      if (keeps_width(h)) {
        r.graph = std::move(h);
        ++r.contractions;
        changed = true;
        break;
      }
    }
  }
  const std::string base = g.label().empty() ? "scheme" : g.label();
  r.graph = r.graph.with_label("minor of " + base);
  return r;
}

}  // namespace projwidth
