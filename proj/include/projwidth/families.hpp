#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "projwidth/topology.hpp"

namespace projwidth {

enum class Family { Grid, Mycielski, Fuzz };

struct FamilySpec {
  Family family = Family::Grid;
  int k = 2;            // grid size, or Mycielski level count
  int base_half = 0;    // Mycielski base cycle C_{2t+1}; 0 means t = k
  std::uint64_t seed = 0;
  int steps = 0;        // fuzz vertex splits
};

namespace detail {

// Builds a scheme from per-vertex neighbour lists given in rotation order,
// each entry naming the edge by a key shared by both ends.
struct SchemeBuilder {
  explicit SchemeBuilder(int n) : rotation(n) {}

  EdgeId edge(VertexId u, VertexId v, Sign sign) {
    edges.push_back({u, v, sign});
    return static_cast<EdgeId>(edges.size()) - 1;
  }

  EmbeddedGraph build(std::string label) const {
    return canonicalize(EmbeddedGraph::from_edge_rotations(
        static_cast<int>(rotation.size()), edges, rotation, std::move(label)));
  }

  std::vector<EmbeddedEdge> edges;
  std::vector<std::vector<EdgeId>> rotation;
};

}  // namespace detail

/// The grid G_k: P_k x P_k plus the antipodal edges (0,j)-(k-1,k-1-j) and
/// (j,0)-(k-1-j,k-1), drawn in a disk whose boundary is antipodally
/// identified. Vertex (i,j) (column i, row j) has id i + k*j.
inline EmbeddedGraph grid_quadrangulation(int k) {
  if (k < 2) throw Error("grid_quadrangulation: k must be at least 2");
  const int n = k * k;
  auto id = [k](int i, int j) { return i + k * j; };

  // Directions in counterclockwise order.
  enum Dir { E, NE, N, NW, W, SW, S, SE, kDirs };
  std::vector<std::array<EdgeId, kDirs>> slot(n);
  for (auto& s : slot) s.fill(-1);
  detail::SchemeBuilder b(n);

  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) {
      if (i + 1 < k) {
        const EdgeId e = b.edge(id(i, j), id(i + 1, j), Sign::Positive);
        slot[id(i, j)][E] = slot[id(i + 1, j)][W] = e;
      }
      if (j + 1 < k) {
        const EdgeId e = b.edge(id(i, j), id(i, j + 1), Sign::Positive);
        slot[id(i, j)][N] = slot[id(i, j + 1)][S] = e;
      }
    }
  // Edges through the crosscap. Corner pairs arise from both rules and are
  // drawn once, diagonally.
  const int last = k - 1;
  {
    const EdgeId e = b.edge(id(0, 0), id(last, last), Sign::Negative);
    slot[id(0, 0)][SW] = slot[id(last, last)][NE] = e;
    const EdgeId f = b.edge(id(0, last), id(last, 0), Sign::Negative);
    slot[id(0, last)][NW] = slot[id(last, 0)][SE] = f;
  }
  for (int j = 1; j < last; ++j) {
    const EdgeId e = b.edge(id(0, j), id(last, last - j), Sign::Negative);
    slot[id(0, j)][W] = slot[id(last, last - j)][E] = e;
    const EdgeId f = b.edge(id(j, 0), id(last - j, last), Sign::Negative);
    slot[id(j, 0)][S] = slot[id(last - j, last)][N] = f;
  }
  for (VertexId v = 0; v < n; ++v)
    for (EdgeId e : slot[v])
      if (e != -1) b.rotation[v].push_back(e);
  return b.build("grid k=" + std::to_string(k));
}

struct MycielskiGraph {
  Graph graph;
  std::optional<EmbeddedGraph> embedding;
};

/// Generalized Mycielski graph over C_{2t+1} with `levels` levels: vertices
/// (i,j) for level i < levels and j mod 2t+1 (id i*(2t+1)+j) plus the apex
/// (last id). Level-0 cycle edges, cross edges (i+1,j)-(i,j+-1), apex joined
/// to the top level.
///
/// The optional embedding places the apex at the centre of a disk, the levels
/// on concentric circles, and the level-0 cycle edges across the antipodally
/// identified boundary. It needs levels >= 2 and is validated before return.
inline MycielskiGraph generalized_mycielski(int levels, int t,
                                            bool with_embedding = true) {
  if (levels < 1 || t < 1)
    throw Error("generalized_mycielski: need levels >= 1 and t >= 1");
  const int c = 2 * t + 1;
  const int n = levels * c + 1;
  const VertexId apex = n - 1;
  auto id = [c](int i, int j) { return i * c + ((j % c) + c) % c; };

  MycielskiGraph out{Graph(n), std::nullopt};
  for (int j = 0; j < c; ++j) out.graph.add_edge(id(0, j), id(0, j + 1));
  for (int i = 0; i + 1 < levels; ++i)
    for (int j = 0; j < c; ++j) {
      out.graph.add_edge(id(i + 1, j), id(i, j - 1));
      out.graph.add_edge(id(i + 1, j), id(i, j + 1));
    }
  for (int j = 0; j < c; ++j) out.graph.add_edge(id(levels - 1, j), apex);
  if (!with_embedding || levels < 2) return out;

  // Angular slot 0..2c-1 of each vertex: the lift with slot parity = level
  // parity; slot J of level i represents (i, J mod c).
  auto slot_of = [&](int i, int j) {
    for (int J = 0; J < 2 * c; ++J)
      if (J % c == j && J % 2 == i % 2) return J;
    return -1;
  };
  detail::SchemeBuilder b(n);
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_at;
  auto get = [&](VertexId u, VertexId v, Sign s) {
    const auto key = std::pair(std::min(u, v), std::max(u, v));
    auto it = edge_at.find(key);
    if (it != edge_at.end()) return it->second;
    const EdgeId e = b.edge(u, v, s);
    edge_at.emplace(key, e);
    return e;
  };
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < c; ++j) {
      const VertexId v = id(i, j);
      const int J = slot_of(i, j);
      auto at = [&](int level, int slot) { return id(level, slot % c); };
      auto& rot = b.rotation[v];
      // Outward neighbours are at level i-1, inward at level i+1.
      const VertexId out_ccw = i > 0 ? at(i - 1, J + 1) : id(0, j + 1);
      const VertexId out_cw = i > 0 ? at(i - 1, J + 2 * c - 1) : id(0, j - 1);
      const Sign out_sign = i > 0 ? Sign::Positive : Sign::Negative;
      rot.push_back(get(v, out_ccw, out_sign));
      if (i + 1 < levels) {
        rot.push_back(get(v, at(i + 1, J + 1), Sign::Positive));
        rot.push_back(get(v, at(i + 1, J + 2 * c - 1), Sign::Positive));
      } else {
        rot.push_back(get(v, apex, Sign::Positive));
      }
      rot.push_back(get(v, out_cw, out_sign));
    }
  for (int J = 0; J < 2 * c; ++J)
    if (J % 2 == (levels - 1) % 2)
      b.rotation[apex].push_back(get(apex, id(levels - 1, J % c), Sign::Positive));

  EmbeddedGraph g = b.build("mycielski levels=" + std::to_string(levels) +
                            " t=" + std::to_string(t));
  if (!validate(g).is_quadrangulation)
    throw Error("generalized_mycielski: embedding failed validation");
  out.embedding = std::move(g);
  return out;
}

inline MycielskiGraph generalized_mycielski(int k) {
  if (k < 2) throw Error("generalized_mycielski: k must be at least 2");
  return generalized_mycielski(k, k);
}

namespace detail {

// Splits v into two vertices: v keeps darts [p..q] of its rotation, a new
// vertex takes the rest plus fresh edges to the neighbours at p and q, which
// closes a new quadrilateral face between the two halves.
inline EmbeddedGraph split_vertex(const EmbeddedGraph& g, VertexId v, int p,
                                  int q) {
  const auto rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  const int n = g.num_vertices();
  const VertexId fresh = n;
  std::vector<EmbeddedEdge> edges = g.edges();
  std::vector<std::vector<DartId>> rotations = g.rotations();
  rotations.emplace_back();

  const DartId dp = rot[p], dq = rot[q];
  std::vector<DartId> keep, moved;
  for (int i = p;; i = (i + 1) % deg) {
    keep.push_back(rot[i]);
    if (i == q) break;
  }
  for (int i = (q + 1) % deg; i != p; i = (i + 1) % deg) moved.push_back(rot[i]);
  for (DartId d : moved) {
    auto& e = edges[edge_of(d)];
    (end_of(d) == 0 ? e.u : e.v) = fresh;
  }

  auto add_edge_to = [&](DartId toward, bool before) {
    const VertexId w = g.head(toward);
    const Sign s = g.sign(edge_of(toward));
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({fresh, w, s});
    auto& wr = rotations[w];
    const DartId at_w = opposite_dart(toward);
    const auto pos = std::find(wr.begin(), wr.end(), at_w) - wr.begin();
    // The fresh vertex sits on the far side of `toward` as seen from w; which
    // rotation neighbour that is depends on the relative orientation.
    const bool insert_before = (s == Sign::Positive) == before;
    wr.insert(wr.begin() + pos + (insert_before ? 0 : 1), dart_of(e, 1));
    return dart_of(e, 0);
  };
  const DartId nq = add_edge_to(dq, true);
  const DartId np = add_edge_to(dp, false);

  rotations[v] = keep;
  auto& fr = rotations[fresh];
  fr.push_back(nq);
  fr.insert(fr.end(), moved.begin(), moved.end());
  fr.push_back(np);
  return EmbeddedGraph(n + 1, std::move(edges), std::move(rotations), g.label());
}

}  // namespace detail

/// Applies `steps` random vertex splits. Each split adds one vertex, two edges
/// and one quadrilateral face; every intermediate graph is validated. Split
/// targets of degree < 4 are resampled within a bounded budget.
inline EmbeddedGraph fuzz_quadrangulation(const EmbeddedGraph& base, int steps,
                                          std::uint64_t seed) {
  if (steps < 0) throw Error("fuzz_quadrangulation: negative step count");
  if (steps == 0) return base;
  {
    const auto r = validate(base);
    if (!r.is_quadrangulation || r.is_bipartite_graph)
      throw Error("fuzz_quadrangulation: base is not a non-bipartite quadrangulation");
  }
  std::mt19937_64 rng(seed);
  auto below = [&rng](int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
  };
  EmbeddedGraph g = base;
  for (int step = 0; step < steps; ++step) {
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      const VertexId v = below(g.num_vertices());
      const int deg = g.degree(v);
      if (deg < 4) continue;
      const int p = below(deg);
      const int span = 2 + below(deg - 3);  // both halves keep degree >= 3
      const int q = (p + span) % deg;
      EmbeddedGraph h = detail::split_vertex(g, v, p, q);
      const auto r = validate(h);
      if (!r.is_quadrangulation || r.is_bipartite_graph || !h.is_simple())
        throw Error("fuzz_quadrangulation: split produced an invalid scheme");
      g = std::move(h);
      done = true;
    }
    if (!done) throw Error("fuzz_quadrangulation: step budget exhausted");
  }
  std::string label = base.label().empty() ? "fuzz" : base.label() + " fuzz";
  label += " steps=" + std::to_string(steps) + " seed=" + std::to_string(seed);
  return canonicalize(g).with_label(label);
}

inline EmbeddedGraph generate(const FamilySpec& spec,
                              const EmbeddedGraph* fuzz_base = nullptr) {
  switch (spec.family) {
    case Family::Grid:
      return grid_quadrangulation(spec.k);
    case Family::Mycielski: {
      const int t = spec.base_half == 0 ? spec.k : spec.base_half;
      auto m = generalized_mycielski(spec.k, t);
      if (!m.embedding) throw Error("Mycielski embedding needs levels >= 2");
      return *m.embedding;
    }
    case Family::Fuzz: {
      const EmbeddedGraph base =
          fuzz_base ? *fuzz_base : grid_quadrangulation(spec.k);
      return fuzz_quadrangulation(base, spec.steps, spec.seed);
    }
  }
  throw Error("unknown family");
}

}  // namespace projwidth
