#pragma once

// Brute-force ground truth. Everything here works on the abstract Graph and
// deliberately shares no traversal code with the embedded machinery.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "projwidth/graph.hpp"

namespace projwidth::oracle {

enum class Status { Ok, CapExceeded, BudgetExhausted };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::CapExceeded: return "cap";
    case Status::BudgetExhausted: return "budget";
  }
  return "?";
}

/// Cooperative cancellation: searches charge one step per node they expand.
class StepBudget {
 public:
  static StepBudget unlimited() { return StepBudget(); }
  explicit StepBudget(std::uint64_t steps) : limit_(steps) {}

  bool spend(std::uint64_t k = 1) {
    used_ += k;
    return !limit_ || used_ <= *limit_;
  }
  bool exhausted() const { return limit_ && used_ > *limit_; }
  std::uint64_t used() const { return used_; }

 private:
  StepBudget() = default;
  std::optional<std::uint64_t> limit_;
  std::uint64_t used_ = 0;
};

namespace detail {

/// 2-colouring of the graph restricted to vertices with removed[v] == 0.
inline bool bipartite_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.num_vertices();
  std::vector<int> colour(n, -1);
  std::vector<VertexId> stack;
  for (VertexId r = 0; r < n; ++r) {
    if (removed[r] || colour[r] != -1) continue;
    colour[r] = 0;
    stack.push_back(r);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        const VertexId w = inc.neighbor;
        if (removed[w]) continue;
        if (w == v) return false;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<int> two_colouring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> colour(n, -1);
  for (VertexId r = 0; r < n; ++r) {
    if (colour[r] != -1) continue;
    colour[r] = 0;
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (colour[inc.neighbor] == -1) {
          colour[inc.neighbor] = 1 - colour[v];
          stack.push_back(inc.neighbor);
        } else if (colour[inc.neighbor] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Shortest odd cycle

struct OddCycle {
  bool bipartite = true;
  int length = 0;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i], vertices[i+1]
};

/// Breadth-first search over (vertex, parity) states from every vertex. The
/// globally shortest odd closed walk is a cycle, since a repeated vertex would
/// split it into two shorter closed walks, one of them odd.
inline OddCycle brute_shortest_odd_cycle(const Graph& g) {
  const int n = g.num_vertices();
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(2 * static_cast<std::size_t>(n));
  std::vector<std::pair<int, EdgeId>> parent(dist.size());
  OddCycle best;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[2 * s] = 0;
    std::vector<int> queue{2 * s};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int x = queue[h];
      if (!best.bipartite && dist[x] + 1 >= best.length) break;
      if (dist[2 * s + 1] != inf) break;
      for (const auto& inc : g.incident(x / 2)) {
        const int y = 2 * inc.neighbor + (1 - x % 2);
        if (dist[y] != inf) continue;
        dist[y] = dist[x] + 1;
        parent[y] = {x, inc.edge};
        queue.push_back(y);
      }
      // Loops appear once in the incidence list but flip parity in place.
    }
    const int d = dist[2 * s + 1];
    if (d == inf || (!best.bipartite && d >= best.length)) continue;
    best.bipartite = false;
    best.length = d;
    best.vertices.clear();
    best.edges.clear();
    for (int cur = 2 * s + 1; cur != 2 * s; cur = parent[cur].first) {
      best.edges.push_back(parent[cur].second);
      best.vertices.push_back(parent[cur].first / 2);
    }
    std::reverse(best.vertices.begin(), best.vertices.end());
    std::reverse(best.edges.begin(), best.edges.end());
  }
  return best;
}

// ---------------------------------------------------------------------------
// Minimum odd cycle transversal

struct OctResult {
  Status status = Status::Ok;
  std::vector<VertexId> vertices;  // sorted; valid when status == Ok
};

/// Exact minimum OCT by exhaustive search in increasing size. For each size
/// the search branches on the vertices of an odd cycle of what remains (every
/// transversal must hit it), which enumerates a superset of the candidate
/// subsets that could possibly work.
inline OctResult brute_min_oct(const Graph& g, int cap = 6,
                               StepBudget budget = StepBudget::unlimited()) {
  const int n = g.num_vertices();
  std::vector<char> removed(n, 0);
  std::vector<VertexId> chosen;

  // Shortest odd cycle in G - removed, by parity BFS restricted to survivors.
  auto odd_cycle = [&]() -> std::vector<VertexId> {
    std::vector<int> colour(n, -1), parent(n, -1);
    for (VertexId r = 0; r < n; ++r) {
      if (removed[r] || colour[r] != -1) continue;
      colour[r] = 0;
      std::vector<VertexId> queue{r};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const VertexId v = queue[h];
        for (const auto& inc : g.incident(v)) {
          const VertexId w = inc.neighbor;
          if (removed[w]) continue;
          if (w == v) return {v};
          if (colour[w] == -1) {
            colour[w] = 1 - colour[v];
            parent[w] = v;
            queue.push_back(w);
          } else if (colour[w] == colour[v]) {
            // Tree paths from v and w back to their meeting point.
            std::vector<VertexId> a{v}, b{w};
            std::vector<char> on_a(n, 0);
            for (VertexId x = v; parent[x] != -1; x = parent[x]) {
              on_a[x] = 1;
              a.push_back(parent[x]);
            }
            on_a[a.back()] = 1;
            VertexId meet = w;
            while (!on_a[meet]) {
              meet = parent[meet];
              b.push_back(meet);
            }
            std::vector<VertexId> cyc;
            for (VertexId x : a) {
              cyc.push_back(x);
              if (x == meet) break;
            }
            b.pop_back();
            cyc.insert(cyc.end(), b.rbegin(), b.rend());
            return cyc;
          }
        }
      }
    }
    return {};
  };

  bool out_of_budget = false;
  auto search = [&](auto&& self, int left) -> bool {
    if (!budget.spend()) {
      out_of_budget = true;
      return false;
    }
    const std::vector<VertexId> cyc = odd_cycle();
    if (cyc.empty()) return true;
    if (left == 0) return false;
    for (VertexId v : cyc) {
      removed[v] = 1;
      chosen.push_back(v);
      if (self(self, left - 1)) return true;
      chosen.pop_back();
      removed[v] = 0;
      if (out_of_budget) return false;
    }
    return false;
  };

  OctResult out;
  for (int k = 0; k <= cap; ++k) {
    if (search(search, k)) {
      out.vertices = chosen;
      std::sort(out.vertices.begin(), out.vertices.end());
      return out;
    }
    if (out_of_budget) {
      out.status = Status::BudgetExhausted;
      return out;
    }
  }
  out.status = Status::CapExceeded;
  return out;
}

/// Plain check used by tests: does removing `t` leave a bipartite graph?
inline bool is_odd_cycle_transversal(const Graph& g,
                                     const std::vector<VertexId>& t) {
  std::vector<char> removed(g.num_vertices(), 0);
  for (VertexId v : t) removed[v] = 1;
  return detail::bipartite_without(g, removed);
}

// ---------------------------------------------------------------------------
// Independence number

struct IndependenceResult {
  Status status = Status::Ok;
  int alpha = 0;
  std::vector<VertexId> witness;
};

/// Branch and bound over 64-bit vertex masks. Vertices of degree <= 1 in the
/// remaining graph are taken greedily; otherwise branch on a vertex of maximum
/// degree (exclude it, or take it and drop its neighbours).
inline IndependenceResult independence_number(
    const Graph& g, int cap_n = 40, StepBudget budget = StepBudget::unlimited()) {
  using Mask = std::uint64_t;
  const int n = g.num_vertices();
  IndependenceResult out;
  if (n > cap_n || n > 64) {
    out.status = Status::CapExceeded;
    return out;
  }
  std::vector<Mask> nbr(n, 0);
  Mask all = 0;
  for (VertexId v = 0; v < n; ++v) all |= Mask(1) << v;
  for (auto [u, v] : g.edges()) {
    if (u == v) {
      all &= ~(Mask(1) << u);  // a looped vertex is never independent
      continue;
    }
    nbr[u] |= Mask(1) << v;
    nbr[v] |= Mask(1) << u;
  }
  Mask best_set = 0;
  int best = -1;
  bool stopped = false;
  auto rec = [&](auto&& self, Mask p, Mask taken, int size) -> void {
    if (stopped) return;
    if (!budget.spend()) {
      stopped = true;
      return;
    }
    // Greedy reductions.
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask q = p; q; q &= q - 1) {
        const int v = std::countr_zero(q);
        if (std::popcount(nbr[v] & p) <= 1) {
          taken |= Mask(1) << v;
          ++size;
          p &= ~(nbr[v] | (Mask(1) << v));
          changed = true;
          break;
        }
      }
    }
    if (size + std::popcount(p) <= best) return;
    if (p == 0) {
      best = size;
      best_set = taken;
      return;
    }
    int pick = -1, deg = -1;
    for (Mask q = p; q; q &= q - 1) {
      const int v = std::countr_zero(q);
      const int d = std::popcount(nbr[v] & p);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    const Mask bit = Mask(1) << pick;
    self(self, p & ~(nbr[pick] | bit), taken | bit, size + 1);
    self(self, p & ~bit, taken, size);
  };
  rec(rec, all, 0, 0);
  if (stopped) {
    out.status = Status::BudgetExhausted;
    return out;
  }
  out.alpha = best;
  for (Mask q = best_set; q; q &= q - 1)
    out.witness.push_back(std::countr_zero(q));
  return out;
}

// ---------------------------------------------------------------------------
// Colouring

inline bool is_proper_colouring(const Graph& g, const std::vector<int>& c,
                                int colours) {
  if (static_cast<int>(c.size()) != g.num_vertices()) return false;
  for (int x : c)
    if (x < 1 || x > colours) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

namespace detail {

/// DSATUR backtracking with colours 1..k. Vertices with fixed[v] != 0 start
/// coloured. Returns the colouring, or nullopt when none exists or the budget
/// runs out (the latter flagged through `stopped`).
inline std::optional<std::vector<int>> dsatur(const Graph& g, int k,
                                              std::vector<int> colour,
                                              StepBudget& budget,
                                              bool& stopped,
                                              bool symmetry_break) {
  const int n = g.num_vertices();
  for (auto [u, v] : g.edges())
    if (u == v || (colour[u] != 0 && colour[u] == colour[v]))
      return std::nullopt;
  int max_used = 0;
  for (int c : colour) max_used = std::max(max_used, c);

  auto rec = [&](auto&& self, int uncoloured, int used) -> bool {
    if (uncoloured == 0) return true;
    if (!budget.spend()) {
      stopped = true;
      return false;
    }
    int pick = -1, best_sat = -1, best_deg = -1;
    unsigned pick_mask = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (colour[v] != 0) continue;
      unsigned mask = 0;
      for (const auto& inc : g.incident(v))
        if (colour[inc.neighbor]) mask |= 1u << colour[inc.neighbor];
      const int sat = std::popcount(mask);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g.degree(v);
        pick_mask = mask;
      }
    }
    if (best_sat >= k) return false;
    const int top = symmetry_break ? std::min(k, used + 1) : k;
    for (int c = 1; c <= top; ++c) {
      if (pick_mask & (1u << c)) continue;
      colour[pick] = c;
      if (self(self, uncoloured - 1, std::max(used, c))) return true;
      if (stopped) break;
    }
    colour[pick] = 0;
    return false;
  };
  const int uncoloured =
      static_cast<int>(std::count(colour.begin(), colour.end(), 0));
  if (rec(rec, uncoloured, max_used)) return colour;
  return std::nullopt;
}

}  // namespace detail

struct ChromaticResult {
  Status status = Status::Ok;
  bool three_colorable = false;
  std::optional<std::vector<int>> three_coloring;
  std::optional<std::vector<int>> four_coloring;
};

/// Exact 3-colourability and a 4-colouring when one exists, for n <= cap_n.
inline ChromaticResult chromatic_check(
    const Graph& g, int cap_n = 60, StepBudget budget = StepBudget::unlimited()) {
  ChromaticResult out;
  if (g.num_vertices() > cap_n) {
    out.status = Status::CapExceeded;
    return out;
  }
  const std::vector<int> blank(g.num_vertices(), 0);
  bool stopped = false;
  out.three_coloring = detail::dsatur(g, 3, blank, budget, stopped, true);
  if (stopped) {
    out.status = Status::BudgetExhausted;
    out.three_coloring.reset();
    return out;
  }
  out.three_colorable = out.three_coloring.has_value();
  if (out.three_colorable) {
    out.four_coloring = out.three_coloring;
    return out;
  }
  out.four_coloring = detail::dsatur(g, 4, blank, budget, stopped, true);
  if (stopped) {
    out.status = Status::BudgetExhausted;
    out.four_coloring.reset();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two vertex-disjoint odd cycles

struct DisjointOddCycles {
  Status status = Status::Ok;
  bool found = false;
  std::vector<VertexId> first, second;  // vertex sets when found
};

/// Enumerates simple odd cycles (smallest vertex first) and tests whether the
/// rest of the graph still has an odd cycle.
inline DisjointOddCycles has_two_disjoint_odd_cycles(
    const Graph& g, int cap_n = 14, StepBudget budget = StepBudget::unlimited()) {
  const int n = g.num_vertices();
  DisjointOddCycles out;
  if (n > cap_n) {
    out.status = Status::CapExceeded;
    return out;
  }
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path;
  bool stopped = false;

  auto check = [&]() -> bool {
    const auto rest = brute_shortest_odd_cycle(g.without(on_path));
    if (rest.bipartite) return false;
    out.found = true;
    out.first = path;
    out.second = rest.vertices;
    return true;
  };

  for (VertexId s = 0; s < n && !out.found && !stopped; ++s) {
    on_path[s] = 1;
    path = {s};
    for (const auto& inc : g.incident(s))
      if (inc.neighbor == s && check()) break;
    auto dfs = [&](auto&& self, VertexId v) -> bool {
      if (!budget.spend()) {
        stopped = true;
        return false;
      }
      for (const auto& inc : g.incident(v)) {
        const VertexId w = inc.neighbor;
        if (w == s && path.size() >= 3 && path.size() % 2 == 1 &&
            path[1] < path.back() && check())
          return true;
        if (w <= s || on_path[w]) continue;
        on_path[w] = 1;
        path.push_back(w);
        if (self(self, w)) return true;
        path.pop_back();
        on_path[w] = 0;
        if (stopped) return false;
      }
      return false;
    };
    if (!out.found) dfs(dfs, s);
    std::fill(on_path.begin(), on_path.end(), 0);
  }
  if (stopped) out = DisjointOddCycles{Status::BudgetExhausted, false, {}, {}};
  return out;
}

// ---------------------------------------------------------------------------
// Precolouring extension in bipartite graphs

struct Precoloring {
  std::vector<std::pair<VertexId, int>> assignments;  // colours 1..3
};

/// Witness that a precolouring of three vertices cannot be extended: they are
/// distinct, on one side of the bipartition, rainbow, and pairwise share a
/// neighbour.
struct Obstruction {
  std::array<VertexId, 3> vertices{};
  std::array<int, 3> colours{};
  int side = 0;
  // common[i] is a neighbour shared by vertices[i] and vertices[(i+1) % 3].
  std::array<VertexId, 3> common{};
};

struct PrecolorResult {
  std::optional<std::vector<int>> coloring;
  std::optional<Obstruction> obstruction;
};

inline bool verify_obstruction(const Graph& g, const Obstruction& o) {
  const auto side = detail::two_colouring(g);
  if (side.empty()) return false;
  const auto [x, y, z] = o.vertices;
  if (x == y || y == z || x == z) return false;
  for (VertexId v : o.vertices)
    if (side[v] != o.side) return false;
  std::array<int, 3> c = o.colours;
  std::sort(c.begin(), c.end());
  if (c != std::array<int, 3>{1, 2, 3}) return false;
  for (int i = 0; i < 3; ++i) {
    const VertexId w = o.common[i];
    if (!g.adjacent(w, o.vertices[i]) || !g.adjacent(w, o.vertices[(i + 1) % 3]))
      return false;
  }
  return true;
}

namespace detail {

inline std::optional<VertexId> common_neighbour(const Graph& g, VertexId a,
                                                VertexId b) {
  std::optional<VertexId> best;
  for (const auto& inc : g.incident(a))
    if (g.adjacent(inc.neighbor, b) && (!best || inc.neighbor < *best))
      best = inc.neighbor;
  return best;
}

}  // namespace detail

/// Extends a proper precolouring of at most three vertices of a bipartite
/// graph to a proper 3-colouring, component by component:
///  - if some colour pair (a, b), a != b, avoids the precoloured colours on the
///    opposite sides, paint the free part of one side a and the other b;
///  - otherwise three rainbow vertices sit on one side; if two of them, x and
///    y, share no neighbour, paint the free vertices of their side with z's
///    colour, N(x) with y's colour and the rest of the other side with x's;
///  - otherwise fall back to exhaustive search, which either finds an
///    extension or certifies the obstruction.
inline PrecolorResult precolor_extend(const Graph& g, const Precoloring& p) {
  const int n = g.num_vertices();
  const auto side = detail::two_colouring(g);
  if (side.empty() && n > 0) throw Error("precolor_extend: graph is not bipartite");
  if (p.assignments.size() > 3)
    throw Error("precolor_extend: more than three precoloured vertices");
  std::vector<int> fixed(n, 0);
  for (auto [v, c] : p.assignments) {
    if (v < 0 || v >= n) throw Error("precolor_extend: vertex out of range");
    if (c < 1 || c > 3) throw Error("precolor_extend: colour outside 1..3");
    if (fixed[v] != 0) throw Error("precolor_extend: vertex precoloured twice");
    fixed[v] = c;
  }
  for (auto [u, v] : g.edges())
    if (fixed[u] != 0 && fixed[u] == fixed[v])
      throw Error("precolor_extend: precolouring is not proper");

  // Components.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (VertexId r = 0; r < n; ++r) {
    if (comp[r] != -1) continue;
    std::vector<VertexId> stack{r};
    comp[r] = ncomp;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v))
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = ncomp;
          stack.push_back(inc.neighbor);
        }
    }
    ++ncomp;
  }

  std::vector<int> colour = fixed;
  PrecolorResult out;
  for (int c = 0; c < ncomp; ++c) {
    std::array<unsigned, 2> used{0, 0};  // colour masks per side
    std::vector<VertexId> xs;
    for (VertexId v = 0; v < n; ++v)
      if (comp[v] == c && fixed[v]) {
        used[side[v]] |= 1u << fixed[v];
        xs.push_back(v);
      }

    bool done = false;
    for (int a = 1; a <= 3 && !done; ++a)
      for (int b = 1; b <= 3 && !done; ++b) {
        if (a == b || (used[1] & (1u << a)) || (used[0] & (1u << b))) continue;
        for (VertexId v = 0; v < n; ++v)
          if (comp[v] == c && !fixed[v]) colour[v] = side[v] == 0 ? a : b;
        done = true;
      }
    if (done) continue;

    // Three rainbow vertices on one side.
    const int s = side[xs[0]];
    for (int i = 0; i < 3 && !done; ++i) {
      const VertexId x = xs[i], y = xs[(i + 1) % 3], z = xs[(i + 2) % 3];
      if (detail::common_neighbour(g, x, y)) continue;
      for (VertexId v = 0; v < n; ++v) {
        if (comp[v] != c || fixed[v]) continue;
        if (side[v] == s)
          colour[v] = fixed[z];
        else
          colour[v] = g.adjacent(v, x) ? fixed[y] : fixed[x];
      }
      done = true;
    }
    if (done) continue;

    // Conditions all hold; they are necessary but not sufficient.
    std::vector<int> local(n, 0);
    Graph sub(n);
    for (auto [u, v] : g.edges())
      if (comp[u] == c) sub.add_edge(u, v);
    for (VertexId v = 0; v < n; ++v)
      local[v] = comp[v] == c ? fixed[v] : 1;  // other components irrelevant
    StepBudget unlimited = StepBudget::unlimited();
    bool stopped = false;
    auto ext = detail::dsatur(sub, 3, local, unlimited, stopped, false);
    if (ext) {
      for (VertexId v = 0; v < n; ++v)
        if (comp[v] == c) colour[v] = (*ext)[v];
      continue;
    }
    Obstruction o;
    o.side = s;
    for (int i = 0; i < 3; ++i) {
      o.vertices[i] = xs[i];
      o.colours[i] = fixed[xs[i]];
      o.common[i] = *detail::common_neighbour(g, xs[i], xs[(i + 1) % 3]);
    }
    out.obstruction = o;
    return out;
  }
  if (!is_proper_colouring(g, colour, 3))
    throw Error("precolor_extend: internal error, colouring not proper");
  out.coloring = std::move(colour);
  return out;
}

}  // namespace projwidth::oracle
