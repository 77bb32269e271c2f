#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace projwidth;
using namespace projwidth::oracle;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool bipartite_mask(const Graph& g, std::uint32_t removed) {
  std::vector<char> r(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) r[v] = (removed >> v) & 1;
  return is_bipartite(g.without(r)).bipartite;
}

// Plain subset enumeration, for cross-checking the smarter searches.
int naive_min_oct(const Graph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) < best && bipartite_mask(g, s)) best = std::popcount(s);
  return best;
}

int naive_alpha(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && !(((s >> u) & 1) && ((s >> v) & 1));
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

bool naive_three_colourable(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> c(n, 0);
  for (;;) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && c[u] != c[v];
    if (ok) return true;
    int i = 0;
    while (i < n && c[i] == 2) c[i++] = 0;
    if (i == n) return false;
    ++c[i];
  }
}

int naive_odd_girth(const Graph& g) {
  // Shortest odd closed walk by dynamic programming on walk length.
  const int n = g.num_vertices();
  for (int len = 1; len <= 2 * n + 1; len += 2)
    for (int s = 0; s < n; ++s) {
      std::vector<char> at(n, 0);
      at[s] = 1;
      for (int step = 0; step < len; ++step) {
        std::vector<char> next(n, 0);
        for (auto [u, v] : g.edges()) {
          if (at[u]) next[v] = 1;
          if (at[v]) next[u] = 1;
        }
        at = next;
      }
      if (at[s]) return len;
    }
  return 0;
}

}  // namespace

TEST(OddCycle, Examples) {
  EXPECT_EQ(brute_shortest_odd_cycle(cycle(5)).length, 5);
  EXPECT_EQ(brute_shortest_odd_cycle(corpus::hand_k4().abstract_graph()).length, 3);
  EXPECT_EQ(brute_shortest_odd_cycle(generalized_mycielski(2).graph).length, 5);
  EXPECT_TRUE(brute_shortest_odd_cycle(cycle(6)).bipartite);
}

TEST(OddCycle, WitnessIsACycle) {
  const Graph g = generalized_mycielski(3).graph;
  const OddCycle c = brute_shortest_odd_cycle(g);
  ASSERT_EQ(c.length, 7);
  ASSERT_EQ(c.vertices.size(), 7u);
  ASSERT_EQ(c.edges.size(), 7u);
  std::vector<VertexId> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  EXPECT_EQ(std::adjacent_find(vs.begin(), vs.end()), vs.end());
  for (int i = 0; i < 7; ++i) {
    const auto [u, v] = g.edge(c.edges[i]);
    const VertexId a = c.vertices[i], b = c.vertices[(i + 1) % 7];
    EXPECT_TRUE((u == a && v == b) || (u == b && v == a));
  }
}

TEST(OddCycle, Loop) {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  EXPECT_EQ(brute_shortest_odd_cycle(g).length, 1);
}

TEST(OddCycle, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(3 + t % 8, 0.3, rng);
    const OddCycle c = brute_shortest_odd_cycle(g);
    EXPECT_EQ(c.bipartite ? 0 : c.length, naive_odd_girth(g));
  }
}

TEST(MinOct, Examples) {
  EXPECT_EQ(brute_min_oct(corpus::hand_k4().abstract_graph()).vertices.size(), 2u);
  EXPECT_EQ(brute_min_oct(cycle(5)).vertices.size(), 1u);
  EXPECT_EQ(brute_min_oct(grid_quadrangulation(4).abstract_graph()).vertices.size(), 4u);
  EXPECT_TRUE(brute_min_oct(cycle(4)).vertices.empty());
}

TEST(MinOct, CapIsExplicit) {
  const Graph g = grid_quadrangulation(4).abstract_graph();
  const OctResult r = brute_min_oct(g, 3);
  EXPECT_EQ(r.status, Status::CapExceeded);
  EXPECT_TRUE(r.vertices.empty());
}

TEST(MinOct, BudgetIsExplicit) {
  const OctResult r = brute_min_oct(grid_quadrangulation(5).abstract_graph(), 6, StepBudget(50));
  EXPECT_EQ(r.status, Status::BudgetExhausted);
}

TEST(MinOct, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_graph(4 + t % 8, 0.35, rng);
    const OctResult r = brute_min_oct(g, 12);
    ASSERT_EQ(r.status, Status::Ok);
    EXPECT_TRUE(is_odd_cycle_transversal(g, r.vertices));
    EXPECT_EQ(static_cast<int>(r.vertices.size()), naive_min_oct(g));
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(corpus::hand_k4().abstract_graph()).alpha, 1);
  EXPECT_EQ(independence_number(grid_quadrangulation(3).abstract_graph()).alpha, 3);
  EXPECT_EQ(independence_number(grid_quadrangulation(4).abstract_graph()).alpha, 6);
}

TEST(Independence, WitnessAndCaps) {
  const Graph g = grid_quadrangulation(5).abstract_graph();
  const IndependenceResult r = independence_number(g);
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(static_cast<int>(r.witness.size()), r.alpha);
  EXPECT_EQ(g.induced_edge_count(r.witness), 0);
  EXPECT_EQ(independence_number(g, 20).status, Status::CapExceeded);
  EXPECT_EQ(independence_number(g, 40, StepBudget(3)).status, Status::BudgetExhausted);
}

TEST(Independence, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_graph(2 + t % 13, 0.3, rng);
    EXPECT_EQ(independence_number(g).alpha, naive_alpha(g));
  }
}

TEST(Chromatic, Examples) {
  const ChromaticResult bip = chromatic_check(cycle(6));
  EXPECT_TRUE(bip.three_colorable);
  ASSERT_TRUE(bip.three_coloring);
  EXPECT_TRUE(is_proper_colouring(cycle(6), *bip.three_coloring, 3));

  const Graph k4 = corpus::hand_k4().abstract_graph();
  const ChromaticResult r = chromatic_check(k4);
  EXPECT_FALSE(r.three_colorable);
  ASSERT_TRUE(r.four_coloring);
  EXPECT_TRUE(is_proper_colouring(k4, *r.four_coloring, 4));
}

TEST(Chromatic, QuadrangulationsAreFourChromatic) {
  for (const auto& [name, g] : corpus::standard_set(30)) {
    if (g.num_vertices() > 60) continue;
    const Graph a = g.abstract_graph();
    const ChromaticResult r = chromatic_check(a);
    EXPECT_EQ(r.status, Status::Ok) << name;
    EXPECT_FALSE(r.three_colorable) << name;
    ASSERT_TRUE(r.four_coloring) << name;
    EXPECT_TRUE(is_proper_colouring(a, *r.four_coloring, 4)) << name;
  }
}

TEST(Chromatic, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(3 + t % 7, 0.5, rng);
    const ChromaticResult r = chromatic_check(g);
    EXPECT_EQ(r.three_colorable, naive_three_colourable(g));
    if (r.four_coloring) {
      EXPECT_TRUE(is_proper_colouring(g, *r.four_coloring, 4));
    }
  }
}

TEST(Chromatic, Caps) {
  EXPECT_EQ(chromatic_check(cycle(70)).status, Status::CapExceeded);
  EXPECT_EQ(chromatic_check(grid_quadrangulation(6).abstract_graph(), 60, StepBudget(5)).status,
            Status::BudgetExhausted);
}

TEST(DisjointOddCycles, Examples) {
  Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const DisjointOddCycles r = has_two_disjoint_odd_cycles(two);
  EXPECT_TRUE(r.found);
  for (VertexId v : r.first)
    EXPECT_EQ(std::find(r.second.begin(), r.second.end(), v), r.second.end());
  EXPECT_FALSE(has_two_disjoint_odd_cycles(corpus::hand_k4().abstract_graph()).found);
  EXPECT_FALSE(has_two_disjoint_odd_cycles(grid_quadrangulation(3).abstract_graph()).found);
  EXPECT_EQ(has_two_disjoint_odd_cycles(grid_quadrangulation(4).abstract_graph()).status,
            Status::CapExceeded);
}

TEST(Precolor, PathEndpoint) {
  const Graph p2(2, {{0, 1}});
  const PrecolorResult r = precolor_extend(p2, {{{0, 1}}});
  ASSERT_TRUE(r.coloring);
  EXPECT_EQ((*r.coloring)[0], 1);
  EXPECT_TRUE(is_proper_colouring(p2, *r.coloring, 3));
}

TEST(Precolor, K23Obstruction) {
  const Graph k23 = parse_ag1(corpus::read_data("k23.ag1")).graph;
  const PrecolorResult r = precolor_extend(k23, {{{2, 1}, {3, 2}, {4, 3}}});
  EXPECT_FALSE(r.coloring);
  ASSERT_TRUE(r.obstruction);
  EXPECT_TRUE(verify_obstruction(k23, *r.obstruction));
}

TEST(Precolor, C6AlternateVerticesExtend) {
  const Graph c6 = cycle(6);
  const PrecolorResult r = precolor_extend(c6, {{{0, 1}, {2, 2}, {4, 3}}});
  ASSERT_TRUE(r.coloring);
  EXPECT_FALSE(r.obstruction);
  EXPECT_TRUE(is_proper_colouring(c6, *r.coloring, 3));
  EXPECT_EQ((*r.coloring)[0], 1);
  EXPECT_EQ((*r.coloring)[2], 2);
  EXPECT_EQ((*r.coloring)[4], 3);
}

TEST(Precolor, Errors) {
  const Graph c6 = cycle(6);
  EXPECT_THROW(precolor_extend(cycle(5), {}), Error);
  EXPECT_THROW(precolor_extend(c6, {{{0, 1}, {1, 1}}}), Error);
  EXPECT_THROW(precolor_extend(c6, {{{0, 4}}}), Error);
  EXPECT_THROW(precolor_extend(c6, {{{0, 1}, {0, 2}}}), Error);
  EXPECT_THROW(precolor_extend(c6, {{{0, 1}, {1, 2}, {2, 3}, {3, 1}}}), Error);
  EXPECT_THROW(precolor_extend(c6, {{{6, 1}}}), Error);
}

TEST(Precolor, DisconnectedGraph) {
  // Two K_{1,3} stars, the leaves of one rainbow: that star alone carries it.
  const Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}});
  const PrecolorResult r = precolor_extend(g, {{{1, 1}, {2, 2}, {3, 3}}});
  EXPECT_FALSE(r.coloring);
  ASSERT_TRUE(r.obstruction);
  EXPECT_TRUE(verify_obstruction(g, *r.obstruction));
  const PrecolorResult ok = precolor_extend(g, {{{1, 1}, {5, 2}, {6, 3}}});
  ASSERT_TRUE(ok.coloring);
  EXPECT_TRUE(is_proper_colouring(g, *ok.coloring, 3));
}

TEST(Precolor, ObstructionVerifierRejectsBadClaims) {
  const Graph k23 = parse_ag1(corpus::read_data("k23.ag1")).graph;
  Obstruction o = *precolor_extend(k23, {{{2, 1}, {3, 2}, {4, 3}}}).obstruction;
  Obstruction repeat = o;
  repeat.colours = {1, 1, 2};
  EXPECT_FALSE(verify_obstruction(k23, repeat));
  Obstruction wrong_common = o;
  wrong_common.common[0] = o.vertices[0];
  EXPECT_FALSE(verify_obstruction(k23, wrong_common));
  Obstruction wrong_side = o;
  wrong_side.side = 1 - o.side;
  EXPECT_FALSE(verify_obstruction(k23, wrong_side));
}
