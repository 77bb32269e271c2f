#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace projwidth;

namespace {

SupportSet face_support(const Surface& s, int f) {
  SupportSet set;
  const Face& face = s.face(f);
  for (int q = 0; q < face.length(); ++q) {
    set.vertices.push_back(face.vertex_at(q));
    set.pairs.push_back({f, q, (q + 1) % face.length()});
  }
  return set;
}

bool remainder_bipartite(const EmbeddedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<char> removed(g.num_vertices(), 0);
  for (VertexId v : vs) removed[v] = 1;
  return is_bipartite(g.abstract_graph().without(removed)).bipartite;
}

}  // namespace

TEST(Shift, OppositePairOnAFace) {
  const Surface s(grid_quadrangulation(4));
  const Face& f = s.face(0);
  // a -> c across face 0, then back along the face: c d a.
  SupportSet set;
  set.vertices = {f.vertex_at(0), f.vertex_at(2), f.vertex_at(3)};
  set.pairs = {{0, 0, 2}, {0, 2, 3}, {0, 3, 0}};
  ASSERT_TRUE(is_valid_support(s, set));
  ASSERT_EQ(pair_kind(s, set.pairs[0]), PairKind::Opposite);
  const SupportSet out = shift(s, set, 0);
  EXPECT_EQ(out.size(), 4);
  EXPECT_EQ(order(s, out), order(s, set) + 2);
  EXPECT_EQ(parity_odd(s, out), parity_odd(s, set));
  const VertexId mid = out.vertices[1];
  EXPECT_TRUE(mid == f.vertex_at(1) || mid == f.vertex_at(3));
  EXPECT_EQ(mid, std::min(f.vertex_at(1), f.vertex_at(3)));
  // Explicit choice of the other common neighbour.
  const VertexId other = mid == f.vertex_at(1) ? f.vertex_at(3) : f.vertex_at(1);
  EXPECT_EQ(shift(s, set, 0, other).vertices[1], other);
}

TEST(Shift, Errors) {
  const Surface s(grid_quadrangulation(3));
  const SupportSet face = face_support(s, 0);
  EXPECT_THROW(shift(s, face, 0), Error);   // adjacent pair
  EXPECT_THROW(shift(s, face, 9), Error);   // out of range
}

TEST(Shift, ShiftingAllOppositePairsLeavesOnlyAdjacentOnes) {
  for (const auto& [name, g] : corpus::grids(2, 6)) {
    const Surface s(g);
    SupportSet set = face_width(s).witness;
    for (int i = 0; i < set.size();)
      if (pair_kind(s, set.pairs[i]) == PairKind::Opposite) set = shift(s, set, i);
      else ++i;
    EXPECT_EQ(order(s, set), set.size()) << name;
    EXPECT_TRUE(parity_odd(s, set)) << name;
  }
}

TEST(Shift, PreservesParityAndHomologyOnRandomSets) {
  for (const auto& [name, g] : corpus::grids(2, 5)) {
    const Surface s(g);
    std::mt19937_64 rng(4242 + g.num_vertices());
    int shifted = 0;
    for (int t = 0; t < 100; ++t) {
      const SupportSet set = corpus::random_support_set(s, rng);
      ASSERT_TRUE(is_valid_support(s, set));
      for (int i = 0; i < set.size(); ++i) {
        if (pair_kind(s, set.pairs[i]) != PairKind::Opposite) continue;
        const SupportSet out = shift(s, set, i);
        ASSERT_TRUE(is_valid_support(s, out));
        EXPECT_EQ(parity_odd(s, out), parity_odd(s, set)) << name;
        EXPECT_EQ(homology_sign(s, out), homology_sign(s, set)) << name;
        ++shifted;
      }
    }
    EXPECT_GT(shifted, 0) << name;
  }
}

TEST(ClosedWalk, AdjacentSetIsItsOwnWalk) {
  const EmbeddedGraph g = grid_quadrangulation(4);
  const Surface s(g);
  const Cycle c = edge_width(g).witness;
  const SupportSet set = support_from_walk(s, c);
  EXPECT_EQ(order(s, set), set.size());
  const ClosedWalk w = to_closed_walk(s, set);
  EXPECT_EQ(w.vertices, c.vertices);
  EXPECT_EQ(w.edges, c.edges);
}

TEST(ClosedWalk, K4WitnessGivesAnOddWalk) {
  const Surface s(corpus::hand_k4());
  const SupportSet set = face_width(s).witness;
  ASSERT_EQ(set.size(), 2);
  const ClosedWalk w = to_closed_walk(s, set);
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(w.odd(), parity_odd(s, set));
  EXPECT_TRUE(is_closed_walk(s.graph().abstract_graph(), w));
}

TEST(ClosedWalk, SignMatchesParity) {
  for (const auto& [name, g] : corpus::standard_set(30)) {
    const Surface s(g);
    std::mt19937_64 rng(17 * g.num_edges());
    for (int t = 0; t < 40; ++t) {
      const SupportSet set = corpus::random_support_set(s, rng);
      const ClosedWalk w = to_closed_walk(s, set);
      EXPECT_TRUE(is_closed_walk(g.abstract_graph(), w)) << name;
      EXPECT_EQ(w.odd(), parity_odd(s, set)) << name;
      EXPECT_EQ(sign_product(g, w) == Sign::Negative, is_odd(s, set)) << name;
    }
  }
}

TEST(Parity, FaceBoundaryIsEven) {
  const Surface s(grid_quadrangulation(3));
  for (int f = 0; f < s.num_faces(); ++f) {
    const SupportSet set = face_support(s, f);
    EXPECT_EQ(order(s, set), 4);
    EXPECT_FALSE(is_odd(s, set));
  }
}

TEST(Parity, FaceWidthWitnessIsOdd) {
  for (const auto& [name, g] : corpus::standard_set(30)) {
    const Surface s(g);
    EXPECT_TRUE(is_odd(s, face_width(s).witness)) << name;
  }
}

TEST(Parity, OddSetsLeaveBipartiteRemainders) {
  int odd_sets = 0;
  for (const auto& [name, g] : corpus::standard_set(30)) {
    const Surface s(g);
    std::mt19937_64 rng(99 + g.num_vertices());
    std::vector<SupportSet> sets{face_width(s).witness};
    for (int t = 0; t < 60; ++t) sets.push_back(corpus::random_support_set(s, rng, 3 * g.num_vertices()));
    for (const auto& set : sets) {
      if (!is_odd(s, set)) continue;
      ++odd_sets;
      EXPECT_TRUE(remainder_bipartite(g, set.vertices)) << name << " " << to_string(s, set);
    }
  }
  EXPECT_GT(odd_sets, 200);
}

TEST(Reduce, SimpleOddSetIsUnchanged) {
  const Surface s(grid_quadrangulation(4));
  const SupportSet w = face_width(s).witness;
  const SupportSet r = reduce_support(s, w);
  EXPECT_EQ(r.vertices, w.vertices);
  EXPECT_TRUE(check_reduction(s, w, r).ok());
}

TEST(Reduce, ChordIsRemoved) {
  // Detour one step of the face-width witness of G_4 through an extra vertex
  // on the same face; the detour creates a chord that reduction must cut.
  const EmbeddedGraph g = grid_quadrangulation(4);
  const Surface s(g);
  const SupportSet w = face_width(s).witness;
  bool tried = false;
  for (int i = 0; i < w.size() && !tried; ++i) {
    const SupportPair p = w.pairs[i];
    const Face& f = s.face(p.face);
    for (int q = 0; q < f.length(); ++q) {
      if (q == p.from || q == p.to) continue;
      SupportSet longer;
      for (int j = 0; j < w.size(); ++j) {
        longer.vertices.push_back(w.vertices[j]);
        if (j != i) {
          longer.pairs.push_back(w.pairs[j]);
          continue;
        }
        longer.pairs.push_back({p.face, p.from, q});
        longer.vertices.push_back(f.vertex_at(q));
        longer.pairs.push_back({p.face, q, p.to});
      }
      if (!is_valid_support(s, longer) || !is_odd(s, longer)) continue;
      tried = true;
      const SupportSet r = reduce_support(s, longer);
      EXPECT_LT(r.size(), longer.size());
      EXPECT_TRUE(check_reduction(s, longer, r).ok());
      break;
    }
  }
  EXPECT_TRUE(tried);
}

TEST(Reduce, RandomOddSetsSatisfyAllConditions) {
  for (const auto& [name, g] : corpus::grids(2, 5)) {
    const Surface s(g);
    std::mt19937_64 rng(5 + g.num_vertices());
    for (int t = 0; t < 100; ++t) {
      const SupportSet set = corpus::random_support_set(s, rng, 16);
      if (!is_odd(s, set)) continue;
      const SupportSet r = reduce_support(s, set);
      const ReductionCheck c = check_reduction(s, set, r);
      EXPECT_TRUE(c.valid && c.odd && c.order_not_larger && c.distinct &&
                  c.faces_only_consecutive)
          << name << " " << to_string(s, set) << " -> " << to_string(s, r);
      EXPECT_TRUE(remainder_bipartite(g, r.vertices)) << name;
    }
  }
}

TEST(Reduce, RejectsEvenSets) {
  const Surface s(grid_quadrangulation(3));
  EXPECT_THROW(reduce_support(s, face_support(s, 0)), Error);
}

TEST(Reduce, SingleEdgePipelineHasOrderOne) {
  for (const auto& [name, g] : corpus::standard_set(20)) {
    const Surface s(g);
    const SingleEdgeResult r = single_edge_transversal(s);
    EXPECT_EQ(order(s, r.support), 1) << name;
  }
}

TEST(Extract, OddCycleIsItself) {
  const EmbeddedGraph g = grid_quadrangulation(5);
  const Cycle c = edge_width(g).witness;
  const Cycle e = extract_odd_cycle(g, c);
  EXPECT_EQ(e.vertices, c.vertices);
  EXPECT_EQ(e.edges, c.edges);
  EXPECT_EQ(e.contractible, false);
}

TEST(Extract, FaceAppendedToOddCycleShrinks) {
  const EmbeddedGraph g = grid_quadrangulation(4);
  const Surface s(g);
  const Cycle c = edge_width(g).witness;
  // A face through the first vertex of c, rotated to start there.
  const auto corner = s.corners_at(c.vertices[0]).front();
  const Face& f = s.face(corner.face);
  ClosedWalk face;
  for (int q = 0; q < f.length(); ++q) {
    const auto& st = f.boundary[(corner.position + q) % f.length()];
    face.vertices.push_back(st.vertex);
    face.edges.push_back(st.edge);
  }
  const ClosedWalk w = concatenate(c, face);
  ASSERT_TRUE(is_closed_walk(g.abstract_graph(), w));
  const Cycle e = extract_odd_cycle(g, w);
  EXPECT_LT(e.length(), w.length());
  EXPECT_TRUE(e.odd());
  EXPECT_TRUE(has_distinct_vertices(e));
  for (VertexId v : e.vertices)
    EXPECT_NE(std::find(w.vertices.begin(), w.vertices.end(), v), w.vertices.end());
}

TEST(Extract, RejectsEvenWalks) {
  const Surface s(grid_quadrangulation(3));
  EXPECT_THROW(extract_odd_cycle(s.graph(), face_walk(s.face(0))), Error);
}

TEST(Format, SupportSetLine) {
  const Surface s(corpus::hand_k4());
  const std::string line = to_string(s, face_width(s).witness);
  EXPECT_EQ(line.rfind("S: ", 0), 0u);
  EXPECT_NE(line.find("| order=1 size=2 parity=odd"), std::string::npos) << line;
  EXPECT_NE(line.find("(adj)"), std::string::npos);
  EXPECT_NE(line.find("(opp)"), std::string::npos);
}
