#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace projwidth;

namespace {

void expect_certificate_sound(const Graph& g, const TransversalCertificate& c,
                              const std::string& name) {
  EXPECT_TRUE(c.remainder_bipartite) << name;
  EXPECT_TRUE(oracle::is_odd_cycle_transversal(g, c.vertices)) << name;
  EXPECT_TRUE(c.within_bound()) << name << " size " << c.size();
  EXPECT_EQ(c.induced_edge_count(), g.induced_edge_count(c.vertices)) << name;
  EXPECT_TRUE(verify_certificate(g, c).ok()) << name;
}

}  // namespace

TEST(ShortOddCycle, Examples) {
  const ShortOddCycle k4 = short_odd_cycle(Surface(corpus::hand_k4()));
  EXPECT_EQ(k4.cycle.length(), 3);
  EXPECT_TRUE(edge_width_bound(4).admits(3));
  EXPECT_EQ(edge_width_bound(4).decimal(), "3.0000");

  const ShortOddCycle my = short_odd_cycle(Surface(*generalized_mycielski(2).embedding));
  EXPECT_EQ(my.cycle.length(), 5);
  EXPECT_EQ(edge_width_bound(11).decimal(), "5.0000");

  const ShortOddCycle g4 = short_odd_cycle(Surface(grid_quadrangulation(4)));
  EXPECT_EQ(g4.cycle.length(), 5);
  EXPECT_TRUE(edge_width_bound(16).admits(5));
  EXPECT_FALSE(edge_width_bound(16).admits(7));
}

TEST(ShortOddCycle, BoundAndStructureOnCorpus) {
  for (const auto& [name, g] : corpus::standard_set(60)) {
    const Surface s(g);
    const ShortOddCycle c = short_odd_cycle(s);
    const Graph a = g.abstract_graph();
    EXPECT_TRUE(is_closed_walk(a, c.cycle)) << name;
    EXPECT_TRUE(has_distinct_vertices(c.cycle)) << name;
    EXPECT_TRUE(c.cycle.odd()) << name;
    EXPECT_FALSE(is_contractible_walk(g, c.cycle)) << name;
    EXPECT_TRUE(edge_width_bound(g.num_vertices()).admits(c.cycle.length())) << name;
    // l * l* <= m = 2n - 2 for a quadrangulation.
    EXPECT_LE(static_cast<long>(c.dual_width) * c.edge_width, 2L * g.num_vertices() - 2) << name;
    EXPECT_TRUE(c.constructed.odd()) << name;
    EXPECT_LE(c.constructed.length(), c.dual_width + 1) << name;
  }
}

TEST(ShortOddCycle, TightOnMycielski) {
  for (int k = 2; k <= 4; ++k) {
    const EmbeddedGraph g = *generalized_mycielski(k).embedding;
    const ShortOddCycle c = short_odd_cycle(Surface(g));
    EXPECT_EQ(c.cycle.length(), oracle::brute_shortest_odd_cycle(g.abstract_graph()).length);
    EXPECT_EQ(c.cycle.length(), 2 * k + 1);
  }
}

TEST(ShortOddCycle, RejectsBipartiteInput) {
  EXPECT_THROW(short_odd_cycle(Surface(corpus::planar_c4())), Error);
}

TEST(FaceWidthTransversal, Examples) {
  const auto k4 = facewidth_transversal(Surface(corpus::hand_k4()));
  EXPECT_EQ(k4.size(), 2);
  EXPECT_EQ(face_width_bound(4).decimal(), "2.0000");
  for (int k = 3; k <= 6; ++k) {
    const auto c = facewidth_transversal(Surface(grid_quadrangulation(k)));
    EXPECT_EQ(c.size(), k);
    expect_certificate_sound(grid_quadrangulation(k).abstract_graph(), c, "grid");
  }
}

TEST(FaceWidthTransversal, SoundOnCorpus) {
  for (const auto& [name, g] : corpus::standard_set(60)) {
    const auto c = facewidth_transversal(Surface(g));
    EXPECT_EQ(c.kind, CertificateKind::FaceWidth);
    EXPECT_EQ(c.size(), face_width(g).width.value()) << name;
    expect_certificate_sound(g.abstract_graph(), c, name);
  }
}

TEST(FaceWidthTransversal, RejectsBipartiteInput) {
  EXPECT_THROW(facewidth_transversal(Surface(corpus::planar_c4())), Error);
}

TEST(OddCycleTransversal, SoundOnCorpus) {
  for (const auto& [name, g] : corpus::standard_set(40)) {
    const auto c = odd_cycle_transversal(Surface(g));
    EXPECT_EQ(c.kind, CertificateKind::OddCycle);
    expect_certificate_sound(g.abstract_graph(), c, name);
  }
}

TEST(SingleEdge, FromK4Triangle) {
  const EmbeddedGraph g = corpus::hand_k4();
  const Surface s(g);
  const Cycle tri = edge_width(g).witness;
  ASSERT_EQ(tri.length(), 3);
  const SingleEdgeResult r = single_edge_from_support(s, support_from_walk(s, tri));
  EXPECT_EQ(r.certificate.size(), 2);
  EXPECT_EQ(r.certificate.induced_edge_count(), 1);
  EXPECT_TRUE(r.certificate.remainder_bipartite);
}

TEST(SingleEdge, FromShortestOddCycleOfG4) {
  const EmbeddedGraph g = grid_quadrangulation(4);
  const Surface s(g);
  const Cycle c = edge_width(g).witness;
  const SingleEdgeResult r = single_edge_from_support(s, support_from_walk(s, c));
  EXPECT_LE(r.certificate.size(), 5 * g.max_degree());
  EXPECT_EQ(r.certificate.induced_edge_count(), 1);
  EXPECT_TRUE(r.certificate.remainder_bipartite);
  // Inside the closed neighbourhood of the cycle.
  const Graph a = g.abstract_graph();
  for (VertexId t : r.certificate.vertices) {
    bool near = false;
    for (VertexId v : c.vertices) near = near || v == t || a.adjacent(v, t);
    EXPECT_TRUE(near) << t;
  }
}

TEST(SingleEdge, RejectsEvenSupport) {
  const Surface s(grid_quadrangulation(3));
  EXPECT_THROW(single_edge_from_support(s, support_from_walk(s, face_walk(s.face(0)))), Error);
}

TEST(SingleEdge, Examples) {
  const SingleEdgeResult k4 = single_edge_transversal(Surface(corpus::hand_k4()));
  EXPECT_EQ(k4.certificate.size(), 2);
  EXPECT_EQ(single_edge_bound(3, 4).decimal(), "4.8990");

  const EmbeddedGraph g5 = grid_quadrangulation(5);
  const SingleEdgeResult r5 = single_edge_transversal(Surface(g5));
  EXPECT_LE(r5.certificate.size(), 14);
  EXPECT_EQ(single_edge_bound(4, 25).decimal(), "14.1421");
  expect_certificate_sound(g5.abstract_graph(), r5.certificate, "grid 5");

  const EmbeddedGraph m3 = *generalized_mycielski(3).embedding;
  const SingleEdgeResult rm = single_edge_transversal(Surface(m3));
  expect_certificate_sound(m3.abstract_graph(), rm.certificate, "mycielski 3");
}

TEST(SingleEdge, SoundOnCorpus) {
  int cycle_branch = 0, dual_branch = 0;
  for (const auto& [name, g] : corpus::standard_set(60)) {
    const SingleEdgeResult r = single_edge_transversal(Surface(g));
    EXPECT_EQ(r.certificate.induced_edge_count(), 1) << name;
    expect_certificate_sound(g.abstract_graph(), r.certificate, name);
    (r.cycle_branch ? cycle_branch : dual_branch)++;
  }
  EXPECT_GT(cycle_branch + dual_branch, 0);
  EXPECT_GT(dual_branch, 0);
}

TEST(Minimize, KnownSizes) {
  struct Case {
    EmbeddedGraph g;
    int k;
  };
  std::vector<Case> cases{{corpus::hand_k4(), 2}, {grid_quadrangulation(3), 3},
                          {grid_quadrangulation(4), 4}};
  for (const auto& c : cases) {
    const MinimizeResult r = minimize_facewidth(c.g);
    EXPECT_EQ(r.face_width, c.k);
    EXPECT_EQ(r.graph.num_edges(), 2 * c.k * c.k - c.k);
    EXPECT_EQ(r.graph.num_edges(), r.expected_edges());
    EXPECT_EQ(face_width(r.graph).width.value(), c.k);
  }
}

TEST(Minimize, K4IsAlreadyMinimal) {
  const MinimizeResult r = minimize_facewidth(corpus::hand_k4());
  EXPECT_EQ(r.deletions + r.contractions, 0);
  EXPECT_EQ(r.graph.num_edges(), 6);
}

TEST(Minimize, ResultIsMinimal) {
  const MinimizeResult r = minimize_facewidth(grid_quadrangulation(3), 11);
  for (EdgeId e = 0; e < r.graph.num_edges(); ++e) {
    const auto del = face_width(delete_edge(r.graph, e)).width;
    EXPECT_TRUE(!del.finite() || del.value() < 3);
    if (r.graph.edge(e).is_loop()) continue;
    const auto con = face_width(contract_edge(r.graph, e)).width;
    EXPECT_TRUE(!con.finite() || con.value() < 3);
  }
}

TEST(Minimize, RejectsPlanarInput) {
  EXPECT_THROW(minimize_facewidth(corpus::planar_c4()), Error);
}
