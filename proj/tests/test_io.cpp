#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"

using namespace projwidth;
using corpus::read_data;

TEST(Bounds, Decimals) {
  EXPECT_EQ(edge_width_bound(4).decimal(), "3.0000");
  EXPECT_EQ(edge_width_bound(9).decimal(), "4.5311");
  EXPECT_EQ(edge_width_bound(37).decimal(), "9.0000");
  EXPECT_EQ(face_width_bound(4).decimal(), "2.0000");
  EXPECT_EQ(face_width_bound(16).decimal(), "4.1310");
  EXPECT_EQ(single_edge_bound(4, 16).decimal(), "11.3137");
  EXPECT_EQ(single_edge_bound(0, 0).decimal(), "0.0000");
}

TEST(Bounds, DecimalsRoundHalfToEven) {
  EXPECT_EQ((SurdBound{1, 0, 32}).decimal(), "0.0312");   // 0.03125
  EXPECT_EQ((SurdBound{3, 0, 32}).decimal(), "0.0938");   // 0.09375
  EXPECT_EQ((SurdBound{0, 25, 32}).decimal(), "0.1562");  // 0.15625
  EXPECT_EQ((SurdBound{1, 1, 3}).decimal(), "0.6667");
  EXPECT_EQ((SurdBound{0, 4, 1}).decimal(), "2.0000");
}

TEST(Bounds, DecimalsAgreeWithFloatingPointAwayFromTies) {
  for (std::int64_t n = 1; n < 3000; ++n)
    for (const SurdBound& b : {edge_width_bound(n), face_width_bound(n), single_edge_bound(4, n)}) {
      const double v = b.approx() * 10000.0;
      if (std::abs(v - std::floor(v) - 0.5) < 1e-6) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.4f", b.approx());
      EXPECT_EQ(b.decimal(), buf) << n;
    }
}

TEST(Bounds, AdmitsIsExact) {
  for (std::int64_t n = 1; n < 2000; ++n) {
    const SurdBound ew = edge_width_bound(n);
    for (std::int64_t l = 1; l < 200; ++l)
      EXPECT_EQ(ew.admits(l), (2 * l - 1) * (2 * l - 1) <= 8 * n - 7) << n << " " << l;
  }
  // 2 <= 1/4 + sqrt(4 - 15/16) holds with equality.
  EXPECT_TRUE(face_width_bound(4).admits(2));
  EXPECT_FALSE(face_width_bound(4).admits(3));
  EXPECT_TRUE(single_edge_bound(3, 4).admits(4));
  EXPECT_FALSE(single_edge_bound(3, 4).admits(5));
}

TEST(Bounds, IntegerSquareRoot) {
  for (std::uint64_t r = 0; r < 5000; ++r) {
    EXPECT_EQ(isqrt(u128(r) * r), r);
    if (r > 0) {
      EXPECT_EQ(isqrt(u128(r) * r - 1), r - 1);
    }
  }
  const std::uint64_t big = 0xFFFFFFFFFFFFFFFFULL;
  EXPECT_EQ(isqrt(u128(big) * big), big);
}

TEST(Ag1, RoundTrip) {
  const std::string text = read_data("mycielski2.ag1");
  const LabelledGraph g = parse_ag1(text);
  EXPECT_EQ(g.graph.num_vertices(), 11);
  EXPECT_EQ(g.graph.num_edges(), 20);
  EXPECT_EQ(g.label, "mycielski levels=2 t=2");
  EXPECT_EQ(serialize_ag1(g.graph, g.label), text);
}

TEST(Ag1, Errors) {
  EXPECT_THROW(parse_ag1("AG1 2 2\nE 0 1\n"), ParseError);
  EXPECT_THROW(parse_ag1("AG1 2 1\nE 0 2\n"), ParseError);
  EXPECT_THROW(parse_ag1("AG1 2 1\nE 0\n"), ParseError);
  EXPECT_THROW(parse_ag1("# label mycielski k=2\nAG1 2 1\nE 1 1\n"), ParseError);
  EXPECT_NO_THROW(parse_ag1("AG1 2 1\nE 1 1\n"));
}

TEST(Instance, Dispatch) {
  EXPECT_TRUE(std::holds_alternative<LabelledGraph>(parse_instance(read_data("mycielski2.ag1"))));
  EXPECT_TRUE(std::holds_alternative<EmbeddedGraph>(parse_instance(read_data("k4.pq1"))));
  EXPECT_THROW(parse_instance("XYZ 1 0\n"), ParseError);
}

TEST(Certificate, RoundTrip) {
  const Surface s(grid_quadrangulation(4));
  std::vector<TransversalCertificate> certs{odd_cycle_transversal(s), facewidth_transversal(s),
                                            single_edge_transversal(s).certificate};
  std::string text;
  for (const auto& c : certs) text += serialize_certificate(c);
  EXPECT_EQ(text, read_data("grid4.cert"));
  const auto parsed = parse_certificates(text);
  ASSERT_EQ(parsed.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(parsed[i].kind, certs[i].kind);
    EXPECT_EQ(parsed[i].vertices, certs[i].vertices);
    EXPECT_EQ(parsed[i].induced_edges, certs[i].induced_edges);
    EXPECT_EQ(serialize_certificate(parsed[i]), serialize_certificate(certs[i]));
    EXPECT_TRUE(verify_certificate(s.graph().abstract_graph(), parsed[i]).ok());
  }
}

TEST(Certificate, TamperingIsDetected) {
  const Graph g = grid_quadrangulation(4).abstract_graph();
  const auto tampered = parse_certificates(read_data("grid4_tampered.cert"));
  ASSERT_EQ(tampered.size(), 3u);
  EXPECT_TRUE(verify_certificate(g, tampered[0]).ok());
  EXPECT_FALSE(verify_certificate(g, tampered[2]).ok());

  TransversalCertificate c = tampered[1];
  c.vertices.pop_back();
  EXPECT_FALSE(verify_certificate(g, c).ok());
  c = tampered[1];
  c.size_bound = {1, 1000, 1};
  EXPECT_FALSE(verify_certificate(g, c).ok());
  c = tampered[1];
  c.vertices.push_back(99);
  EXPECT_FALSE(verify_certificate(g, c).ok());
}

TEST(Certificate, ParseErrors) {
  EXPECT_THROW(parse_certificates("CERT nonsense\n"), ParseError);
  EXPECT_THROW(parse_certificates("CERT face-width\nVERTICES 2 1\n"), ParseError);
  EXPECT_THROW(parse_certificates("CERT face-width\nVERTICES 1 0\nINDUCED 0\n"
                                  "REMAINDER bipartite\nBOUND 1 49 4 2.0001\nEND\n"),
               ParseError);
  EXPECT_THROW(parse_certificates("CERT face-width\nVERTICES 1 0\nINDUCED 0\n"
                                  "REMAINDER maybe\nBOUND 1 49 4 2.0000\nEND\n"),
               ParseError);
  EXPECT_NO_THROW(parse_certificates("CERT face-width\nVERTICES 1 0\nINDUCED 0\n"
                                     "REMAINDER bipartite\nBOUND 1 49 4 2.0000\nEND\n"));
}

TEST(Csv, Header) {
  EXPECT_EQ(csv_header(),
            "# projwidth-csv v1\n"
            "family,k,n,m,edge_width,ew_bound,face_width,fw_bound,oct_min,alpha,"
            "single_edge_size,single_edge_bound,all_checks_pass\n");
}

TEST(Analyze, K4Row) {
  AnalyzeOptions opt;
  opt.with_oracle = true;
  const Analysis a = analyze(parse_pq1(read_data("k4.pq1")), opt);
  EXPECT_EQ(csv_line(a.row), "grid,2,4,6,3,3.0000,2,2.0000,2,1,2,4.8990,true\n");
  EXPECT_EQ(a.certificates.size(), 3u);
  EXPECT_TRUE(a.failures.empty());
  EXPECT_FALSE(a.cap_exceeded);
}

TEST(Analyze, G4Row) {
  const Analysis a = analyze(grid_quadrangulation(4));
  EXPECT_EQ(a.row.edge_width->value(), 5);
  EXPECT_EQ(a.row.face_width->value(), 4);
  EXPECT_EQ(a.row.checks, CheckState::Pass);
  EXPECT_EQ(csv_line(a.row), "grid,4,16,30,5,6.0000,4,4.1310,,,4,11.3137,true\n");
}

TEST(Analyze, PlanarIsSkipped) {
  const Analysis a = analyze(corpus::planar_c4());
  EXPECT_EQ(csv_line(a.row), "planar,,4,4,inf,3.0000,inf,2.0000,,,,,skip\n");
  EXPECT_TRUE(a.certificates.empty());
}

TEST(Analyze, FuzzAndMycielskiLabels) {
  const Analysis f = analyze(parse_pq1(read_data("fuzz_grid3_s10.pq1")));
  EXPECT_EQ(f.row.family, "fuzz");
  EXPECT_EQ(f.row.k, "3");
  const Analysis m = analyze(parse_pq1(read_data("mycielski2.pq1")));
  EXPECT_EQ(m.row.family, "mycielski");
  EXPECT_EQ(m.row.k, "2");
  EXPECT_EQ(m.row.checks, CheckState::Pass);
}

TEST(Analyze, AbstractGraph) {
  AnalyzeOptions opt;
  opt.with_oracle = true;
  const Analysis a = analyze_abstract(parse_ag1(read_data("mycielski2.ag1")), opt);
  EXPECT_EQ(csv_line(a.row), "mycielski,2,11,20,5,5.0000,,3.4221,3,5,,,skip\n");
}

TEST(Analyze, CapAndBudgetAreReported) {
  AnalyzeOptions opt;
  opt.with_oracle = true;
  opt.oct_cap = 2;
  const Analysis capped = analyze(grid_quadrangulation(4), opt);
  EXPECT_TRUE(capped.cap_exceeded);
  EXPECT_EQ(capped.row.oct_min, "cap");
  opt.oct_cap = 6;
  opt.step_budget = 5;
  const Analysis budget = analyze(grid_quadrangulation(4), opt);
  EXPECT_TRUE(budget.cap_exceeded);
  EXPECT_EQ(budget.row.oct_min, "budget");
  EXPECT_EQ(budget.row.alpha, "budget");
}

TEST(Analyze, RejectsDisconnected) {
  EXPECT_THROW(analyze(parse_pq1("PQ1 2 0\nR 0 0\nR 1 0\n")), Error);
}

TEST(Analyze, SingleVertex) {
  const Analysis a = analyze(parse_pq1("PQ1 1 0\nR 0 0\n"));
  EXPECT_EQ(a.row.checks, CheckState::Skip);
  EXPECT_FALSE(a.row.face_width->finite());
}

TEST(Analyze, OutputIsDeterministic) {
  for (int i = 0; i < 10; ++i) {
    const auto f = corpus::fuzz_instance(i).graph;
    EXPECT_EQ(csv_line(analyze(f).row), csv_line(analyze(parse_pq1(serialize_pq1(f))).row));
  }
}
