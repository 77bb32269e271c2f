#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "projwidth/pq1.hpp"
#include "projwidth/transversal.hpp"

namespace projwidth {

// Text block:
//   CERT <kind>
//   VERTICES <k> <v1> ... <vk>
//   INDUCED <c> <u1> <w1> ... <uc> <wc>
//   REMAINDER bipartite|not-bipartite
//   BOUND <a> <b> <c> <decimal>        meaning (a + sqrt(b)) / c
//   END

inline std::string serialize_certificate(const TransversalCertificate& c) {
  std::ostringstream out;
  out << "CERT " << to_string(c.kind) << '\n';
  out << "VERTICES " << c.vertices.size();
  for (VertexId v : c.vertices) out << ' ' << v;
  out << "\nINDUCED " << c.induced_edges.size();
  for (auto [u, w] : c.induced_edges) out << ' ' << u << ' ' << w;
  out << "\nREMAINDER " << (c.remainder_bipartite ? "bipartite" : "not-bipartite");
  const SurdBound& b = c.size_bound;
  out << "\nBOUND " << b.a << ' ' << b.b << ' ' << b.c << ' ' << b.decimal();
  out << "\nEND\n";
  return out.str();
}

inline CertificateKind parse_certificate_kind(std::string_view s, int line) {
  for (auto k : {CertificateKind::OddCycle, CertificateKind::FaceWidth,
                 CertificateKind::SingleEdge})
    if (to_string(k) == s) return k;
  throw ParseError(line, "unknown certificate kind '" + std::string(s) + "'");
}

/// Parses every certificate block in `text`.
inline std::vector<TransversalCertificate> parse_certificates(std::string_view text) {
  const detail::Document doc = detail::read_document(text);
  std::vector<TransversalCertificate> out;
  const auto& lines = doc.lines;
  std::size_t i = 0;
  auto expect = [&](const char* key) -> const detail::Line& {
    if (i >= lines.size())
      throw ParseError(lines.empty() ? 0 : lines.back().number,
                       std::string("truncated certificate, expected ") + key);
    const auto& l = lines[i++];
    if (l.tokens[0] != key)
      throw ParseError(l.number, std::string("expected ") + key);
    return l;
  };
  auto int_at = [](const detail::Line& l, std::size_t j) {
    if (j >= l.tokens.size()) throw ParseError(l.number, "missing field");
    return detail::to_int(l, l.tokens[j], "integer");
  };
  while (i < lines.size()) {
    TransversalCertificate c;
    const auto& head = expect("CERT");
    if (head.tokens.size() != 2) throw ParseError(head.number, "malformed CERT line");
    c.kind = parse_certificate_kind(head.tokens[1], head.number);

    const auto& vl = expect("VERTICES");
    const int k = int_at(vl, 1);
    if (static_cast<int>(vl.tokens.size()) != k + 2)
      throw ParseError(vl.number, "vertex count mismatch");
    for (int j = 0; j < k; ++j) c.vertices.push_back(int_at(vl, 2 + j));

    const auto& il = expect("INDUCED");
    const int e = int_at(il, 1);
    if (static_cast<int>(il.tokens.size()) != 2 * e + 2)
      throw ParseError(il.number, "induced edge count mismatch");
    for (int j = 0; j < e; ++j)
      c.induced_edges.emplace_back(int_at(il, 2 + 2 * j), int_at(il, 3 + 2 * j));

    const auto& rl = expect("REMAINDER");
    if (rl.tokens.size() != 2 ||
        (rl.tokens[1] != "bipartite" && rl.tokens[1] != "not-bipartite"))
      throw ParseError(rl.number, "malformed REMAINDER line");
    c.remainder_bipartite = rl.tokens[1] == "bipartite";

    const auto& bl = expect("BOUND");
    if (bl.tokens.size() != 5) throw ParseError(bl.number, "malformed BOUND line");
    c.size_bound = {int_at(bl, 1), int_at(bl, 2), int_at(bl, 3)};
    if (c.size_bound.c <= 0) throw ParseError(bl.number, "bound denominator must be positive");
    if (c.size_bound.decimal() != bl.tokens[4])
      throw ParseError(bl.number, "bound decimal does not match its exact form");
    expect("END");
    out.push_back(std::move(c));
  }
  return out;
}

struct CertificateCheck {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Re-derives every claim of `claimed` from the graph alone.
inline CertificateCheck verify_certificate(const Graph& g,
                                           const TransversalCertificate& claimed) {
  CertificateCheck r;
  for (VertexId v : claimed.vertices)
    if (v < 0 || v >= g.num_vertices()) {
      r.problems.push_back("vertex " + std::to_string(v) + " out of range");
      return r;
    }
  const TransversalCertificate actual = certify(g, claimed.vertices, claimed.kind);
  if (actual.vertices != claimed.vertices)
    r.problems.push_back("vertex list is not sorted and distinct");
  if (actual.induced_edges != claimed.induced_edges)
    r.problems.push_back("induced edges differ: actual count " +
                         std::to_string(actual.induced_edge_count()));
  if (!actual.remainder_bipartite) r.problems.push_back("remainder is not bipartite");
  if (claimed.remainder_bipartite != actual.remainder_bipartite)
    r.problems.push_back("remainder claim is wrong");
  const SurdBound& a = actual.size_bound;
  const SurdBound& b = claimed.size_bound;
  if (a.a != b.a || a.b != b.b || a.c != b.c)
    r.problems.push_back("bound is not the one for this kind and graph");
  if (!actual.within_bound())
    r.problems.push_back("size " + std::to_string(actual.size()) + " exceeds " +
                         a.decimal());
  if (claimed.kind == CertificateKind::SingleEdge && actual.induced_edge_count() != 1)
    r.problems.push_back("single-edge certificate induces " +
                         std::to_string(actual.induced_edge_count()) + " edges");
  return r;
}

}  // namespace projwidth
