#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "projwidth/certificate.hpp"
#include "projwidth/oracle.hpp"

namespace projwidth {

enum class CheckState { Pass, Fail, Skip };

/// One CSV row of an analysis.
struct AnalysisRow {
  std::string family;
  std::string k;  // empty when unknown
  int n = 0;
  int m = 0;
  std::optional<Width> edge_width;  // empty when not computed
  SurdBound ew_bound;
  std::optional<Width> face_width;
  SurdBound fw_bound;
  std::string oct_min;  // number, "cap", "budget", or empty when not asked
  std::string alpha;
  std::optional<int> single_edge_size;
  SurdBound single_edge_bound;
  CheckState checks = CheckState::Skip;
};

inline std::string cell(const std::optional<Width>& w) { return w ? w->str() : ""; }

inline constexpr const char* kCsvVersion = "# projwidth-csv v1";
inline constexpr const char* kCsvColumns =
    "family,k,n,m,edge_width,ew_bound,face_width,fw_bound,oct_min,alpha,"
    "single_edge_size,single_edge_bound,all_checks_pass";

inline std::string csv_header() {
  return std::string(kCsvVersion) + "\n" + kCsvColumns + "\n";
}

inline std::string csv_line(const AnalysisRow& r) {
  std::ostringstream o;
  const char* check = r.checks == CheckState::Pass   ? "true"
                      : r.checks == CheckState::Fail ? "false"
                                                     : "skip";
  o << r.family << ',' << r.k << ',' << r.n << ',' << r.m << ','
    << cell(r.edge_width) << ',' << r.ew_bound.decimal() << ','
    << cell(r.face_width) << ',' << r.fw_bound.decimal() << ',' << r.oct_min
    << ',' << r.alpha << ','
    << (r.single_edge_size ? std::to_string(*r.single_edge_size) : "") << ','
    << (r.single_edge_size ? r.single_edge_bound.decimal() : "") << ',' << check
    << '\n';
  return o.str();
}

/// width / bound as a double, for summaries only (never for acceptance).
inline std::optional<double> ratio(const std::optional<Width>& w, const SurdBound& b) {
  if (!w || !w->finite()) return std::nullopt;
  return w->value() / b.approx();
}

struct AnalyzeOptions {
  bool with_oracle = false;
  int oct_cap = 6;
  std::optional<std::uint64_t> step_budget;
};

struct Analysis {
  AnalysisRow row;
  std::vector<TransversalCertificate> certificates;  // all re-verified
  std::vector<std::string> failures;                 // violated checks
  bool cap_exceeded = false;
  std::vector<std::string> summary;                  // human-readable lines
};

namespace detail {

inline oracle::StepBudget make_budget(const AnalyzeOptions& o) {
  return o.step_budget ? oracle::StepBudget(*o.step_budget)
                       : oracle::StepBudget::unlimited();
}

/// Splits "grid k=3 ..." into family "grid" and k "3"; fuzz outputs keep the
/// base size as k.
inline void family_from_label(const std::string& label, AnalysisRow& row) {
  std::istringstream in(label);
  std::string word;
  in >> word;
  row.family = word.empty() ? "file" : word;
  while (in >> word) {
    if (word == "fuzz") row.family = word;  // fuzz labels extend the base label
    if (row.k.empty() && (word.rfind("k=", 0) == 0 || word.rfind("levels=", 0) == 0))
      row.k = word.substr(word.find('=') + 1);
  }
}

inline void run_oracles(const Graph& g, const AnalyzeOptions& opt, Analysis& a,
                        std::optional<int> fw) {
  if (!opt.with_oracle) return;
  AnalysisRow& row = a.row;
  if (!oracle::is_odd_cycle_transversal(g, {})) {
    const auto oct = brute_min_oct(g, opt.oct_cap, make_budget(opt));
    if (oct.status == oracle::Status::Ok) {
      row.oct_min = std::to_string(oct.vertices.size());
      if (fw && static_cast<int>(oct.vertices.size()) != *fw)
        a.failures.push_back("minimum odd cycle transversal " + row.oct_min +
                             " differs from face-width " + std::to_string(*fw));
    } else {
      row.oct_min = oracle::to_string(oct.status);
      a.cap_exceeded = true;
    }
  } else {
    row.oct_min = "0";
  }
  const auto ind = independence_number(g, 40, make_budget(opt));
  if (ind.status == oracle::Status::Ok) {
    row.alpha = std::to_string(ind.alpha);
    // G - T bipartite for |T| = fw gives alpha >= (n - fw) / 2.
    if (fw && 2 * ind.alpha + *fw < g.num_vertices())
      a.failures.push_back("independence number below (n - face-width) / 2");
  } else {
    row.alpha = oracle::to_string(ind.status);
    a.cap_exceeded = true;
  }
}

}  // namespace detail

/// Widths, bounds and transversals of an embedded scheme. Bounds are checked
/// only for non-bipartite projective quadrangulations, the class they hold
/// for; every certificate is re-verified before it is reported.
inline Analysis analyze(const EmbeddedGraph& g, const AnalyzeOptions& opt = {}) {
  Analysis a;
  AnalysisRow& row = a.row;
  detail::family_from_label(g.label(), row);
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.ew_bound = edge_width_bound(row.n);
  row.fw_bound = face_width_bound(row.n);
  row.single_edge_bound = single_edge_bound(g.max_degree(), row.n);

  const Surface s(g);
  const ValidationReport rep = validate(s);
  if (!rep.connected) throw Error("analyze: scheme is not connected");
  if (rep.euler_characteristic != 1 && rep.euler_characteristic != 2)
    throw Error("analyze: Euler characteristic " +
                std::to_string(rep.euler_characteristic) + " is not 1 or 2");

  const EdgeWidthResult ew = edge_width(g);
  row.edge_width = ew.length;
  const FaceWidthResult fw = face_width(s);
  row.face_width = fw.width;
  a.summary.push_back("scheme: n=" + std::to_string(row.n) + " m=" +
                      std::to_string(row.m) + " faces=" +
                      std::to_string(s.num_faces()) + " euler=" +
                      std::to_string(rep.euler_characteristic) +
                      (rep.is_quadrangulation ? " quadrangulation" : "") +
                      (rep.is_bipartite_graph ? " bipartite" : ""));
  a.summary.push_back("edge-width " + ew.length.str() + " (bound " +
                      row.ew_bound.decimal() + "), face-width " + fw.width.str() +
                      " (bound " + row.fw_bound.decimal() + ")");

  const Graph abstract = g.abstract_graph();
  const bool applicable = rep.is_quadrangulation && !rep.is_bipartite_graph;
  detail::run_oracles(abstract, opt, a,
                      applicable ? std::optional<int>(fw.width.value()) : std::nullopt);
  if (!applicable) {
    a.summary.push_back("checks skipped: not a non-bipartite projective quadrangulation");
    row.checks = CheckState::Skip;
    return a;
  }

  auto attempt = [&](const char* what, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      a.failures.push_back(std::string(what) + ": " + e.what());
    }
  };
  auto keep = [&](const TransversalCertificate& c) {
    const CertificateCheck chk = verify_certificate(abstract, c);
    for (const auto& p : chk.problems)
      a.failures.push_back(to_string(c.kind) + " certificate: " + p);
    if (chk.ok()) a.certificates.push_back(c);
  };

  if (!row.ew_bound.admits(ew.length.value()))
    a.failures.push_back("edge-width exceeds its bound");
  if (!row.fw_bound.admits(fw.width.value()))
    a.failures.push_back("face-width exceeds its bound");

  attempt("short odd cycle", [&] {
    const ShortOddCycle c = short_odd_cycle(s);
    a.summary.push_back("short odd cycle of length " + std::to_string(c.cycle.length()) +
                        " (dual edge-width " + std::to_string(c.dual_width) +
                        ", constructed " + std::to_string(c.constructed.length()) + ")");
    if (static_cast<std::int64_t>(c.edge_width) * c.dual_width > row.m)
      a.failures.push_back("edge-width times dual edge-width exceeds m");
    keep(odd_cycle_transversal(s));
  });
  attempt("face-width transversal", [&] { keep(facewidth_transversal(s)); });
  attempt("single-edge transversal", [&] {
    const SingleEdgeResult r = single_edge_transversal(s);
    row.single_edge_size = r.certificate.size();
    a.summary.push_back(std::string("single-edge transversal of size ") +
                        std::to_string(r.certificate.size()) + " (bound " +
                        row.single_edge_bound.decimal() + ", " +
                        (r.cycle_branch ? "cycle" : "dual") + " branch)");
    a.summary.push_back(to_string(s, r.support));
    keep(r.certificate);
  });
  if (opt.with_oracle) {
    const auto odd = oracle::brute_shortest_odd_cycle(abstract);
    if (odd.bipartite || odd.length != ew.length.value())
      a.failures.push_back("oracle shortest odd cycle differs from edge-width");
  }

  row.checks = a.failures.empty() ? CheckState::Pass : CheckState::Fail;
  for (const auto& f : a.failures) a.summary.push_back("FAIL " + f);
  return a;
}

/// Abstract graphs (AG1) carry no embedding: the edge_width column holds the
/// shortest odd cycle length and no bound is checked.
inline Analysis analyze_abstract(const LabelledGraph& lg, const AnalyzeOptions& opt = {}) {
  Analysis a;
  AnalysisRow& row = a.row;
  const Graph& g = lg.graph;
  detail::family_from_label(lg.label, row);
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.ew_bound = edge_width_bound(row.n);
  row.fw_bound = face_width_bound(row.n);
  row.single_edge_bound = single_edge_bound(g.max_degree(), row.n);
  const auto odd = oracle::brute_shortest_odd_cycle(g);
  row.edge_width = odd.bipartite ? Width::infinite() : Width::of(odd.length);
  a.summary.push_back("abstract graph: n=" + std::to_string(row.n) +
                      " m=" + std::to_string(row.m) + ", shortest odd cycle " +
                      row.edge_width->str() + " (bound " + row.ew_bound.decimal() + ")");
  detail::run_oracles(g, opt, a, std::nullopt);
  row.checks = CheckState::Skip;
  return a;
}

}  // namespace projwidth
