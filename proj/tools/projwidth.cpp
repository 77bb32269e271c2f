// projwidth: generate instances, analyze widths and transversals, sweep bound
// checks, minimize face-width, and run the brute-force oracles.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "projwidth/projwidth.hpp"

namespace pw = projwidth;

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kCapExceeded = 3 };

struct InputError : pw::Error {
  using pw::Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Writes to `path`, or stdout when the path is empty or "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("PROJWIDTH_STEP_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  std::uint64_t v = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  const auto [p, ec] = std::from_chars(raw, end, v);
  if (ec != std::errc() || p != end)
    throw InputError("PROJWIDTH_STEP_BUDGET must be a non-negative integer");
  return v;
}

pw::oracle::StepBudget budget() {
  const auto b = env_budget();
  return b ? pw::oracle::StepBudget(*b) : pw::oracle::StepBudget::unlimited();
}

pw::Family parse_family(const std::string& s) {
  if (s == "grid") return pw::Family::Grid;
  if (s == "mycielski") return pw::Family::Mycielski;
  if (s == "fuzz") return pw::Family::Fuzz;
  throw InputError("unknown family '" + s + "' (grid, mycielski, fuzz)");
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("--k-range must look like A..B");
  auto num = [&](std::string_view t) {
    int v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
      throw InputError("--k-range must look like A..B");
    return v;
  };
  const std::string_view sv(s);
  return {num(sv.substr(0, dots)), num(sv.substr(dots + 2))};
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family = "grid";
  int k = 2;
  int t = 0;
  std::uint64_t seed = 0;
  int steps = 0;
  bool embed = false;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  pw::FamilySpec spec;
  spec.family = parse_family(a.family);
  spec.k = a.k;
  spec.base_half = a.t;
  spec.seed = a.seed;
  spec.steps = a.steps;
  if (spec.family == pw::Family::Grid && a.k < 2) throw InputError("grid needs --k >= 2");
  if (spec.family == pw::Family::Mycielski && !a.embed) {
    if (a.k < 1) throw InputError("mycielski needs --k >= 1");
    const int t = a.t == 0 ? a.k : a.t;
    const auto m = pw::generalized_mycielski(a.k, t, false);
    const std::string label =
        "mycielski levels=" + std::to_string(a.k) + " t=" + std::to_string(t);
    write_output(a.out, pw::serialize_ag1(m.graph, label));
    return kPass;
  }
  write_output(a.out, pw::serialize_pq1(pw::generate(spec)));
  return kPass;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  bool with_oracle = false;
  std::string csv;
  std::string out;
};

pw::Analysis analyze_instance(const pw::Instance& inst, const pw::AnalyzeOptions& opt) {
  if (const auto* g = std::get_if<pw::EmbeddedGraph>(&inst)) return pw::analyze(*g, opt);
  return pw::analyze_abstract(std::get<pw::LabelledGraph>(inst), opt);
}

int status_of(const pw::Analysis& a) {
  if (!a.failures.empty()) return kViolation;
  if (a.cap_exceeded) return kCapExceeded;
  return kPass;
}

int cmd_analyze(const AnalyzeArgs& args) {
  const pw::Instance inst = pw::parse_instance(read_file(args.input));
  pw::AnalyzeOptions opt;
  opt.with_oracle = args.with_oracle;
  opt.step_budget = env_budget();
  const pw::Analysis a = analyze_instance(inst, opt);
  const std::string csv = pw::csv_header() + pw::csv_line(a.row);
  for (const auto& line : a.summary) std::cout << line << '\n';
  if (args.csv.empty())
    std::cout << csv;
  else
    write_output(args.csv, csv);
  if (!args.out.empty()) {
    std::string certs;
    for (const auto& c : a.certificates) certs += pw::serialize_certificate(c);
    write_output(args.out, certs);
  }
  return status_of(a);
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string family;
  std::string range;
  std::uint64_t seed = 0;
  int steps = 0;
  bool with_oracle = false;
  std::string csv;
  std::string input;
  std::string cert;
};

int verify_certificates(const VerifyArgs& args) {
  const pw::Instance inst = pw::parse_instance(read_file(args.input));
  const pw::Graph g = std::holds_alternative<pw::EmbeddedGraph>(inst)
                          ? std::get<pw::EmbeddedGraph>(inst).abstract_graph()
                          : std::get<pw::LabelledGraph>(inst).graph;
  const auto certs = pw::parse_certificates(read_file(args.cert));
  if (certs.empty()) throw InputError("no certificate in '" + args.cert + "'");
  int status = kPass;
  for (const auto& c : certs) {
    const auto chk = pw::verify_certificate(g, c);
    std::cout << pw::to_string(c.kind) << " size=" << c.vertices.size()
              << " induced=" << c.induced_edges.size() << " bound="
              << c.size_bound.decimal() << ' ' << (chk.ok() ? "VALID" : "INVALID") << '\n';
    for (const auto& p : chk.problems) std::cout << "  " << p << '\n';
    if (!chk.ok()) status = kViolation;
  }
  return status;
}

int cmd_verify(const VerifyArgs& args) {
  if (!args.cert.empty()) {
    if (args.input.empty()) throw InputError("verify --cert needs an instance file");
    return verify_certificates(args);
  }
  if (args.family.empty() || args.range.empty())
    throw InputError("verify needs --family and --k-range (or an instance and --cert)");
  const pw::Family fam = parse_family(args.family);
  const auto [lo, hi] = parse_range(args.range);
  pw::AnalyzeOptions opt;
  opt.with_oracle = args.with_oracle;
  opt.step_budget = env_budget();

  std::string csv = pw::csv_header();
  int status = kPass;
  double best_ew = 0, best_fw = 0;
  std::string at_ew, at_fw;
  int rows = 0;
  for (int k = lo; k <= hi; ++k) {
    pw::FamilySpec spec{fam, k, 0, args.seed, args.steps};
    pw::Analysis a = pw::analyze(pw::generate(spec), opt);
    a.row.family = args.family;
    a.row.k = std::to_string(k);
    csv += pw::csv_line(a.row);
    ++rows;
    if (const auto r = pw::ratio(a.row.edge_width, a.row.ew_bound); r && *r > best_ew) {
      best_ew = *r;
      at_ew = "k=" + std::to_string(k);
    }
    if (const auto r = pw::ratio(a.row.face_width, a.row.fw_bound); r && *r > best_fw) {
      best_fw = *r;
      at_fw = "k=" + std::to_string(k);
    }
    for (const auto& f : a.failures) std::cerr << "k=" << k << ": " << f << '\n';
    const int s = status_of(a);
    if (s == kViolation || (s == kCapExceeded && status == kPass)) status = s;
  }
  if (args.csv.empty())
    std::cout << csv;
  else
    write_output(args.csv, csv);
  char line[200];
  if (rows == 0)
    std::snprintf(line, sizeof line, "summary: 0 instances\n");
  else
    std::snprintf(line, sizeof line,
                  "summary: %d instances, max edge_width/ew_bound %.4f (%s), "
                  "max face_width/fw_bound %.4f (%s)\n",
                  rows, best_ew, at_ew.c_str(), best_fw, at_fw.c_str());
  std::cout << line;
  return status;
}

// ---------------------------------------------------------------------------

struct MinimizeArgs {
  std::string input;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_minimize(const MinimizeArgs& args) {
  const pw::Instance inst = pw::parse_instance(read_file(args.input));
  const auto* g = std::get_if<pw::EmbeddedGraph>(&inst);
  if (!g) throw InputError("minimize needs an embedded (PQ1) instance");
  const auto r = pw::minimize_facewidth(*g, args.seed);
  const bool pass = r.graph.num_edges() == r.expected_edges();
  std::cout << "k=" << r.face_width << " edges=" << r.graph.num_edges()
            << " expected=" << r.expected_edges() << " deletions=" << r.deletions
            << " contractions=" << r.contractions << ' ' << (pass ? "PASS" : "FAIL")
            << '\n';
  if (!args.out.empty()) write_output(args.out, pw::serialize_pq1(r.graph));
  return pass ? kPass : kViolation;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string op;
  std::string input;
  int cap = 6;
  int cap_n = 0;
  std::string assign;
  std::string csv;
};

std::string join(const std::vector<pw::VertexId>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

pw::oracle::Precoloring parse_assignments(const std::string& s) {
  pw::oracle::Precoloring p;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    int v = -1, c = -1;
    if (eq == std::string::npos ||
        std::from_chars(item.data(), item.data() + eq, v).ec != std::errc() ||
        std::from_chars(item.data() + eq + 1, item.data() + item.size(), c).ec !=
            std::errc())
      throw InputError("--assign expects v=c[,v=c...]");
    p.assignments.emplace_back(v, c);
  }
  return p;
}

int cmd_oracle(const OracleArgs& args) {
  namespace o = pw::oracle;
  const pw::Instance inst = pw::parse_instance(read_file(args.input));
  pw::AnalysisRow row;
  pw::Graph g;
  if (const auto* eg = std::get_if<pw::EmbeddedGraph>(&inst)) {
    g = eg->abstract_graph();
    pw::detail::family_from_label(eg->label(), row);
  } else {
    const auto& lg = std::get<pw::LabelledGraph>(inst);
    g = lg.graph;
    pw::detail::family_from_label(lg.label, row);
  }
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.ew_bound = pw::edge_width_bound(row.n);
  row.fw_bound = pw::face_width_bound(row.n);
  row.single_edge_bound = pw::single_edge_bound(g.max_degree(), row.n);

  int status = kPass;
  auto capped = [&](o::Status s) {
    if (s == o::Status::Ok) return false;
    std::cout << "status=" << o::to_string(s) << '\n';
    status = kCapExceeded;
    return true;
  };

  if (args.op == "odd-cycle") {
    const auto c = o::brute_shortest_odd_cycle(g);
    if (c.bipartite) {
      std::cout << "bipartite\n";
    } else {
      std::cout << "length=" << c.length << "\nvertices=" << join(c.vertices) << '\n';
      row.edge_width = pw::Width::of(c.length);
    }
  } else if (args.op == "min-oct") {
    const auto r = o::brute_min_oct(g, args.cap, budget());
    if (!capped(r.status)) {
      std::cout << "size=" << r.vertices.size() << "\nvertices=" << join(r.vertices) << '\n';
      row.oct_min = std::to_string(r.vertices.size());
    } else {
      row.oct_min = o::to_string(r.status);
    }
  } else if (args.op == "alpha") {
    const auto r = o::independence_number(g, args.cap_n ? args.cap_n : 40, budget());
    if (!capped(r.status)) {
      std::cout << "alpha=" << r.alpha << "\nvertices=" << join(r.witness) << '\n';
      row.alpha = std::to_string(r.alpha);
    } else {
      row.alpha = o::to_string(r.status);
    }
  } else if (args.op == "chromatic") {
    const auto r = o::chromatic_check(g, args.cap_n ? args.cap_n : 60, budget());
    if (!capped(r.status)) {
      std::cout << "three_colorable=" << (r.three_colorable ? "true" : "false") << '\n';
      if (r.four_coloring) {
        std::vector<pw::VertexId> c(r.four_coloring->begin(), r.four_coloring->end());
        std::cout << "four_coloring=" << join(c) << '\n';
      } else {
        std::cout << "four_coloring=none\n";
      }
    }
  } else if (args.op == "two-odd-cycles") {
    const auto r = o::has_two_disjoint_odd_cycles(g, args.cap_n ? args.cap_n : 14, budget());
    if (!capped(r.status)) {
      std::cout << "two_disjoint_odd_cycles=" << (r.found ? "true" : "false") << '\n';
      if (r.found)
        std::cout << "first=" << join(r.first) << "\nsecond=" << join(r.second) << '\n';
    }
  } else if (args.op == "precolor") {
    const auto r = o::precolor_extend(g, parse_assignments(args.assign));
    if (r.coloring) {
      std::vector<pw::VertexId> c(r.coloring->begin(), r.coloring->end());
      std::cout << "extension=" << join(c) << '\n';
    } else {
      const auto& ob = *r.obstruction;
      std::cout << "obstruction vertices=" << ob.vertices[0] << ' ' << ob.vertices[1]
                << ' ' << ob.vertices[2] << " colours=" << ob.colours[0] << ' '
                << ob.colours[1] << ' ' << ob.colours[2] << " side=" << ob.side
                << " common=" << ob.common[0] << ' ' << ob.common[1] << ' '
                << ob.common[2] << '\n';
    }
  } else {
    throw InputError("unknown oracle '" + args.op +
                     "' (odd-cycle, min-oct, alpha, chromatic, two-odd-cycles, precolor)");
  }
  if (!args.csv.empty()) write_output(args.csv, pw::csv_header() + pw::csv_line(row));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Widths and odd cycle transversals of projective-plane quadrangulations"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a family instance (PQ1, or AG1 for abstract Mycielski)");
  g->add_option("--family", gen.family, "grid | mycielski | fuzz")->required();
  g->add_option("--k", gen.k, "Grid size, Mycielski level count, or fuzz base grid size");
  g->add_option("--t", gen.t, "Mycielski base cycle C_{2t+1} (default t = k)");
  g->add_option("--seed", gen.seed, "Fuzz seed");
  g->add_option("--steps", gen.steps, "Fuzz vertex splits");
  g->add_flag("--embed", gen.embed, "Emit the Mycielski embedding as PQ1");
  g->add_option("-o", gen.out, "Output path (default stdout)");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Widths, bounds and certified transversals of one instance");
  a->add_option("input", an.input, "PQ1 or AG1 file")->required();
  a->add_flag("--with-oracle", an.with_oracle, "Add brute-force OCT and independence columns");
  a->add_option("--csv", an.csv, "Write the CSV row here instead of stdout");
  a->add_option("-o", an.out, "Write the verified certificates here");

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Sweep a family over a k range, or check certificates");
  v->add_option("input", ve.input, "Instance file (certificate mode)");
  v->add_option("--family", ve.family, "grid | mycielski | fuzz");
  v->add_option("--k-range", ve.range, "Inclusive range A..B");
  v->add_option("--seed", ve.seed, "Fuzz seed");
  v->add_option("--steps", ve.steps, "Fuzz vertex splits");
  v->add_flag("--with-oracle", ve.with_oracle, "Add brute-force columns");
  v->add_option("--csv", ve.csv, "Write the table here instead of stdout");
  v->add_option("--cert", ve.cert, "Certificate file to verify against the instance");

  MinimizeArgs mi;
  auto* mn = app.add_subcommand("minimize", "Delete/contract edges while face-width is kept");
  mn->add_option("input", mi.input, "PQ1 file")->required();
  mn->add_option("--seed", mi.seed, "Shuffle the edit order")->expected(1);
  mn->add_option("-o", mi.out, "Write the minimal scheme here");

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "Run a brute-force oracle");
  o->add_option("op", orc.op, "odd-cycle | min-oct | alpha | chromatic | two-odd-cycles | precolor")
      ->required();
  o->add_option("input", orc.input, "PQ1 or AG1 file")->required();
  o->add_option("--cap", orc.cap, "min-oct: largest size searched");
  o->add_option("--cap-n", orc.cap_n, "Vertex-count cap for alpha, chromatic, two-odd-cycles");
  o->add_option("--assign", orc.assign, "precolor: v=c[,v=c...] with colours 1..3");
  o->add_option("--csv", orc.csv, "Write a CSV row with the oracle columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*a) return cmd_analyze(an);
    if (*v) return cmd_verify(ve);
    if (*mn) return cmd_minimize(mi);
    if (*o) return cmd_oracle(orc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
