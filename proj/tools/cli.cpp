#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "nlcut/dinkelbach.hpp"
#include "nlcut/eigen.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/graph_io.hpp"
#include "nlcut/linear_spectrum.hpp"
#include "nlcut/nodal.hpp"
#include "nlcut/oracles.hpp"
#include "nlcut/theorem_suite.hpp"

namespace nlcut::cli {

namespace {

using Json = nlohmann::ordered_json;

/// A command result: the JSON document plus a flat table for csv and table output.
struct Output {
  Json doc;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Raw text printed as-is in text mode.
  std::optional<std::string> text;
};

struct Globals {
  std::string format = "auto";
  std::optional<int> cap;
  std::uint64_t seed = 1;
  bool quiet = false;
  int jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json sets_json(const std::vector<VertexSet>& sets) {
  Json arr = Json::array();
  for (VertexSet s : sets) arr.push_back(s.ids());
  return arr;
}

Json certificate_json(const CutCertificate& c) {
  return Json{{"kind", to_string(c.kind)}, {"sets", sets_json(c.sets)}, {"value", to_string(c.value)}};
}

std::string sets_text(const std::vector<VertexSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += " ";
    out += to_string(sets[i]);
  }
  return out;
}

Json vector_json(const RVector& x) {
  Json arr = Json::array();
  for (const Rational& v : x) arr.push_back(to_string(v));
  return arr;
}

std::string vector_text(const RVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i]);
  }
  return out;
}

Graph graph_from_json(const Json& doc) {
  int n = doc.at("n").get<int>();
  std::vector<Edge> edges;
  for (const Json& e : doc.at("edges")) {
    Rational w = e.size() > 2 ? parse_rational(e[2].is_string() ? e[2].get<std::string>() : e[2].dump()) : Rational(1);
    edges.push_back({e[0].get<int>(), e[1].get<int>(), w});
  }
  return Graph(n, edges);
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v, to_string(e.w)}));
  return Json{{"n", g.n()}, {"edges", edges}};
}

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph load_graph(const std::string& path, const std::string& measure_path, std::istream& in) {
  std::string text = path.empty() || path == "-" ? read_stream(in) : read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  Graph g;
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(1, e.what());
    }
    g = graph_from_json(doc);
  } else {
    g = parse_graph(text);
  }
  if (!measure_path.empty()) g = g.with_measure(parse_measure(read_file(measure_path), g.n()));
  return g;
}

RVector load_vector(const std::string& path, const std::string& inline_values, int n) {
  if (!inline_values.empty()) {
    RVector x;
    std::stringstream ss(inline_values);
    std::string token;
    while (std::getline(ss, token, ',')) x.push_back(parse_rational(token));
    if (static_cast<int>(x.size()) != n) {
      throw Error(ErrorCode::invalid_argument, "--x has " + std::to_string(x.size()) + " entries, graph has " +
                                                   std::to_string(n) + " vertices");
    }
    return x;
  }
  if (path.empty()) throw UsageError("a vector is required: --vector FILE or --x v0,v1,...");
  return parse_vector(read_file(path), n);
}

EnumerationConfig enum_config(const Globals& g) { return EnumerationConfig{g.cap, g.jobs}; }

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "text" && o.text) {
    out << *o.text;
    return;
  }
  if (format == "json" || (format == "text" && !o.text)) {
    out << o.doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    for (std::size_t i = 0; i < o.columns.size(); ++i) out << (i ? "," : "") << quote(o.columns[i]);
    out << "\n";
    for (const auto& row : o.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
      out << "\n";
    }
    return;
  }
  // table
  std::vector<std::size_t> width(o.columns.size());
  for (std::size_t i = 0; i < o.columns.size(); ++i) width[i] = o.columns[i].size();
  for (const auto& row : o.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << "\n";
  };
  line(o.columns);
  for (const auto& row : o.rows) line(row);
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// ---------------------------------------------------------------- commands

Output cmd_gen(const std::string& family, int k, double p, const Globals& g) {
  Graph graph = family == "random" ? random_connected_graph(k, p, g.seed) : generate(family, k);
  Output o;
  o.doc = graph_json(graph);
  o.text = emit_graph(graph);
  o.columns = {"u", "v", "w"};
  for (const Edge& e : graph.edges()) o.rows.push_back({std::to_string(e.u), std::to_string(e.v), to_string(e.w)});
  return o;
}

Output cmd_oracle(const std::string& name, const Graph& graph, int k, bool partition, const Globals& g) {
  EnumerationConfig cfg = enum_config(g);
  CutCertificate c;
  if (name == "cheeger") {
    c = cheeger(graph, cfg);
  } else if (name == "maxcut") {
    c = maxcut(graph, cfg);
  } else if (name == "mincut") {
    c = mincut(graph, cfg);
  } else if (name == "anti_cheeger") {
    c = anti_cheeger(graph, cfg);
  } else if (name == "dual_cheeger") {
    c = dual_cheeger(graph, cfg);
  } else if (name == "modified_dual_cheeger") {
    c = modified_dual_cheeger(graph, cfg);
  } else if (name == "k_way_dual_cheeger") {
    c = k_way_dual_cheeger(graph, k, cfg);
  } else if (name == "minmax_k_cut") {
    c = minmax_k_cut(graph, k, partition, cfg);
  } else {
    c = ratio_oracle(parse_problem(name), graph, cfg);
  }
  Output o;
  o.doc = Json{{"oracle", name},
               {"value", to_string(c.value)},
               {"sets", sets_json(c.sets)},
               {"certificate", certificate_json(c)}};
  o.columns = {"oracle", "value", "kind", "sets"};
  o.rows.push_back({name, to_string(c.value), to_string(c.kind), sets_text(c.sets)});
  return o;
}

Output cmd_cut(const std::string& name, const Graph& graph, const std::string& inner, const std::string& x0_path,
               int restarts, const Globals& g) {
  DinkelbachOptions opts;
  opts.inner = parse_inner(inner);
  opts.cap = g.cap;
  opts.workers = g.jobs;
  opts.seed = g.seed;
  opts.restarts = restarts;
  std::optional<RVector> x0;
  if (!x0_path.empty()) x0 = parse_vector(read_file(x0_path), graph.n());
  ProblemId id = parse_problem(name);
  DinkelbachTrace t = solve(ratio_problem(id), graph, x0, opts);

  Json trace = Json::array();
  Output o;
  o.columns = {"k", "r", "inner_value", "x"};
  for (const DinkelbachStep& s : t.iterations) {
    trace.push_back(Json{{"k", s.k}, {"r", to_string(s.r)}, {"inner_value", to_string(s.inner_value)}, {"x", vector_json(s.x)}});
    o.rows.push_back({std::to_string(s.k), to_string(s.r), to_string(s.inner_value), vector_text(s.x)});
  }
  o.doc = Json{{"problem", to_string(id)},
               {"inner", to_string(t.inner)},
               {"value", to_string(t.final.value)},
               {"exact", t.exact},
               {"label", t.exact ? "exact" : "heuristic"},
               {"converged", t.converged},
               {"certificate", certificate_json(t.final)},
               {"trace", trace}};
  return o;
}

Output cmd_verify(const std::string& name, const Graph& graph, const std::string& lambda_text, const RVector& x,
                  bool raw) {
  EigenproblemId id = parse_eigenproblem(name);
  Rational lambda;
  try {
    lambda = parse_rational(lambda_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
  EigenpairReport r = verify(id, graph, lambda, x, VerifyOptions{raw});
  Json doc{{"problem", to_string(id)}, {"lambda", to_string(lambda)}, {"x", vector_json(x)}, {"verdict", r.verdict}};
  if (r.raw_form) doc["raw_form"] = true;
  if (r.verdict) {
    Json w;
    if (!r.witness.z.empty()) w["z"] = vector_json(r.witness.z);
    if (!r.witness.z_plus.empty()) w["z_plus"] = vector_json(r.witness.z_plus);
    if (!r.witness.v.empty()) w["v"] = vector_json(r.witness.v);
    if (!r.witness.s.empty()) w["s"] = vector_json(r.witness.s);
    if (!r.witness.p.empty()) w["p"] = vector_json(r.witness.p);
    if (r.witness.c_x) w["c_x"] = to_string(*r.witness.c_x);
    doc["witness"] = w;
  } else {
    doc["violated"] = r.violated;
  }
  bool defined = true;
  try {
    doc["rayleigh_consistent"] = rayleigh_consistency(id, graph, lambda, x);
  } catch (const Error&) {
    defined = false;
  }
  if (!defined) doc["rayleigh_consistent"] = nullptr;
  Output o;
  o.doc = doc;
  o.columns = {"problem", "lambda", "verdict"};
  o.rows.push_back({to_string(id), to_string(lambda), r.verdict ? "true" : "false"});
  return o;
}

Json nodal_json(const NodalReport& r) {
  Json comps = Json::array();
  for (const SupNormComponent& c : r.sup_components) comps.push_back(Json{{"a", c.a.ids()}, {"b", c.b.ids()}});
  return Json{{"convention", to_string(r.convention)},
              {"strong_pos", sets_json(r.strong_pos)},
              {"strong_neg", sets_json(r.strong_neg)},
              {"support_domains", sets_json(r.support_domains)},
              {"d_plus", r.d_plus.ids()},
              {"d_minus", r.d_minus.ids()},
              {"d_zero", r.d_zero.ids()},
              {"pm_domains", sets_json(r.pm_domains)},
              {"null_domains", sets_json(r.null_domains)},
              {"sup_components", comps},
              {"S", r.S},
              {"S0", r.S0},
              {"Sprime", r.Sprime},
              {"N_nonsingleton", r.N_nonsingleton}};
}

Output cmd_nodal(const Graph& graph, const RVector& x, const std::string& convention) {
  NodalReport r = analyze(graph, x, parse_convention(convention));
  Output o;
  o.doc = nodal_json(r);
  o.columns = {"field", "value"};
  o.rows = {{"pm_domains", sets_text(r.pm_domains)},
            {"null_domains", sets_text(r.null_domains)},
            {"S", std::to_string(r.S)},
            {"S0", std::to_string(r.S0)},
            {"Sprime", std::to_string(r.Sprime)},
            {"N_nonsingleton", std::to_string(r.N_nonsingleton)}};
  return o;
}

Output cmd_spectrum(const Graph& graph, bool vectors) {
  Spectrum s = normalized_laplacian_spectrum(graph, vectors);
  Output o;
  o.doc = Json{{"eigenvalues", s.eigenvalues}, {"residual_bound", s.residual_bound}};
  if (s.eigenvectors) o.doc["eigenvectors"] = *s.eigenvectors;
  o.columns = {"index", "eigenvalue"};
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) o.rows.push_back({std::to_string(i + 1), fixed(s.eigenvalues[i])});
  return o;
}

Output cmd_check(const Graph& graph, const std::string& suite, const Globals& g) {
  InequalityOptions opts;
  opts.cap = g.cap;
  opts.workers = g.jobs;
  if (suite != "all") opts.kinds = {parse_inequality_kind(suite)};
  Json reports = Json::array();
  Output o;
  o.columns = {"name", "k", "lhs", "mid", "rhs", "holds"};
  bool all = true;
  for (const InequalityReport& r : inequality_suite(graph, opts)) {
    Json j{{"name", r.name}};
    if (r.k) j["k"] = *r.k;
    j["lhs"] = r.lhs;
    j["mid"] = r.mid;
    j["rhs"] = r.rhs;
    if (!r.lhs_exact.empty()) j["lhs_exact"] = r.lhs_exact;
    if (!r.mid_exact.empty()) j["mid_exact"] = r.mid_exact;
    if (!r.rhs_exact.empty()) j["rhs_exact"] = r.rhs_exact;
    j["holds"] = r.holds;
    j["slack"] = r.slack;
    reports.push_back(j);
    all = all && r.holds;
    o.rows.push_back({r.name, r.k ? std::to_string(*r.k) : "", fixed(r.lhs), fixed(r.mid), fixed(r.rhs),
                      r.holds ? "true" : "false"});
  }
  o.doc = Json{{"all_hold", all}, {"reports", reports}};
  return o;
}

Output cmd_scan(const std::string& name, const Graph& graph, const std::string& family, bool vectors,
                const Globals& g) {
  EigenproblemId id = parse_eigenproblem(name);
  ScanOptions opts;
  opts.cap = g.cap;
  opts.workers = g.jobs;
  if (family == "binary") opts.family = CandidateFamily::binary;
  if (family == "ternary") opts.family = CandidateFamily::ternary;
  Output o;
  if (vectors) {
    Json pairs = Json::array();
    o.columns = {"lambda", "x"};
    for (const EigenpairReport& r : eigenvector_scan(id, graph, opts)) {
      pairs.push_back(Json{{"lambda", to_string(r.lambda)}, {"x", vector_json(r.x)}});
      o.rows.push_back({to_string(r.lambda), vector_text(r.x)});
    }
    o.doc = Json{{"problem", to_string(id)}, {"eigenpairs", pairs}};
    return o;
  }
  Json points = Json::array();
  o.columns = {"lambda", "witness"};
  for (const SpectrumPoint& p : spectrum_scan(id, graph, opts)) {
    points.push_back(Json{{"lambda", to_string(p.lambda)}, {"witness", certificate_json(p.witness)}});
    o.rows.push_back({to_string(p.lambda), sets_text(p.witness.sets)});
  }
  o.doc = Json{{"problem", to_string(id)}, {"spectrum", points}};
  return o;
}

Output cmd_suite(const std::string& dir, const Globals& g, std::ostream& err) {
  std::vector<CorpusEntry> corpus = load_corpus(dir);
  SuiteOptions opts;
  opts.workers = g.jobs;
  if (g.cap) opts.exhaustive_cap = *g.cap;
  using Check = std::function<CriterionResult()>;
  std::vector<Check> checks{
      [&] { return check_ratio_equivalence(corpus, opts); },   [&] { return check_dinkelbach_exactness(corpus, opts); },
      [&] { return check_eigenpair_constructors(corpus, opts); }, [&] { return check_spectral_identities(corpus, opts); },
      [&] { return check_structure_theorems(corpus, opts); },  [&] { return check_star_triangle(opts); },
      [&] { return check_inequalities(corpus, opts); },        [&] { return check_petersen(opts); }};
  Json criteria = Json::array();
  Output o;
  o.columns = {"id", "name", "checked", "failed", "status"};
  bool all = true;
  for (const Check& check : checks) {
    CriterionResult r = check();
    if (!g.quiet) err << "criterion " << r.id << " " << r.name << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
    criteria.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"checked", r.checked},
                            {"failed", r.failed},
                            {"passed", r.passed()},
                            {"failures", r.failures}});
    o.rows.push_back({std::to_string(r.id), r.name, std::to_string(r.checked), std::to_string(r.failed),
                      r.passed() ? "pass" : "fail"});
    all = all && r.passed();
  }
  Json graphs = Json::array();
  for (const CorpusEntry& e : corpus) graphs.push_back(e.name);
  o.doc = Json{{"corpus", graphs}, {"all_passed", all}, {"criteria", criteria}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph cut, nonlinear eigenpair and nodal domain toolkit", "nlcut"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::optional<int> cap;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table", "text"}));
  app.add_option("--cap", cap, "Largest vertex count for exhaustive searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--jobs", g.jobs, "Worker threads; output does not depend on it")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress progress messages");

  std::string graph_path, measure_path, vector_path, inline_x;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_path, "Edge list file; '-' or absent reads stdin");
    sub->add_option("--measure", measure_path, "Vertex measure file of 'i mu_i' lines");
  };
  auto add_vector = [&](CLI::App* sub) {
    sub->add_option("--vector", vector_path, "Vector file of 'i value' lines");
    sub->add_option("--x", inline_x, "Vector as comma-separated rationals");
  };

  std::function<Output()> action;

  auto* gen = app.add_subcommand("gen", "Emit a generated graph");
  std::string family;
  int size = 0;
  double prob = 0.3;
  gen->add_option("family", family, "path, cycle, complete, star, petersen, star_triangle, random")->required();
  gen->add_option("k", size, "Size parameter");
  gen->add_option("--p", prob, "Extra edge probability for random graphs")->check(CLI::Range(0.0, 1.0));
  gen->callback([&] { action = [&] { return cmd_gen(family, size, prob, g); }; });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive combinatorial constant with certificate");
  std::string oracle_name;
  int oracle_k = 2;
  bool partition = false;
  oracle->add_option("name", oracle_name, "Oracle or ratio problem name")->required();
  oracle->add_option("--k", oracle_k, "Number of pairs or blocks");
  oracle->add_flag("--partition", partition, "Blocks must cover V (minmax_k_cut)");
  add_graph(oracle);
  oracle->callback([&] {
    action = [&] { return cmd_oracle(oracle_name, load_graph(graph_path, measure_path, in), oracle_k, partition, g); };
  });

  auto* cut = app.add_subcommand("cut", "Dinkelbach iteration for a ratio problem");
  std::string cut_problem, inner = "exact", x0_path;
  int restarts = 16;
  cut->add_option("problem", cut_problem, "Ratio problem")->required();
  cut->add_option("--inner", inner, "exact or flip")->check(CLI::IsMember({"exact", "flip", "exact_enum", "local_flip"}));
  cut->add_option("--x0", x0_path, "Start vector file");
  cut->add_option("--restarts", restarts, "Random restarts of the flip search")->check(CLI::NonNegativeNumber);
  add_graph(cut);
  cut->callback([&] {
    action = [&] { return cmd_cut(cut_problem, load_graph(graph_path, measure_path, in), inner, x0_path, restarts, g); };
  });

  auto* ver = app.add_subcommand("verify", "Exact eigenpair verification with witness");
  std::string ver_problem, lambda_text;
  bool raw = false;
  ver->add_option("problem", ver_problem, "Eigenproblem")->required();
  ver->add_option("--lambda", lambda_text, "Eigenvalue as p/q")->required();
  ver->add_flag("--raw", raw, "Use the sign form of the 1-Laplacian system");
  add_graph(ver);
  add_vector(ver);
  ver->callback([&] {
    action = [&] {
      Graph graph = load_graph(graph_path, measure_path, in);
      return cmd_verify(ver_problem, graph, lambda_text, load_vector(vector_path, inline_x, graph.n()), raw);
    };
  });

  auto* nod = app.add_subcommand("nodal", "Nodal domain statistics of a vector");
  std::string convention = "sign_based";
  nod->add_option("--convention", convention, "sign_based, support_based or sup_norm_based");
  add_graph(nod);
  add_vector(nod);
  nod->callback([&] {
    action = [&] {
      Graph graph = load_graph(graph_path, measure_path, in);
      return cmd_nodal(graph, load_vector(vector_path, inline_x, graph.n()), convention);
    };
  });

  auto* spec = app.add_subcommand("spectrum", "Normalized Laplacian eigenvalues");
  bool with_vectors = false;
  spec->add_flag("--vectors", with_vectors, "Include eigenvectors");
  add_graph(spec);
  spec->callback([&] { action = [&] { return cmd_spectrum(load_graph(graph_path, measure_path, in), with_vectors); }; });

  auto* chk = app.add_subcommand("check", "Spectral inequality reports");
  std::string suite_name = "all";
  chk->add_option("--suite", suite_name, "all, cheeger, dual, delorme_poljak, kway, forest, multiplicity")
      ->check(CLI::IsMember({"all", "cheeger", "dual", "delorme_poljak", "kway", "forest", "multiplicity"}));
  add_graph(chk);
  chk->callback([&] { action = [&] { return cmd_check(load_graph(graph_path, measure_path, in), suite_name, g); }; });

  auto* scan = app.add_subcommand("scan", "Eigenvalues reached by 0/+-1 vectors");
  std::string scan_problem, scan_family = "auto";
  bool scan_vectors = false;
  scan->add_option("problem", scan_problem, "Eigenproblem")->required();
  scan->add_option("--family", scan_family, "auto, binary or ternary")->check(CLI::IsMember({"auto", "binary", "ternary"}));
  scan->add_flag("--vectors", scan_vectors, "List every verified vector");
  add_graph(scan);
  scan->callback([&] {
    action = [&] { return cmd_scan(scan_problem, load_graph(graph_path, measure_path, in), scan_family, scan_vectors, g); };
  });

  auto* suite = app.add_subcommand("suite", "All acceptance checks over a corpus directory");
  std::string corpus_dir;
  suite->add_option("--corpus", corpus_dir, "Directory of *.txt graphs")->required();
  suite->callback([&] { action = [&] { return cmd_suite(corpus_dir, g, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  g.cap = cap;
  std::string format = g.format;
  if (format == "auto") format = gen->parsed() ? "text" : "json";

  try {
    Output o = action();
    emit(o, format, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nlcut::cli
