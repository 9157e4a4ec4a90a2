#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "maxmaxflow/bounds.hpp"
#include "maxmaxflow/chromatic.hpp"
#include "maxmaxflow/enumerate.hpp"
#include "maxmaxflow/flowcut.hpp"
#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/hunt.hpp"
#include "maxmaxflow/invariants.hpp"
#include "maxmaxflow_cli/cli.hpp"

#ifndef MAXMAXFLOW_VERSION
#define MAXMAXFLOW_VERSION "0.0.0"
#endif

namespace maxmaxflow::cli {

namespace {

struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;  // label, sha256

  void write(std::ostream& out) const {
    out << "# maxmaxflow " << MAXMAXFLOW_VERSION << "\n";
    out << "# command: " << command << "\n";
    out << "# argv:";
    for (const auto& a : argv) out << " " << a;
    out << "\n";
    if (seed) out << "# seed: " << *seed << "\n";
    for (const auto& [label, digest] : inputs) out << "# input: " << label << " sha256=" << digest << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedMultigraph load_graph(const std::string& path, Manifest& m) {
  const std::string text = read_file(path);
  m.inputs.emplace_back(path, sha256_hex(text));
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

WeightedMultigraph load_b64(const std::string& b64, Manifest& m) {
  const std::string text = base64_decode(b64);
  m.inputs.emplace_back("graph-b64", sha256_hex(text));
  return parse_graph(text);
}

EnumerationOptions enumeration_options() {
  EnumerationOptions o;
  if (const char* env = std::getenv("MAXMAXFLOW_WORKCAP")) {
    const std::string s(env);
    size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || v == 0)
      throw std::invalid_argument("MAXMAXFLOW_WORKCAP must be a positive integer, got '" + s + "'");
    o.work_cap = v;
  }
  return o;
}

std::string csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string q = "\"";
  for (char c : field) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string approx_str(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

std::string complex_str(const std::complex<long double>& z) {
  std::string s = approx_str(z.real());
  const long double im = z.imag();
  if (im != 0) s += (im < 0 ? "-" : "+") + approx_str(im < 0 ? -im : im) + "i";
  return s;
}

// Vertex flags shared by count, verify and suite.
struct AnchorFlags {
  std::string x, y;
  int p = 1;
  int r = 1;
  int edge = 0;
  std::string alpha = "2";
  std::string zeta;

  void add_to(CLI::App* app, bool bound_params) {
    app->add_option("--x", x, "anchor vertex list X (comma-separated ids); a single id also sets x");
    app->add_option("--y", y, "anchor vertex list Y; a single id also sets y");
    app->add_option("--p", p, "p for the H_p classes")->check(CLI::PositiveNumber);
    app->add_option("--r", r, "r for the H_{p,r} class")->check(CLI::PositiveNumber);
    if (bound_params) {
      app->add_option("--edge", edge, "edge id (1-based, file order) for the edge bounds");
      app->add_option("--alpha", alpha, "alpha in (1,2] as p/q");
      app->add_option("--zeta", zeta, "zeta for cor4.5, default 1/(2 Lambda)");
    }
  }

  BoundContext context(const WeightedMultigraph& g) const {
    BoundContext ctx;
    ctx.X = parse_vertex_list(x, g);
    ctx.Y = parse_vertex_list(y, g);
    if (ctx.X.size() == 1) ctx.x = ctx.X[0];
    if (ctx.Y.size() == 1) ctx.y = ctx.Y[0];
    ctx.p = p;
    ctx.r = r;
    if (edge != 0) {
      if (edge < 1 || edge > g.edge_count())
        throw std::invalid_argument("--edge must lie in 1.." + std::to_string(g.edge_count()));
      ctx.edge = edge - 1;
    }
    ctx.alpha = parse_rational(alpha);
    if (!zeta.empty()) ctx.zeta = parse_rational(zeta);
    ctx.enumeration = enumeration_options();
    return ctx;
  }
};

SubgraphClassSpec class_spec(const WeightedMultigraph& g, const std::string& kind_name, const AnchorFlags& f) {
  SubgraphClassSpec s;
  s.kind = parse_class_kind(kind_name);
  const VertexSet X = parse_vertex_list(f.x, g);
  const VertexSet Y = parse_vertex_list(f.y, g);
  auto single = [](const VertexSet& v, const char* flag) {
    if (v.size() != 1) throw std::invalid_argument(std::string(flag) + " must name exactly one vertex for this class");
    return v[0];
  };
  switch (s.kind) {
    case ClassKind::W:
    case ClassKind::SAW:
    case ClassKind::BlockPath:
      s.x = single(X, "--x");
      s.y = single(Y, "--y");
      break;
    case ClassKind::FPW:
    case ClassKind::FPSAW:
      s.x = single(X, "--x");
      s.Y = Y;
      break;
    default:
      s.X = X;
      s.Y = Y;
      break;
  }
  s.p = f.p;
  s.r = f.r;
  s.validate(g);
  return s;
}

void write_verdict_text(std::ostream& out, const BoundVerdict& v) {
  out << v.id << " " << verdict_name(v.verdict) << " M=" << v.M << "\n";
  if (v.shape == BoundShape::Pointwise) {
    out << "m = " << v.decisive_m << "\n";
    out << "a_m = " << to_string(v.partial_sum) << "\n";
    out << "bound_m = " << to_string(v.bound) << "\n";
  } else {
    if (v.enclosure) {
      out << "S_M in [" << to_string(v.enclosure->lo()) << ", " << to_string(v.enclosure->hi()) << "]\n";
      out << "precision_bits = " << v.precision_bits << "\n";
    } else {
      out << "S_M = " << to_string(v.partial_sum) << "\n";
    }
    out << "bound = " << to_string(v.bound) << "\n";
  }
  out << "ratio = " << to_string(v.ratio) << "\n";
  out << "discount = " << v.discount << "\n";
}

const char* kVerdictHeader = "id,shape,discount,M,decisive_m,S_M,S_M_hi,bound,ratio,verdict";

std::string verdict_row(const BoundVerdict& v) {
  std::ostringstream r;
  r << v.id << "," << (v.shape == BoundShape::Pointwise ? "pointwise" : "series") << "," << csv(v.discount) << ","
    << v.M << "," << v.decisive_m << "," << to_string(v.partial_sum) << ","
    << to_string(v.enclosure ? v.enclosure->hi() : v.partial_sum) << "," << to_string(v.bound) << ","
    << to_string(v.ratio) << "," << verdict_name(v.verdict);
  return r.str();
}

std::string padded(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maxmaxflow invariants, subgraph counts and bound verification", "maxmaxflow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MAXMAXFLOW_VERSION);

  Manifest manifest;
  manifest.argv = args;
  std::string graph_path, graph_b64, csv_path, kind_name, bound_id, conjecture, cut_set, family;
  AnchorFlags anchors;
  int M = 6;
  int cap = -1;
  long trials = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool blockwise = false;

  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "graph file")->required(); };
  auto add_m = [&](CLI::App* sub) {
    sub->add_option("-m,--m", M, "truncation order M")->check(CLI::NonNegativeNumber);
  };

  auto* inv = app.add_subcommand("invariants", "degree statistics, Lambda, degeneracies and the inequality chain");
  add_graph(inv);
  inv->add_option("--csv", csv_path, "also write the chain as CSV to this file ('-' for stdout instead of text)");
  inv->add_option("--cap", cap, "vertex cap for the exponential invariants");

  auto* lam = app.add_subcommand("lambda", "the maxmaxflow Lambda(G,w)");
  add_graph(lam);
  lam->add_flag("--blockwise", blockwise, "compute block by block");

  auto* ght = app.add_subcommand("ghtree", "a Gomory-Hu tree in the graph text format");
  add_graph(ght);

  auto* cp = app.add_subcommand("cutpair", "the two leaf cuts of the Gomory-Hu subtree spanned by a vertex set");
  add_graph(cp);
  cp->add_option("--set", cut_set, "vertex set X, |X| >= 2")->required();

  auto* cnt = app.add_subcommand("count", "weighted count series a_0..a_M of a subgraph class");
  add_graph(cnt);
  add_m(cnt);
  cnt->add_option("--class", kind_name, "W, FPW, SAW, FPSAW, T, F, H, Hp, Hpr, C, BT, BF, BF*, B, BlockPath")
      ->required();
  anchors.add_to(cnt, false);
  cnt->add_option("--csv", csv_path, "also write the series as CSV to this file");

  auto* ver = app.add_subcommand("verify", "check one bound or conjecture through order M");
  ver->add_option("graph", graph_path, "graph file");
  ver->add_option("--graph-b64", graph_b64, "graph text, base64 encoded (as in hunt output)");
  add_m(ver);
  ver->add_option("--bound", bound_id, "bound id, see 'suite --list'")->required();
  anchors.add_to(ver, true);

  auto* sui = app.add_subcommand("suite", "every applicable theorem verifier as CSV");
  sui->add_option("graph", graph_path, "graph file");
  add_m(sui);
  anchors.add_to(sui, true);
  bool list = false;
  sui->add_flag("--list", list, "list the bound ids and exit");

  auto* hun = app.add_subcommand("hunt", "random search for near-violations of a conjecture");
  HuntConfig hc;
  hun->add_option("--conjecture", conjecture, "5.6, 5.7, 7.9, 7.10 or 7.11")->required();
  hun->add_option("--trials", trials, "number of trials")->default_val(1000);
  hun->add_option("--seed", seed, "base seed")->default_val(1);
  hun->add_option("--jobs", jobs, "worker threads")->default_val(1);
  add_m(hun);
  hun->add_option("--top", hc.leaderboard_size, "leaderboard size")->default_val(10);
  hun->add_option("--max-n", hc.max_vertices, "max vertices of random instances")->default_val(6);
  hun->add_option("--max-edges", hc.max_edges, "max edges of random instances")->default_val(9);
  hun->add_option("--max-mult", hc.max_multiplicity, "max parallel multiplicity")->default_val(4);

  auto* chr = app.add_subcommand("chromatic", "chromatic polynomial and its roots");
  add_graph(chr);
  chr->add_option("--cap", cap, "vertex cap");

  auto* exp8 = app.add_subcommand("explore8", "(Lambda, max|root|) records over random instances as CSV");
  ExploreConfig ec;
  exp8->add_option("--trials", trials, "number of instances")->default_val(100);
  exp8->add_option("--seed", seed, "base seed")->default_val(1);
  exp8->add_option("--jobs", jobs, "worker threads")->default_val(1);
  exp8->add_option("--min-n", ec.min_vertices, "min vertices")->default_val(3);
  exp8->add_option("--max-n", ec.max_vertices, "max vertices")->default_val(12);
  exp8->add_option("--max-mult", ec.max_multiplicity, "max parallel multiplicity")->default_val(3);

  auto* gen = app.add_subcommand("generate", "emit a named graph family in the graph text format");
  FamilySpec fs;
  std::string w_text = "1", weights_text, edge_prob = "1/2";
  gen->add_option("family", family,
                  "path, cycle, star, wheel, complete, tree, theta, k2s, parallel-path, parallel-tree, "
                  "regular-tree, stars, random")
      ->required();
  gen->add_option("--n", fs.n, "vertex count");
  gen->add_option("--r", fs.r, "arm / branch count");
  gen->add_option("--s", fs.s, "parallel multiplicity");
  gen->add_option("--k", fs.k, "number of copies");
  gen->add_option("--depth", fs.depth, "tree depth");
  gen->add_option("--w", w_text, "weight parameter");
  gen->add_option("--weights", weights_text, "comma-separated edge weights");
  gen->add_option("--seed", seed, "seed for random families")->default_val(1);
  gen->add_option("--max-mult", fs.random.max_multiplicity, "random: max parallel multiplicity")->default_val(1);
  gen->add_option("--edge-prob", edge_prob, "random: pair probability p/q");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (inv->parsed()) {
      manifest.command = "invariants";
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      ChainOptions opt;
      if (cap > 0) opt.lambda_tilde_cap = opt.degeneracy_cap = cap;
      const InvariantReport rep = inequality_chain(g, opt);
      if (csv_path != "-") {
        auto row = [&](const std::string& name, const std::string& value) {
          out << padded(name, 14) << value << "\n";
        };
        row("n", std::to_string(rep.n));
        row("Delta", to_string(rep.Delta));
        row("Delta2", to_string(rep.Delta2));
        row("Delta_{n-1}", to_string(rep.Delta_n1));
        row("delta", to_string(rep.delta));
        row("delta2", to_string(rep.delta2));
        row("Lambda", to_string(rep.Lambda));
        row("Lambda~", rep.Lambda_tilde ? to_string(*rep.Lambda_tilde) : "skipped (cap)");
        row("D", to_string(rep.D));
        row("D2", rep.D2 ? to_string(*rep.D2) : "skipped (cap)");
        out << "\n";
        size_t width = 0;
        for (const auto& v : rep.verdicts) width = std::max(width, v.name.size());
        for (const auto& v : rep.verdicts)
          out << padded(v.name, width + 2) << padded(to_string(v.lhs), 10) << (v.equality ? "== " : "<= ")
              << padded(to_string(v.rhs), 10) << (v.holds ? "holds" : "FAILS") << "\n";
      }
      if (!csv_path.empty()) {
        std::ofstream file;
        if (csv_path != "-") {
          file.open(csv_path);
          if (!file) throw std::runtime_error("cannot write '" + csv_path + "'");
        }
        std::ostream& c = csv_path == "-" ? out : file;
        manifest.write(c);
        c << "inequality,lhs,relation,rhs,holds,slack\n";
        for (const auto& v : rep.verdicts)
          c << csv(v.name) << "," << to_string(v.lhs) << "," << (v.equality ? "==" : "<=") << "," << to_string(v.rhs)
            << "," << (v.holds ? "true" : "false") << "," << to_string(v.slack) << "\n";
      }
      return rep.all_hold() ? kExitOk : kExitViolation;
    }

    if (lam->parsed()) {
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      out << to_string(blockwise ? maxmaxflow_blockwise(g) : maxmaxflow(g)) << "\n";
      return kExitOk;
    }

    if (ght->parsed()) {
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      out << serialize_graph(tree_as_graph(gomory_hu(g)));
      return kExitOk;
    }

    if (cp->parsed()) {
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      const CutPair c = cut_pair(g, parse_vertex_list(cut_set, g));
      out << "x1 = " << c.x1 + 1 << "\n";
      out << "side1 = {" << format_vertex_list(c.side1) << "}\n";
      out << "weight1 = " << to_string(c.weight1) << "\n";
      out << "x2 = " << c.x2 + 1 << "\n";
      out << "side2 = {" << format_vertex_list(c.side2) << "}\n";
      out << "weight2 = " << to_string(c.weight2) << "\n";
      return kExitOk;
    }

    if (cnt->parsed()) {
      manifest.command = "count";
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      const SubgraphClassSpec spec = class_spec(g, kind_name, anchors);
      const CountSeries s = class_count_series(g, spec, M, enumeration_options());
      for (const Rational& v : s.values) out << to_string(v) << "\n";
      if (!csv_path.empty()) {
        std::ofstream file(csv_path);
        if (!file) throw std::runtime_error("cannot write '" + csv_path + "'");
        manifest.write(file);
        file << "# class: " << spec.describe() << "\n";
        file << "m,a_m\n";
        for (size_t m = 0; m < s.values.size(); ++m) file << m << "," << to_string(s.values[m]) << "\n";
      }
      return kExitOk;
    }

    if (ver->parsed()) {
      if (graph_path.empty() == graph_b64.empty())
        throw std::invalid_argument("verify needs exactly one of a graph file or --graph-b64");
      const WeightedMultigraph g = graph_b64.empty() ? load_graph(graph_path, manifest) : load_b64(graph_b64, manifest);
      const BoundVerdict v = evaluate_bound(g, bound_id, anchors.context(g), M);
      write_verdict_text(out, v);
      return v.verdict == Verdict::Violation ? kExitViolation : kExitOk;
    }

    if (sui->parsed()) {
      if (list) {
        for (const auto& b : bound_catalog())
          out << padded(b.id, 10) << (b.conjecture ? "conjecture  " : "theorem     ") << b.statement << "\n";
        return kExitOk;
      }
      if (graph_path.empty()) throw std::invalid_argument("suite needs a graph file");
      manifest.command = "suite";
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      const SuiteResult r = run_suite(g, anchors.context(g), M);
      manifest.write(out);
      for (const auto& [id, why] : r.skipped) out << "# skipped " << id << ": " << why << "\n";
      out << kVerdictHeader << "\n";
      for (const auto& v : r.verdicts) out << verdict_row(v) << "\n";
      return r.any_violation() ? kExitViolation : kExitOk;
    }

    if (hun->parsed()) {
      manifest.command = "hunt";
      manifest.seed = seed;
      hc.conjecture = conjecture;
      hc.trials = trials;
      hc.seed = seed;
      hc.jobs = jobs;
      hc.M = M;
      hc.enumeration = enumeration_options();
      const HuntResult res = hunt(hc);
      manifest.write(out);
      out << "# trials: " << res.trials << "\n";
      out << "# violations: " << res.violations << "\n";
      out << "section,rank,trial,trial_seed,family,n,edges,X,Y,M,verdict,S_M,S_M_hi,bound,ratio,margin,graph_b64\n";
      auto emit = [&](const char* section, size_t rank, const ConjectureFinding& f) {
        const BoundVerdict& v = f.verdict;
        out << section << "," << rank << "," << f.trial << "," << f.trial_seed << "," << csv(f.family) << ","
            << f.graph.vertex_count() << "," << f.graph.edge_count() << "," << csv(format_vertex_list(f.anchors.X))
            << "," << csv(format_vertex_list(f.anchors.Y)) << "," << v.M << "," << verdict_name(v.verdict) << ","
            << to_string(v.partial_sum) << "," << to_string(v.enclosure ? v.enclosure->hi() : v.partial_sum) << ","
            << to_string(v.bound) << "," << to_string(v.ratio) << "," << to_string(f.margin) << ","
            << base64_encode(serialize_graph(f.graph)) << "\n";
      };
      for (size_t i = 0; i < res.leaderboard.size(); ++i) emit("leader", i + 1, res.leaderboard[i]);
      size_t fam = 0;
      for (const auto& [name, f] : res.family_best) emit("family", ++fam, f);
      for (size_t i = 0; i < res.violating.size(); ++i) emit("violation", i + 1, res.violating[i]);
      return res.violations > 0 ? kExitViolation : kExitOk;
    }

    if (chr->parsed()) {
      const WeightedMultigraph g = load_graph(graph_path, manifest);
      const ChromaticPolynomial p = chromatic_polynomial(g, cap > 0 ? cap : kChromaticDefaultCap);
      out << "P(q) = " << p.str() << "\n";
      out << "coefficients (q^0..q^" << p.degree() << "):";
      for (const Integer& c : p.coefficients) out << " " << to_string(c);
      out << "\n";
      const ChromaticRoots roots = chromatic_roots(p);
      out << "integer roots:";
      for (const Integer& r : roots.integer_roots) out << " " << to_string(r);
      out << "\n";
      out << "~roots:";
      for (const auto& z : roots.roots) out << " " << complex_str(z);
      out << "\n";
      out << "~max|root| = " << approx_str(roots.max_abs) << "\n";
      out << "~residual = " << approx_str(roots.residual) << "\n";
      return kExitOk;
    }

    if (exp8->parsed()) {
      manifest.command = "explore8";
      manifest.seed = seed;
      ec.trials = trials;
      ec.seed = seed;
      ec.jobs = jobs;
      const ExploreResult res = explore_conjecture8(ec);
      manifest.write(out);
      out << "trial,trial_seed,family,n,edges,Lambda,Delta,Delta2,~max_abs_root,~ratio,coefficients,graph_b64\n";
      for (const auto& r : res.records) {
        std::string coeffs;
        for (const Integer& c : r.polynomial.coefficients) coeffs += (coeffs.empty() ? "" : " ") + to_string(c);
        const long double lam_ld = static_cast<long double>(approx(r.Lambda));
        out << r.trial << "," << r.trial_seed << "," << csv(r.family) << "," << r.graph.vertex_count() << ","
            << r.graph.edge_count() << "," << to_string(r.Lambda) << "," << to_string(r.Delta) << ","
            << to_string(r.Delta2) << "," << approx_str(r.max_abs_root) << ","
            << (lam_ld > 0 ? approx_str(r.max_abs_root / lam_ld) : std::string("")) << "," << coeffs << ","
            << base64_encode(serialize_graph(r.graph)) << "\n";
      }
      for (const auto& b : res.buckets)
        out << "# bucket Lambda=" << to_string(b.Lambda) << " count=" << b.count
            << " ~max_ratio=" << approx_str(b.max_ratio) << " best_trial=" << b.best_trial << "\n";
      return kExitOk;
    }

    if (gen->parsed()) {
      fs.family = family;
      fs.w = parse_rational(w_text);
      fs.seed = seed;
      if (!weights_text.empty()) {
        std::istringstream in(weights_text);
        for (std::string item; std::getline(in, item, ',');) fs.weights.push_back(parse_rational(item));
      }
      if (family == "random") {
        fs.random.min_vertices = fs.random.max_vertices = fs.n;
        const Rational p = parse_rational(edge_prob);
        if (p < 0 || p > 1) throw std::invalid_argument("--edge-prob must lie in [0,1]");
        fs.random.edge_num = p.get_num().get_ui();
        fs.random.edge_den = p.get_den().get_ui();
        if (!fs.weights.empty()) fs.random.weights = fs.weights;
      }
      out << serialize_graph(generate(fs));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace maxmaxflow::cli
