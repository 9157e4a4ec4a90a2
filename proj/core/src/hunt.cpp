#include "maxmaxflow/hunt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "maxmaxflow/generate.hpp"
#include "maxmaxflow/rng.hpp"

namespace maxmaxflow {

namespace {

const std::vector<Rational>& weight_pool() {
  static const std::vector<Rational> pool{Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  return pool;
}

bool forest_like(const std::string& c) { return c == "5.6" || c == "7.9" || c == "7.10"; }

VertexSet random_subset(int n, Rng& rng) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng.chance(1, 2)) s.push_back(v);
  return s;
}

// Anchors away from the degenerate cases where the sum equals the bound by definition:
// X \ Y nonempty for the forest conjectures, |X| >= 2 for the tree conjectures.
void random_anchors(const std::string& c, int n, Rng& rng, BoundContext& ctx) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (forest_like(c)) {
      ctx.Y = random_subset(n, rng);
      ctx.X = random_subset(n, rng);
      if (!ctx.Y.empty() && !set_difference(ctx.X, ctx.Y).empty()) return;
    } else {
      ctx.X = random_subset(n, rng);
      if (ctx.X.size() >= 2) return;
    }
  }
  ctx.X = {0, n - 1};
  ctx.Y = forest_like(c) ? VertexSet{n - 1} : VertexSet{};
}

// A member of the family the text offers as (near-)extremal for this conjecture.
void tightness_instance(const HuntConfig& cfg, Rng& rng, ConjectureFinding& f) {
  const std::string& c = cfg.conjecture;
  const Rational lambda = weight_pool()[static_cast<size_t>(rng.uniform(0, 3))];
  auto fits = [&](int edges) { return edges <= cfg.M && edges <= cfg.max_edges; };
  if (c == "5.6") {
    // k disjoint stars, X the centres, Y the leaves.
    int k = 1, r = 1, s = 1;
    do {
      k = static_cast<int>(rng.uniform(1, 2));
      r = static_cast<int>(rng.uniform(1, 3));
      s = static_cast<int>(rng.uniform(1, 2));
    } while (!fits(k * r * s));
    f.family = "disjoint-stars";
    f.graph = disjoint_parallel_stars(k, r, s, lambda);
    for (int i = 0; i < k; ++i) {
      f.anchors.X.push_back(i * (r + 1));
      for (int j = 1; j <= r; ++j) f.anchors.Y.push_back(i * (r + 1) + j);
    }
  } else if (c == "5.7") {
    // K_{1,r}^(s) with X the leaves.
    int r = 2, s = 1;
    do {
      r = static_cast<int>(rng.uniform(2, 4));
      s = static_cast<int>(rng.uniform(1, 2));
    } while (!fits(r * s));
    f.family = "star-leaves";
    f.graph = disjoint_parallel_stars(1, r, s, lambda);
    for (int j = 1; j <= r; ++j) f.anchors.X.push_back(j);
  } else if (c == "7.9" || c == "7.10") {
    int k = 1, r = 1, s = 1;
    do {
      k = static_cast<int>(rng.uniform(1, 2));
      r = static_cast<int>(rng.uniform(1, 3));
      s = static_cast<int>(rng.uniform(1, 4));
    } while (!fits(k * r * s));
    f.family = "disjoint-K1r^(s)";
    f.graph = disjoint_parallel_stars(k, r, s, lambda);
    for (int i = 0; i < k; ++i) {
      f.anchors.X.push_back(i * (r + 1));
      for (int j = 1; j <= r; ++j) f.anchors.Y.push_back(i * (r + 1) + j);
    }
  } else {
    int s = 1;
    do s = static_cast<int>(rng.uniform(1, 6));
    while (!fits(s));
    f.family = "K2^(s)";
    f.graph = k2s_graph(s, lambda);
    f.anchors.X = {0, 1};
  }
  f.tightness_family = true;
}

}  // namespace

std::string conjecture_bound_id(const std::string& conjecture) {
  static const std::vector<std::string> known{"5.6", "5.7", "7.9", "7.10", "7.11"};
  if (std::find(known.begin(), known.end(), conjecture) == known.end())
    throw std::invalid_argument("unknown conjecture '" + conjecture + "' (expected 5.6, 5.7, 7.9, 7.10 or 7.11)");
  return "conj" + conjecture;
}

ConjectureFinding run_trial(const HuntConfig& cfg, long trial) {
  const std::string id = conjecture_bound_id(cfg.conjecture);
  ConjectureFinding f;
  f.conjecture = cfg.conjecture;
  f.trial = trial;
  f.trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  Rng rng(f.trial_seed);
  auto kind = rng.uniform(0, 3);
  // Every tightness family member needs at least two edges within the truncation.
  if (kind == 0 && std::min(cfg.M, cfg.max_edges) < 2) kind = 1;
  if (kind == 0) {
    tightness_instance(cfg, rng, f);
  } else {
    RandomGraphConfig rc;
    rc.min_vertices = 2;
    rc.max_vertices = std::max(2, cfg.max_vertices);
    rc.max_edges = cfg.max_edges;
    rc.max_multiplicity = kind == 1 ? 1 : cfg.max_multiplicity;
    rc.weights = weight_pool();
    f.family = kind == 1 ? "simple" : "multi";
    f.graph = random_graph(rc, rng);
    random_anchors(cfg.conjecture, f.graph.vertex_count(), rng, f.anchors);
  }
  f.anchors.enumeration = cfg.enumeration;
  f.verdict = evaluate_bound(f.graph, id, f.anchors, cfg.M);
  f.margin = f.verdict.bound - (f.verdict.enclosure ? f.verdict.enclosure->hi() : f.verdict.partial_sum);
  return f;
}

bool ranks_before(const ConjectureFinding& a, const ConjectureFinding& b) {
  if (a.verdict.ratio != b.verdict.ratio) return a.verdict.ratio > b.verdict.ratio;
  if (a.graph.vertex_count() != b.graph.vertex_count()) return a.graph.vertex_count() < b.graph.vertex_count();
  if (a.graph.edge_count() != b.graph.edge_count()) return a.graph.edge_count() < b.graph.edge_count();
  return a.trial < b.trial;
}

std::string instance_key(const ConjectureFinding& f) {
  return serialize_graph(f.graph) + "X " + format_vertex_list(f.anchors.X) + "\nY " + format_vertex_list(f.anchors.Y);
}

namespace {

// Sorts by rank and keeps the first `keep` distinct instances.
void prune(std::vector<ConjectureFinding>& v, size_t keep) {
  std::sort(v.begin(), v.end(), ranks_before);
  std::vector<ConjectureFinding> out;
  std::set<std::string> seen;
  for (auto& f : v) {
    if (out.size() == keep) break;
    if (seen.insert(instance_key(f)).second) out.push_back(std::move(f));
  }
  v = std::move(out);
}

void offer_family(std::map<std::string, ConjectureFinding>& best, const ConjectureFinding& f) {
  auto it = best.find(f.family);
  if (it == best.end())
    best.emplace(f.family, f);
  else if (ranks_before(f, it->second))
    it->second = f;
}

}  // namespace

HuntResult hunt(const HuntConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("hunt needs trials >= 1");
  if (cfg.M < 0) throw std::invalid_argument("truncation order M must be >= 0");
  if (cfg.max_vertices < 2 || cfg.max_edges < 1 || cfg.max_multiplicity < 1)
    throw std::invalid_argument("hunt generator limits must be positive (max vertices >= 2)");
  conjecture_bound_id(cfg.conjecture);

  const size_t keep = static_cast<size_t>(std::max(1, cfg.leaderboard_size));
  const int jobs = std::max(1, cfg.jobs);
  struct Partial {
    std::vector<ConjectureFinding> top, bad;
    std::map<std::string, ConjectureFinding> families;
    std::exception_ptr error;
  };
  std::vector<Partial> parts(static_cast<size_t>(jobs));
  auto work = [&](int w) {
    Partial& part = parts[static_cast<size_t>(w)];
    try {
      for (long t = w; t < cfg.trials; t += jobs) {
        ConjectureFinding f = run_trial(cfg, t);
        if (f.verdict.verdict == Verdict::Violation) part.bad.push_back(f);
        offer_family(part.families, f);
        part.top.push_back(std::move(f));
        if (part.top.size() > 4 * keep) prune(part.top, keep);
      }
    } catch (...) {
      part.error = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  HuntResult result;
  result.config = cfg;
  result.trials = cfg.trials;
  for (auto& part : parts) {
    if (part.error) std::rethrow_exception(part.error);
    for (auto& f : part.top) result.leaderboard.push_back(std::move(f));
    for (auto& f : part.bad) result.violating.push_back(std::move(f));
    for (auto& [name, f] : part.families) offer_family(result.family_best, f);
  }
  prune(result.leaderboard, keep);
  std::sort(result.violating.begin(), result.violating.end(),
            [](const ConjectureFinding& a, const ConjectureFinding& b) { return a.trial < b.trial; });
  result.violations = static_cast<long>(result.violating.size());
  return result;
}

}  // namespace maxmaxflow
