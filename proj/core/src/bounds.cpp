#include "maxmaxflow/bounds.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "maxmaxflow/flowcut.hpp"
#include "maxmaxflow/invariants.hpp"
#include "maxmaxflow/sequences.hpp"

namespace maxmaxflow {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Violation:
      return "VIOLATION";
    case Verdict::EqualityAtM:
      return "EQUALITY_AT_M";
    default:
      return "CONSISTENT_UP_TO_M";
  }
}

const std::vector<BoundInfo>& bound_catalog() {
  using S = BoundShape;
  static const std::vector<BoundInfo> catalog{
      {"prop4.1", S::Pointwise, false, "sum_y w_m(x,y) <= Delta^m"},
      {"prop4.2", S::GeneratingFunction, false, "sum_m Delta^-m w_m^FPW(x,Y) <= 1"},
      {"prop4.2r", S::GeneratingFunction, false, "sum_m Delta^-m w_m^FPW(x,Y) <= d(x)/Delta for x not in Y"},
      {"prop4.3", S::GeneratingFunction, false, "sum_m Lambda^-m w_m^SAW(x,y) <= F(x,y)"},
      {"cor4.4", S::Pointwise, false, "w_m^SAW(x,y) <= Lambda^m F(x,y)"},
      {"cor4.5", S::GeneratingFunction, false, "sum_m zeta^m w_m^SAW(x,y) <= (zeta Lambda)^dist(x,y) F(x,y)"},
      {"prop5.1", S::GeneratingFunction, false, "sum_m Delta^-m f_m(X,Y) <= 1"},
      {"prop5.2", S::GeneratingFunction, false, "sum_m (m+|Y|)^-(|X|-1) Lambda^-m f_m(X,Y) <= |Y|"},
      {"cor5.3", S::GeneratingFunction, false, "sum_m Delta^-m t_m(X) <= 1"},
      {"cor5.4", S::GeneratingFunction, false, "sum_m (m+1)^-(|X|-2) Lambda^-m t_m(X) <= 1"},
      {"prop5.8", S::GeneratingFunction, false, "sum_m Delta^-m h_m(X,p,r) <= p^-(r-1) (k-rp+p)^-1 binom(k,r)"},
      {"cor5.9a", S::GeneratingFunction, false,
       "sum_m Delta^-m h_m(X,p) <= sum_r p^-(r-1) (k-rp+p)^-1 binom(k,r)"},
      {"cor5.9b", S::GeneratingFunction, false, "sum_m Delta^-m h_m(X,p) <= (1+1/p)^k - 1"},
      {"cor5.10", S::GeneratingFunction, false, "sum_m Delta^-m h_m(X) <= 2(2^k-1)/(k+1)"},
      {"prop5.11", S::GeneratingFunction, false,
       "sum_m (m+r)^-(k-1) Lambda^-m h_m(X,p,r) <= r p^-(r-1) (k-rp+p)^-1 binom(k,r)"},
      {"prop6.1", S::Pointwise, false, "c_m(X) <= C(m,|X|) Delta^m"},
      {"prop7.1", S::GeneratingFunction, false, "sum_m (ln 2/Delta)^m bf_m(X,Y) <= 1"},
      {"prop7.2", S::GeneratingFunction, false, "sum_m (ln a/(a Lambda))^m bf_m(X,Y) <= a^(|Y|-1)"},
      {"cor7.3", S::GeneratingFunction, false, "sum_m (ln 2/Delta)^m bt_m(X) <= 1"},
      {"cor7.4", S::GeneratingFunction, false, "sum_m (ln 2/(2 Lambda))^m bt_m(X) <= 1"},
      {"cor7.5", S::GeneratingFunction, false,
       "sum_m (ln 2/(2 Lambda(G-e)))^(m-1) b'_m(e) <= 1, b'_m(e) = sum of w(H-e) over 2-connected H containing e"},
      {"prop7.8", S::GeneratingFunction, false, "sum_m (ln a/(a Lambda))^m bf*_m(X,Y) <= a^(|Y|-1)"},
      {"prop7.12", S::Pointwise, false, "b_m(X) <= B(m,|X|) Lambda^m"},
      {"cor7.13", S::Pointwise, false, "b'_m(e) <= B(m-1,2) Lambda(G-e)^(m-1)"},
      {"conj5.6", S::GeneratingFunction, true, "sum_m Lambda^-m f_m(X,Y) <= |Y|^|X|"},
      {"conj5.7", S::GeneratingFunction, true, "sum_m Lambda^-m t_m(X) <= 1"},
      {"conj7.9", S::GeneratingFunction, true, "sum_m (ln 2/Lambda)^m bf_m(X,Y) <= |Y|^|X|"},
      {"conj7.10", S::GeneratingFunction, true, "sum_m (ln 2/Lambda)^m bf*_m(X,Y) <= 2^|Y| - 1"},
      {"conj7.11", S::GeneratingFunction, true, "sum_m (ln 2/Lambda)^m bt_m(X) <= 1"},
  };
  return catalog;
}

const BoundInfo& bound_info(const std::string& id) {
  for (const auto& b : bound_catalog())
    if (b.id == id) return b;
  throw std::invalid_argument("unknown bound id '" + id + "'");
}

Rational lambda_or_zero(const WeightedMultigraph& g) {
  return g.vertex_count() < 2 ? Rational(0) : maxmaxflow(g);
}

bool SuiteResult::any_violation() const {
  for (const auto& v : verdicts)
    if (v.verdict == Verdict::Violation) return true;
  return false;
}

namespace {

void need(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw std::invalid_argument(id + ": " + what);
}

Rational max_degree(const WeightedMultigraph& g) {
  Rational d = 0;
  for (const Rational& x : weighted_degrees(g))
    if (x > d) d = x;
  return d;
}

// How one bound turns a series into a verdict.
struct Plan {
  SubgraphClassSpec spec;
  bool totals = false;       // prop4.1 reads walk_totals
  bool edge_series = false;  // cor7.5/cor7.13 read block_through_edge_counts
  BoundShape shape = BoundShape::GeneratingFunction;
  std::string discount;

  // Generating-function form: S = Σ coeff(m) a_m t^(m - shift) <= bound.
  bool log_discount = false;
  Rational t;                // rational case
  Rational log_arg, scale;   // irrational case: t = ln(log_arg) / scale
  bool zero_base = false;    // the discount base is 0; then a_m = 0 for every m > shift
  int shift = 0;
  std::function<Rational(int)> coeff;
  Rational bound;

  // Pointwise form: a_m <= pointwise(m).
  std::function<Rational(int)> pointwise;
};

class Planner {
 public:
  Planner(const WeightedMultigraph& g, const BoundContext& ctx) : g_(g), ctx_(ctx) {}

  const Rational& Delta() {
    if (!delta_) delta_ = max_degree(g_);
    return *delta_;
  }
  const Rational& Lambda() {
    if (!lambda_) lambda_ = lambda_or_zero(g_);
    return *lambda_;
  }

  Plan plan(const std::string& id) {
    bound_info(id);
    Plan p;
    p.shape = bound_info(id).shape;
    const int k = static_cast<int>(ctx_.X.size());
    const VertexSet& X = ctx_.X;
    const VertexSet& Y = ctx_.Y;

    auto walk_spec = [&](ClassKind kind, bool set_target) {
      need(ctx_.x >= 0, id, "needs a start vertex x");
      p.spec.kind = kind;
      p.spec.x = ctx_.x;
      if (set_target) {
        need(!Y.empty(), id, "needs a nonempty target set Y");
        p.spec.Y = Y;
      } else {
        need(ctx_.y >= 0, id, "needs a target vertex y");
        p.spec.y = ctx_.y;
      }
    };
    auto set_spec = [&](ClassKind kind) {
      p.spec.kind = kind;
      p.spec.X = X;
      if (kind == ClassKind::F || kind == ClassKind::BF || kind == ClassKind::BFstar) {
        need(!Y.empty(), id, "needs a nonempty root set Y");
        p.spec.Y = Y;
      }
      if (kind == ClassKind::T || kind == ClassKind::BT) need(k >= 1, id, "needs a nonempty anchor set X");
      if (kind == ClassKind::Hp || kind == ClassKind::Hpr) {
        need(ctx_.p >= 1, id, "needs p >= 1");
        p.spec.p = ctx_.p;
      }
      if (kind == ClassKind::Hpr) {
        need(ctx_.r >= 1, id, "needs r >= 1");
        p.spec.r = ctx_.r;
      }
    };
    auto inverse = [&](const Rational& base, const std::string& name) {
      p.discount = name + "^-m";
      if (base == 0)
        p.zero_base = true;
      else
        p.t = 1 / base;
    };
    auto log_of = [&](const Rational& arg, const Rational& scale, const std::string& text) {
      p.log_discount = true;
      p.log_arg = arg;
      p.scale = scale;
      p.discount = text;
      if (scale == 0) p.zero_base = true;
    };
    auto F_xy = [&]() -> Rational {
      if (ctx_.x == ctx_.y) return 1;
      if (Lambda() == 0) return 0;
      return max_flow(g_, ctx_.x, ctx_.y).value / Lambda();
    };
    auto ln2_over = [&](const Rational& scale, const std::string& text) { log_of(2, scale, text); };
    auto edge_plan = [&]() {
      need(ctx_.edge >= 0 && ctx_.edge < g_.edge_count(), id, "needs an edge e");
      const Edge& e = g_.edge(ctx_.edge);
      p.edge_series = true;
      p.spec.kind = ClassKind::BlockPath;
      p.spec.x = e.u;
      p.spec.y = e.v;
      return lambda_or_zero(without_edge(g_, ctx_.edge));
    };
    auto alpha_ok = [&]() { need(ctx_.alpha > 1 && ctx_.alpha <= 2, id, "needs alpha in (1,2]"); };
    auto hpr_bound = [&](int r) -> Rational {
      return pow(Rational(ctx_.p), -(r - 1)) / Rational(k - r * ctx_.p + ctx_.p) * Rational(binomial(k, r));
    };

    if (id == "prop4.1") {
      need(ctx_.x >= 0, id, "needs a start vertex x");
      p.spec.kind = ClassKind::W;
      p.spec.x = ctx_.x;
      p.totals = true;
      p.discount = "Delta^m";
      const Rational d = Delta();
      p.pointwise = [d](int m) -> Rational { return pow(d, m); };
    } else if (id == "prop4.2" || id == "prop4.2r") {
      walk_spec(ClassKind::FPW, true);
      inverse(Delta(), "Delta");
      p.bound = 1;
      if (id == "prop4.2r") {
        need(!set_contains(Y, ctx_.x), id, "needs x outside Y");
        p.bound = Delta() == 0 ? Rational(0) : weighted_degree(g_, ctx_.x) / Delta();
      }
    } else if (id == "prop4.3") {
      walk_spec(ClassKind::SAW, false);
      inverse(Lambda(), "Lambda");
      p.bound = F_xy();
    } else if (id == "cor4.4") {
      walk_spec(ClassKind::SAW, false);
      p.discount = "Lambda^m";
      const Rational f = F_xy(), l = Lambda();
      p.pointwise = [f, l](int m) -> Rational { return pow(l, m) * f; };
    } else if (id == "cor4.5") {
      walk_spec(ClassKind::SAW, false);
      const Rational l = Lambda();
      Rational z = ctx_.zeta ? *ctx_.zeta : (l == 0 ? Rational(1) : Rational(1) / (2 * l));
      need(z >= 0 && (l == 0 || z * l <= 1), id, "needs 0 <= zeta <= 1/Lambda");
      p.t = z;
      p.discount = "(" + to_string(z) + ")^m";
      const int dist = distance(g_, ctx_.x, ctx_.y);
      p.bound = dist < 0 ? Rational(0) : pow(z * l, dist) * F_xy();
    } else if (id == "prop5.1" || id == "prop5.2" || id == "conj5.6") {
      set_spec(ClassKind::F);
      if (id == "prop5.1") {
        inverse(Delta(), "Delta");
        p.bound = 1;
      } else if (id == "prop5.2") {
        inverse(Lambda(), "Lambda");
        const long ny = static_cast<long>(Y.size()), e = k - 1;
        p.coeff = [ny, e](int m) -> Rational { return pow(Rational(m + ny), -e); };
        p.discount = "(m+|Y|)^-(|X|-1) Lambda^-m";
        p.bound = static_cast<long>(Y.size());
      } else {
        inverse(Lambda(), "Lambda");
        p.bound = pow(Rational(static_cast<long>(Y.size())), k);
      }
    } else if (id == "cor5.3" || id == "cor5.4" || id == "conj5.7") {
      set_spec(ClassKind::T);
      p.bound = 1;
      if (id == "cor5.3") {
        inverse(Delta(), "Delta");
      } else {
        inverse(Lambda(), "Lambda");
        if (id == "cor5.4") {
          const long e = k - 2;
          p.coeff = [e](int m) -> Rational { return pow(Rational(m + 1), -e); };
          p.discount = "(m+1)^-(|X|-2) Lambda^-m";
        }
      }
    } else if (id == "prop5.8" || id == "prop5.11") {
      set_spec(ClassKind::Hpr);
      need(k >= ctx_.r * ctx_.p, id, "needs |X| >= r p");
      if (id == "prop5.8") {
        inverse(Delta(), "Delta");
        p.bound = hpr_bound(ctx_.r);
      } else {
        inverse(Lambda(), "Lambda");
        const long r = ctx_.r, e = k - 1;
        p.coeff = [r, e](int m) -> Rational { return pow(Rational(m + r), -e); };
        p.discount = "(m+r)^-(k-1) Lambda^-m";
        p.bound = Rational(ctx_.r) * hpr_bound(ctx_.r);
      }
    } else if (id == "cor5.9a" || id == "cor5.9b") {
      set_spec(ClassKind::Hp);
      need(k >= 1, id, "needs |X| >= 1");
      inverse(Delta(), "Delta");
      if (id == "cor5.9a") {
        p.bound = 0;
        for (int r = 1; r <= k / ctx_.p; ++r) p.bound += hpr_bound(r);
      } else {
        p.bound = pow(1 + Rational(1, ctx_.p), k) - 1;
      }
    } else if (id == "cor5.10") {
      set_spec(ClassKind::H);
      need(k >= 1, id, "needs |X| >= 1");
      inverse(Delta(), "Delta");
      p.bound = Rational(2 * (pow(Rational(2), k) - 1)) / (k + 1);
    } else if (id == "prop6.1") {
      set_spec(ClassKind::C);
      p.discount = "C(m,k) Delta^m";
      const Rational d = Delta();
      p.pointwise = [d, k](int m) -> Rational { return C_mk(static_cast<unsigned>(m), k) * pow(d, m); };
    } else if (id == "prop7.1" || id == "prop7.2" || id == "conj7.9") {
      set_spec(ClassKind::BF);
      if (id == "prop7.1") {
        ln2_over(Delta(), "(ln 2/Delta)^m");
        p.bound = 1;
      } else if (id == "prop7.2") {
        alpha_ok();
        log_of(ctx_.alpha, ctx_.alpha * Lambda(), "(ln a/(a Lambda))^m, a=" + to_string(ctx_.alpha));
        p.bound = pow(ctx_.alpha, static_cast<long>(Y.size()) - 1);
      } else {
        ln2_over(Lambda(), "(ln 2/Lambda)^m");
        p.bound = pow(Rational(static_cast<long>(Y.size())), k);
      }
    } else if (id == "prop7.8" || id == "conj7.10") {
      set_spec(ClassKind::BFstar);
      if (id == "prop7.8") {
        alpha_ok();
        log_of(ctx_.alpha, ctx_.alpha * Lambda(), "(ln a/(a Lambda))^m, a=" + to_string(ctx_.alpha));
        p.bound = pow(ctx_.alpha, static_cast<long>(Y.size()) - 1);
      } else {
        ln2_over(Lambda(), "(ln 2/Lambda)^m");
        p.bound = pow(Rational(2), static_cast<long>(Y.size())) - 1;
      }
    } else if (id == "cor7.3" || id == "cor7.4" || id == "conj7.11") {
      set_spec(ClassKind::BT);
      p.bound = 1;
      if (id == "cor7.3")
        ln2_over(Delta(), "(ln 2/Delta)^m");
      else if (id == "cor7.4")
        ln2_over(2 * Lambda(), "(ln 2/(2 Lambda))^m");
      else
        ln2_over(Lambda(), "(ln 2/Lambda)^m");
    } else if (id == "prop7.12") {
      set_spec(ClassKind::B);
      need(k >= 1, id, "needs |X| >= 1");
      p.discount = "B(m,k) Lambda^m";
      const Rational l = Lambda();
      p.pointwise = [l, k](int m) -> Rational { return B_mk(static_cast<unsigned>(m), k) * pow(l, m); };
    } else if (id == "cor7.5") {
      const Rational le = edge_plan();
      ln2_over(2 * le, "(ln 2/(2 Lambda(G-e)))^(m-1)");
      p.shift = 1;
      p.bound = 1;
    } else if (id == "cor7.13") {
      const Rational le = edge_plan();
      p.discount = "B(m-1,2) Lambda(G-e)^(m-1)";
      p.pointwise = [le](int m) -> Rational {
        return m == 0 ? Rational(0) : B_mk(static_cast<unsigned>(m - 1), 2) * pow(le, m - 1);
      };
    } else {
      throw std::invalid_argument("unknown bound id '" + id + "'");
    }
    if (!p.coeff) p.coeff = [](int) -> Rational { return Rational(1); };
    if (p.totals)
      g_.require_vertex(p.spec.x);
    else
      p.spec.validate(g_);
    return p;
  }

 private:
  const WeightedMultigraph& g_;
  const BoundContext& ctx_;
  std::optional<Rational> delta_, lambda_;
};

bool same_spec(const SubgraphClassSpec& a, const SubgraphClassSpec& b) {
  if (a.kind != b.kind || a.X != b.X || a.Y != b.Y || a.x != b.x || a.y != b.y) return false;
  if ((a.kind == ClassKind::Hp || a.kind == ClassKind::Hpr) && a.p != b.p) return false;
  if (a.kind == ClassKind::Hpr && a.r != b.r) return false;
  return true;
}

CountSeries compute_series(const WeightedMultigraph& g, const Plan& plan, const BoundContext& ctx, int M) {
  if (plan.totals) {
    CountSeries s;
    s.spec = plan.spec;
    s.values = walk_totals(g, plan.spec.x, M);
    return s;
  }
  if (plan.edge_series) {
    CountSeries s;
    s.spec = plan.spec;
    s.values = block_through_edge_counts(g, ctx.edge, M, ctx.enumeration);
    return s;
  }
  switch (plan.spec.kind) {
    case ClassKind::FPW:
      return fpw_counts(g, plan.spec.x, plan.spec.Y, M);
    case ClassKind::SAW:
      return saw_counts(g, plan.spec.x, plan.spec.y, M);
    default:
      return class_count_series(g, plan.spec, M, ctx.enumeration);
  }
}

Rational ratio_of(const Rational& s, const Rational& b) { return b > 0 ? s / b : Rational(0); }

BoundVerdict judge(const std::string& id, const Plan& plan, const CountSeries& series) {
  BoundVerdict v;
  v.id = id;
  v.discount = plan.discount;
  v.M = series.M();
  v.shape = plan.shape;
  const auto& a = series.values;
  const int M = series.M();

  if (plan.shape == BoundShape::Pointwise) {
    v.decisive_m = M;
    v.verdict = Verdict::ConsistentUpToM;
    for (int m = 0; m <= M; ++m) {
      const Rational b = plan.pointwise(m);
      const Rational r = ratio_of(a[static_cast<size_t>(m)], b);
      if (r > v.ratio) v.ratio = r;
      if (a[static_cast<size_t>(m)] > b) {
        v.verdict = Verdict::Violation;
        v.decisive_m = m;
        v.partial_sum = a[static_cast<size_t>(m)];
        v.bound = b;
        return v;
      }
    }
    v.partial_sum = a[static_cast<size_t>(M)];
    v.bound = plan.pointwise(M);
    if (v.partial_sum == v.bound) v.verdict = Verdict::EqualityAtM;
    return v;
  }

  v.bound = plan.bound;
  if (!plan.log_discount && !plan.zero_base && plan.t > 0) v.beta = 1 / plan.t;
  bool trivial = true;  // no term carries a positive power of the discount
  for (int m = plan.shift + 1; m <= M; ++m)
    if (a[static_cast<size_t>(m)] != 0) trivial = false;
  for (int m = 0; m < plan.shift && m <= M; ++m)
    if (a[static_cast<size_t>(m)] != 0) throw std::logic_error(id + ": unexpected term below the shift");
  if (plan.zero_base && !trivial)
    throw std::logic_error(id + ": nonzero terms with a zero discount base");

  auto exact_sum = [&](const Rational& t) {
    Rational s = 0;
    for (int m = plan.shift; m <= M; ++m)
      if (a[static_cast<size_t>(m)] != 0) s += plan.coeff(m) * a[static_cast<size_t>(m)] * pow(t, m - plan.shift);
    return s;
  };
  auto settle_exact = [&](const Rational& s) {
    v.partial_sum = s;
    v.ratio = ratio_of(s, v.bound);
    v.verdict = s > v.bound ? Verdict::Violation : s == v.bound ? Verdict::EqualityAtM : Verdict::ConsistentUpToM;
  };

  if (!plan.log_discount || trivial) {
    settle_exact(exact_sum(plan.log_discount ? Rational(0) : plan.t));
    return v;
  }
  // A nonconstant polynomial in ln(a) with rational coefficients is never rational, so refinement decides.
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const RationalInterval t = (ln_enclosure(plan.log_arg, bits + 16) / RationalInterval(plan.scale)).rounded(bits + 16);
    const RationalInterval s(exact_sum(t.lo()), exact_sum(t.hi()));
    v.enclosure = s.rounded(bits + 8);
    v.partial_sum = v.enclosure->lo();
    v.ratio = ratio_of(v.enclosure->lo(), v.bound);
    v.precision_bits = bits;
    switch (compare(s, v.bound)) {
      case Comparison::Less:
        v.verdict = Verdict::ConsistentUpToM;
        return v;
      case Comparison::Greater:
        v.verdict = Verdict::Violation;
        return v;
      default:
        break;
    }
  }
  throw std::runtime_error(id + ": comparison undecided at 2^-" + std::to_string(kMaxBits) + " precision");
}

}  // namespace

SubgraphClassSpec required_spec(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx) {
  return Planner(g, ctx).plan(id).spec;
}

CountSeries series_for(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx, int M) {
  if (M < 0) throw std::invalid_argument("truncation order M must be >= 0");
  return compute_series(g, Planner(g, ctx).plan(id), ctx, M);
}

BoundVerdict verify_bound(const WeightedMultigraph& g, const CountSeries& series, const std::string& id,
                          const BoundContext& ctx) {
  const Plan plan = Planner(g, ctx).plan(id);
  if (!same_spec(plan.spec, series.spec))
    throw std::invalid_argument(id + " needs the series of " + plan.spec.describe() + ", got " +
                                series.spec.describe());
  if (series.values.empty()) throw std::invalid_argument(id + ": empty series");
  return judge(id, plan, series);
}

BoundVerdict evaluate_bound(const WeightedMultigraph& g, const std::string& id, const BoundContext& ctx, int M) {
  Planner planner(g, ctx);
  const Plan plan = planner.plan(id);
  if (M < 0) throw std::invalid_argument("truncation order M must be >= 0");
  return judge(id, plan, compute_series(g, plan, ctx, M));
}

SuiteResult run_suite(const WeightedMultigraph& g, const BoundContext& ctx, int M, const std::vector<std::string>& ids) {
  if (M < 0) throw std::invalid_argument("truncation order M must be >= 0");
  std::vector<std::string> wanted = ids;
  if (wanted.empty())
    for (const auto& b : bound_catalog())
      if (!b.conjecture) wanted.push_back(b.id);

  SuiteResult result;
  Planner planner(g, ctx);
  std::vector<std::pair<std::string, Plan>> plans;
  for (const auto& id : wanted) {
    bound_info(id);
    try {
      plans.emplace_back(id, planner.plan(id));
    } catch (const std::invalid_argument& e) {
      result.skipped.emplace_back(id, e.what());
    }
  }

  // One shared enumeration for all edge-subset classes.
  std::vector<SubgraphClassSpec> batch;
  std::map<std::string, size_t> index;
  for (const auto& [id, plan] : plans) {
    if (plan.totals || plan.edge_series || is_walk_kind(plan.spec.kind) || plan.spec.kind == ClassKind::SAW ||
        plan.spec.kind == ClassKind::FPSAW)
      continue;
    const std::string key = plan.spec.describe();
    if (!index.count(key)) {
      index[key] = batch.size();
      batch.push_back(plan.spec);
    }
  }
  const std::vector<CountSeries> shared = class_count_series_batch(g, batch, M, ctx.enumeration);

  for (const auto& [id, plan] : plans) {
    auto it = index.find(plan.spec.describe());
    const bool from_batch = it != index.end() && !plan.totals && !plan.edge_series &&
                            !is_walk_kind(plan.spec.kind) && plan.spec.kind != ClassKind::SAW;
    const CountSeries series = from_batch ? shared[it->second] : compute_series(g, plan, ctx, M);
    result.verdicts.push_back(judge(id, plan, series));
  }
  return result;
}

}  // namespace maxmaxflow
