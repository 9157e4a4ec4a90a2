#include "maxmaxflow/sequences.hpp"

#include <stdexcept>

namespace maxmaxflow {

Rational C_mk(unsigned m, const Rational& k) {
  if (m == 0) return 1;
  return k * pow(Rational(m) + k, static_cast<long>(m) - 1) / Rational(factorial(m));
}

Rational B_mk(unsigned m, const Rational& k) {
  if (m == 0) return 1;
  return (k - 1) * pow(Rational(2 * m) + k - 1, static_cast<long>(m) - 1) / Rational(factorial(m));
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const size_t n = std::min(a.size(), b.size());
  PowerSeries out(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

PowerSeries series_exp(const PowerSeries& f) {
  if (f.empty()) return {};
  if (f[0] != 0) throw std::invalid_argument("series_exp needs a zero constant term");
  // g' = f' g gives n g_n = Σ_{j=1..n} j f_j g_{n-j}.
  PowerSeries g(f.size());
  g[0] = 1;
  for (size_t n = 1; n < f.size(); ++n) {
    Rational acc = 0;
    for (size_t j = 1; j <= n; ++j) acc += Rational(static_cast<long>(j)) * f[j] * g[n - j];
    g[n] = acc / static_cast<long>(n);
  }
  return g;
}

PowerSeries tree_function_series(unsigned M) {
  PowerSeries c(M + 1);
  c[0] = 1;
  // Each pass fixes at least one more coefficient.
  for (unsigned it = 0; it <= M; ++it) {
    PowerSeries zc(M + 1);
    for (unsigned i = 0; i < M; ++i) zc[i + 1] = c[i];
    c = series_exp(zc);
  }
  return c;
}

PowerSeries tree_function_power(unsigned M, const Rational& k) {
  const PowerSeries c = tree_function_series(M);
  PowerSeries kzc(M + 1);
  for (unsigned i = 0; i < M; ++i) kzc[i + 1] = k * c[i];
  return series_exp(kzc);
}

bool IdentityReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

void expect(IdentityCheck& c, const Rational& lhs, const Rational& rhs, const std::string& where) {
  ++c.cases;
  if (lhs != rhs && c.ok) {
    c.ok = false;
    c.detail = where + ": " + to_string(lhs) + " != " + to_string(rhs);
  }
}

std::string at(unsigned m, const Rational& k) { return "m=" + std::to_string(m) + " k=" + to_string(k); }

}  // namespace

IdentityReport verify_identities(unsigned Mmax, const std::vector<Rational>& ks, const std::vector<Rational>& zs) {
  IdentityReport report;

  IdentityCheck base{"C(m,0) = B(m,1) = [m=0]", ""};
  IdentityCheck cayley{"C(m,1) m! / (m+1)^(m-1) = 1", ""};
  for (unsigned m = 0; m <= Mmax; ++m) {
    expect(base, C_mk(m, 0), m == 0 ? 1 : 0, "C m=" + std::to_string(m));
    expect(base, B_mk(m, 1), m == 0 ? 1 : 0, "B m=" + std::to_string(m));
    expect(cayley, C_mk(m, 1) * Rational(factorial(m)) / pow(Rational(m + 1), static_cast<long>(m) - 1), 1,
           at(m, 1));
  }
  report.checks.push_back(base);
  report.checks.push_back(cayley);

  // k-fold convolution of C(.,1) for integer k >= 1, and the two-factor form for any k1, k2.
  IdentityCheck kfold{"C k-fold convolution", ""};
  PowerSeries c1(Mmax + 1);
  for (unsigned m = 0; m <= Mmax; ++m) c1[m] = C_mk(m, 1);
  for (const Rational& k : ks) {
    if (k.get_den() != 1 || k < 1) continue;
    PowerSeries acc = c1;
    for (long j = 1; j < k.get_num().get_si(); ++j) acc = series_mul(acc, c1);
    for (unsigned m = 0; m <= Mmax; ++m) expect(kfold, acc[m], C_mk(m, k), at(m, k));
  }
  report.checks.push_back(kfold);

  IdentityCheck cconv{"C convolution", ""};
  IdentityCheck bconv{"B convolution", ""};
  for (const Rational& k1 : ks)
    for (const Rational& k2 : ks)
      for (unsigned m = 0; m <= Mmax; ++m) {
        Rational sc = 0, sb = 0;
        for (unsigned i = 0; i <= m; ++i) {
          sc += C_mk(i, k1) * C_mk(m - i, k2);
          sb += B_mk(i, k1) * B_mk(m - i, k2);
        }
        const std::string where = at(m, k1) + " k2=" + to_string(k2);
        expect(cconv, sc, C_mk(m, k1 + k2), where);
        expect(bconv, sb, B_mk(m, k1 + k2 - 1), where);
      }
  report.checks.push_back(cconv);
  report.checks.push_back(bconv);

  IdentityCheck ctrans{"C translation", ""};
  for (const Rational& k : ks)
    for (const Rational& z : zs)
      for (unsigned m = 0; m <= Mmax; ++m) {
        Rational s = 0;
        for (unsigned f = 0; f <= m; ++f)
          s += pow(z, f) / Rational(factorial(f)) * C_mk(m - f, k - z + f);
        expect(ctrans, s, C_mk(m, k), at(m, k) + " z=" + to_string(z));
      }
  report.checks.push_back(ctrans);

  IdentityCheck btrans{"B translation", ""};
  IdentityCheck blink{"B(m,k) = 2^m C(m,(k-1)/2)", ""};
  for (const Rational& k : ks)
    for (unsigned m = 0; m <= Mmax; ++m) {
      Rational s = 0;
      for (unsigned f = 0; f <= m; ++f) s += B_mk(m - f, k - 1 + 2 * f) / Rational(factorial(f));
      expect(btrans, s, B_mk(m, k), at(m, k));
      expect(blink, pow(Rational(2), m) * C_mk(m, (k - 1) / 2), B_mk(m, k), at(m, k));
    }
  report.checks.push_back(btrans);
  report.checks.push_back(blink);

  IdentityCheck lagrange{"C(z)^k coefficients", ""};
  IdentityCheck bseries{"C(2z)^((k-1)/2) coefficients", ""};
  for (const Rational& k : ks) {
    const PowerSeries ck = tree_function_power(Mmax, k);
    const PowerSeries bk = tree_function_power(Mmax, (k - 1) / 2);
    for (unsigned m = 0; m <= Mmax; ++m) {
      expect(lagrange, ck[m], C_mk(m, k), at(m, k));
      expect(bseries, pow(Rational(2), m) * bk[m], B_mk(m, k), at(m, k));
    }
  }
  report.checks.push_back(lagrange);
  report.checks.push_back(bseries);
  return report;
}

AsymptoticCheck c_asymptotic_ratio(unsigned m, const Rational& k, unsigned bits) {
  if (m == 0 || k <= 0) throw std::invalid_argument("asymptotic ratio needs m >= 1 and k > 0");
  const unsigned b = bits + 16;
  const RationalInterval two_pi = RationalInterval(Rational(2)) * pi_enclosure(b);
  const RationalInterval root_m = sqrt_enclosure(RationalInterval(Rational(m)), b);
  const RationalInterval num =
      RationalInterval(C_mk(m, k) * m) * root_m * sqrt_enclosure(two_pi, b);
  const RationalInterval den = RationalInterval(k) * exp_enclosure(Rational(m) + k, b);
  return {m, k, (num / den).rounded(bits)};
}

AsymptoticCheck b_asymptotic_ratio(unsigned m, const Rational& k, unsigned bits) {
  if (m == 0 || k <= 1) throw std::invalid_argument("asymptotic ratio needs m >= 1 and k > 1");
  const unsigned b = bits + 16;
  const RationalInterval eight_pi = RationalInterval(Rational(8)) * pi_enclosure(b);
  const RationalInterval root_m = sqrt_enclosure(RationalInterval(Rational(m)), b);
  const RationalInterval num =
      RationalInterval(B_mk(m, k) * m / pow(Rational(2), m)) * root_m * sqrt_enclosure(eight_pi, b);
  const RationalInterval den = RationalInterval(k - 1) * exp_enclosure(Rational(m) + (k - 1) / 2, b);
  return {m, k, (num / den).rounded(bits)};
}

}  // namespace maxmaxflow
