#include "jackdunkl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>

#include "jackdunkl/dunkl.hpp"
#include "jackdunkl/gamma.hpp"
#include "jackdunkl/hyperseries.hpp"
#include "jackdunkl/jack.hpp"
#include "jackdunkl/laplace.hpp"

namespace jackdunkl {

void CriterionResult::record(VerificationReport r, bool keep_passing) {
  ++checks;
  if (!r.pass) {
    ++failures;
    pass = false;
  }
  if (!r.pass || keep_passing) reports.push_back(std::move(r));
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

VerificationReport exact_check(std::string name, const MultiplicityParam& p, Params extra, bool ok) {
  VerificationReport r;
  r.identity = std::move(name);
  r.add("n", std::to_string(p.n));
  r.add("k", to_string(p.k));
  for (auto& [k, v] : extra) r.add(std::move(k), std::move(v));
  r.relError = ok ? 0.0 : 1.0;
  r.tolerance = 0.0;
  r.finish();
  return r;
}

VerificationReport numeric_check(std::string name, Params params, cplx lhs, cplx rhs, double tol) {
  VerificationReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relError = rel_error(lhs, rhs);
  r.tolerance = tol;
  r.finish();
  return r;
}

std::string cstr(cplx c) {
  std::string s = format_double(c.real());
  if (c.imag() != 0.0) s += (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "i";
  return s;
}

std::string vstr(const std::vector<cplx>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cstr(v[i]);
  return s + ")";
}

std::vector<cplx> first(const std::vector<cplx>& v, int n) { return {v.begin(), v.begin() + n}; }

class Tables {
 public:
  JackTable& get(int n, const Rational& k) {
    const auto key = std::make_pair(n, to_string(k));
    auto it = t_.find(key);
    if (it == t_.end()) {
      // reciprocal checks reach weight n max(eta)
      const int cap = n <= 2 ? 20 : n == 3 ? 18 : 12;
      it = t_.emplace(key, std::make_unique<JackTable>(MultiplicityParam(n, k), cap)).first;
    }
    return *it->second;
  }

 private:
  std::map<std::pair<int, std::string>, std::unique_ptr<JackTable>> t_;
};

const std::vector<Rational> kExactK{Rational(1, 2), Rational(1), Rational(2), Rational(5, 3)};
const std::vector<Rational> kQuadK{Rational(1, 2), Rational(1)};

std::vector<Composition> compositions_upto(int n, int w) {
  std::vector<Composition> out;
  for (int m = 0; m <= w; ++m)
    for (auto& c : enumerate_compositions(n, m)) out.push_back(std::move(c));
  return out;
}

std::vector<Partition> partitions_upto(int n, int w) {
  std::vector<Partition> out;
  for (int m = 0; m <= w; ++m)
    for (auto& c : enumerate_partitions(n, m)) out.push_back(std::move(c));
  return out;
}

Rational factorial(int m) {
  Rational f(1);
  for (int i = 2; i <= m; ++i) f *= Rational(i);
  return f;
}

Rational at_one(const QPoly& q) {
  const std::vector<Rational> one(static_cast<std::size_t>(q.n()), Rational(1));
  return q.eval_exact(one);
}

QPoly power_sum_power(int n, int m) {
  QPoly s(n);
  for (int i = 1; i <= n; ++i) s += QPoly::variable(n, i);
  QPoly r = QPoly::constant(n, Rational(1));
  for (int i = 0; i < m; ++i) r *= s;
  return r;
}

// Kummer 1F1(a; b; x) by direct summation.
double kummer(double a, double b, double x) {
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 400 && std::abs(term) > 1e-18 * std::abs(sum); ++m) {
    term *= (a + m) / (b + m) * x / (m + 1);
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------- criterion 1

void crit_main1(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& k : kExactK) {
      JackTable& t = tabs.get(n, k);
      const int W = n == 2 ? 5 : 4;
      for (const auto& eta : compositions_upto(n, W)) cr.record(verify_main1(eta, t), opt.keep_passing);
      for (const auto& lam : partitions_upto(n, W)) cr.record(verify_main1_symmetric(lam, t), opt.keep_passing);
    }
}

// ---------------------------------------------------------------- criterion 2

void crit_structural(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  auto rec = [&](std::string name, const MultiplicityParam& p, Params extra, bool ok) {
    cr.record(exact_check(std::move(name), p, std::move(extra), ok), opt.keep_passing);
  };
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : kExactK) {
      JackTable& t = tabs.get(n, k);
      const MultiplicityParam& p = t.param();
      const int W = n <= 3 ? 6 : 4;
      const int Wpair = n <= 3 ? 4 : 3;
      const auto perms = all_permutations(n);

      for (const auto& eta : compositions_upto(n, W)) {
        const Params id{{"eta", to_string(eta)}};
        const QPoly& e = t.E_ref(eta);
        rec("eigenvalue-equations", p, id, check_eigen_equations(eta, e, p) == 0);
        bool tri = e.coeff(Exponent::from(eta)) == 1, pos = true;
        for (const auto& [a, c] : e.terms()) {
          pos = pos && sgn(c) > 0;
          const auto av = a.to_vector(n);
          if (av != eta) tri = tri && dominance_composition(av, eta) == Order::less;
        }
        rec("dominance-triangularity", p, id, tri);
        rec("coefficient-positivity", p, id, pos);

        if (weight(eta) + n <= W) {
          Composition up(eta);
          for (auto& v : up) v += 1;
          rec("delta-shift", p, id, t.E_ref(up) == e * QPoly::delta(n));
        }

        // E_eta(1/z) = E_{-eta^R}(z^R)
        Composition negrev(eta.rbegin(), eta.rend());
        for (auto& v : negrev) v = -v;
        if (n * *std::max_element(eta.begin(), eta.end()) <= t.max_weight())
          rec("reciprocal", p, id, e.reciprocal() == t.E(negrev).reversed());

        // (1/n!) sum_sigma E_eta(sigma x)/E_eta(1) = P_lambda(x)/P_lambda(1)
        const Partition lam = eta_plus(eta);
        QPoly sym(n);
        for (const auto& s : perms) sym += e.permuted(s);
        sym *= Rational(1) / (factorial(n) * eval_E_at_one(eta, p));
        rec("symmetrization", p, id, sym == t.P(lam) * (Rational(1) / eval_P_at_one(lam, p)));

        if (weight(eta) <= Wpair) {
          // Delta(T) L_eta = (|eta|!/|eta - 1|!) L_{eta - 1}, or 0 if some eta_i = 0
          const QPoly lowered = apply_poly_of_T(QPoly::delta(n), t.L(eta), p.k);
          const bool all_pos = std::all_of(eta.begin(), eta.end(), [](int v) { return v >= 1; });
          QPoly expect(n);
          if (all_pos) {
            Composition dn(eta);
            for (auto& v : dn) v -= 1;
            expect = t.L(dn) * (factorial(weight(eta)) / factorial(weight(dn)));
          }
          rec("lowering", p, id, lowered == expect);
        }
      }

      for (int m = 0; m <= W; ++m) {
        const QPoly target = power_sum_power(n, m);
        QPoly sl(n), sc(n);
        for (const auto& eta : enumerate_compositions(n, m)) sl += t.L(eta);
        for (const auto& lam : enumerate_partitions(n, m)) sc += t.C(lam);
        rec("power-sum-L", p, {{"m", std::to_string(m)}}, sl == target);
        rec("power-sum-C", p, {{"m", std::to_string(m)}}, sc == target);
      }

      for (int m = 0; m <= Wpair; ++m) {
        const auto cs = enumerate_compositions(n, m);
        std::vector<QPoly> L;
        for (const auto& c : cs) L.push_back(t.L(c));
        for (std::size_t i = 0; i < cs.size(); ++i)
          for (std::size_t j = 0; j < cs.size(); ++j) {
            const Rational v = dunkl_pairing(L[i], L[j], p.k);
            const Rational expect = i == j ? factorial(m) * at_one(L[i]) : Rational(0);
            rec("pairing-orthogonality", p, {{"eta", to_string(cs[i])}, {"kappa", to_string(cs[j])}}, v == expect);
          }
      }

      for (const auto& lam : partitions_upto(n, n <= 3 ? 5 : 4)) {
        const auto row = binomial_coeffs(lam, t);
        bool ok = row.at(lam) == 1 && row.at(Partition(static_cast<std::size_t>(n), 0)) == 1;
        for (const auto& [mu, b] : row) ok = ok && sgn(b) >= 0;
        rec("binomial-nonnegativity", p, {{"lambda", to_string(lam)}}, ok);
      }
    }
}

// ---------------------------------------------------------------- criterion 3

void crit_gram_schmidt(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : {Rational(1, 2), Rational(1), Rational(2)}) {
      JackTable& t = tabs.get(n, k);
      for (const auto& lam : partitions_upto(n, 4))
        cr.record(exact_check("gram-schmidt", t.param(), {{"lambda", to_string(lam)}},
                              gram_schmidt_P(lam, t.param()) == t.P(lam)),
                  opt.keep_passing);
    }
}

// ---------------------------------------------------------------- criterion 4

QuadratureSpec quad_for(const MultiplicityParam& p) { return QuadratureSpec::make(p, p.n <= 2 ? 1e-8 : 1e-5); }
double tol_for(int n) { return n <= 2 ? 1e-5 : 1e-3; }

void crit_master(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  const std::vector<std::vector<cplx>> zs{{2.0, 3.0, 4.0}, {1.5, 1.5, 1.5}};
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : kQuadK) {
      JackTable& t = tabs.get(n, k);
      const auto& p = t.param();
      const QuadratureSpec qs = quad_for(p);
      const double tol = tol_for(n);
      for (double dm : {1.0, 2.5}) {
        const cplx mu = p.mu0_double() + dm;
        for (const auto& zf : zs) {
          const auto z = first(zf, n);
          for (const auto& eta : compositions_upto(n, 2)) {
            auto r = verify_master(eta, mu, z, qs, t, tol);
            if (n == 1) {
              // classical gamma integral
              const double m = eta[0];
              const cplx g = std::tgamma(m + mu.real()) * std::pow(z[0], -(m + mu));
              cr.record(numeric_check("master-classical", r.params, r.lhs, g, tol), opt.keep_passing);
            }
            cr.record(std::move(r), opt.keep_passing);
          }
          for (const auto& lam : partitions_upto(n, 2))
            cr.record(verify_master_symmetric(lam, mu, z, qs, t, tol), opt.keep_passing);
        }
      }
    }
  JackTable& t = tabs.get(2, Rational(1, 2));
  auto r = verify_master({0, 0}, 2.0, {2.0, 3.0}, quad_for(t.param()), t, 1e-5);
  cr.record(numeric_check("master-anchor", r.params, r.lhs, 1.0 / 36.0, 1e-5), opt.keep_passing);
}

// ---------------------------------------------------------------- criterion 5

void crit_kadell_euler(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : kQuadK) {
      JackTable& t = tabs.get(n, k);
      const auto& p = t.param();
      const QuadratureSpec qs = quad_for(p);
      const double m0 = p.mu0_double(), tol = tol_for(n);
      std::vector<std::pair<double, double>> grid{{m0 + 1.0, m0 + 1.0}, {m0 + 1.0, m0 + 2.0}, {m0 + 2.5, m0 + 1.5}};
      if (n <= 2 && m0 <= 1.5) {
        grid.emplace_back(2.0, 2.0);
        grid.emplace_back(2.0, 3.0);
      }
      for (const auto& lam : partitions_upto(n, 2))
        for (auto [mu, nu] : grid) {
          auto r = verify_kadell(lam, mu, nu, qs, t, tol);
          if (n == 1 && lam[0] == 0)
            cr.record(numeric_check("kadell-beta", r.params, r.lhs, std::beta(mu, nu), tol), opt.keep_passing);
          cr.record(std::move(r), opt.keep_passing);
        }
    }

  // Euler integrals, n = 1, 2
  for (int n = 1; n <= 2; ++n)
    for (const auto& k : kQuadK) {
      const MultiplicityParam p(n, k);
      const QuadratureSpec qs = quad_for(p);
      const double m0 = p.mu0_double();
      struct Shape {
        std::vector<cplx> upper, lower;
        std::vector<cplx> w;
      };
      const std::vector<Shape> shapes{
          {{}, {}, {0.3, 0.1}},
          {{}, {}, {-0.8, 0.5}},
          {{1.5}, {}, {0.3, 0.1}},
          {{}, {m0 + 2.0}, {0.6, -0.4}},
          {{1.5}, {m0 + 2.5}, {0.9, 0.2}},
          {{0.75, 1.25}, {m0 + 2.0}, {0.4, 0.2}},
      };
      for (const auto& sh : shapes)
        for (auto [mu1, nu1] : std::vector<std::pair<double, double>>{{m0 + 1.0, 2 * m0 + 2.5}, {m0 + 2.0, 2 * m0 + 3.5}}) {
          SeriesSpec s;
          s.param = p;
          s.upper = sh.upper;
          s.lower = sh.lower;
          const auto w = first(sh.w, n);
          auto r = verify_euler(s, mu1, nu1, w, qs, 1e-5);
          if (n == 1 && sh.upper.empty() && sh.lower.empty()) {
            const double cl = std::beta(mu1, nu1 - mu1) * kummer(mu1, nu1, w[0].real());
            cr.record(numeric_check("euler-classical", r.params, r.lhs, cl, 1e-5), opt.keep_passing);
          }
          cr.record(std::move(r), opt.keep_passing);
        }
      // w = 0 collapses to the Kadell integral with lambda = 0
      SeriesSpec s;
      s.param = p;
      const double mu1 = m0 + 1.0, nu1 = 2 * m0 + 2.5;
      auto e = verify_euler(s, mu1, nu1, std::vector<cplx>(static_cast<std::size_t>(n), 0.0), qs, 1e-5);
      auto kd = verify_kadell(Partition(static_cast<std::size_t>(n), 0), mu1, nu1 - mu1, qs, tabs.get(n, k), 1e-5);
      cr.record(numeric_check("euler-w0-kadell", e.params, e.lhs, kd.rhs, 1e-5), opt.keep_passing);
    }
}

// ---------------------------------------------------------------- criterion 6

void crit_series_laplace(CriterionResult& cr, const SuiteOptions& opt) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& k : kQuadK) {
      const MultiplicityParam p(n, k);
      const QuadratureSpec qs = quad_for(p);
      const double m0 = p.mu0_double();
      struct Case {
        std::vector<cplx> upper, lower, w, z;
      };
      const std::vector<Case> cases{
          // p < q
          {{}, {m0 + 2.0}, {0.5, 0.2}, {3.0, 4.0}},
          {{}, {m0 + 1.5}, {-1.5, 2.0}, {2.0, 2.5}},
          {{1.5}, {m0 + 2.0, m0 + 1.0}, {1.0, -0.5}, {2.0, 3.0}},
          // p = q inside ||w|| ||1/Re z|| < 1/n
          {{}, {}, {0.3, 0.2}, {2.0, 3.0}},
          {{}, {}, {-0.4, 0.1}, {1.5, 2.0}},
          {{1.25}, {m0 + 2.0}, {0.3, -0.2}, {2.0, 2.5}},
      };
      for (const auto& c : cases)
        for (SeriesKind kind : {SeriesKind::K, SeriesKind::F})
          for (double dm : {1.0, 2.0}) {
            SeriesSpec s;
            s.param = p;
            s.upper = c.upper;
            s.lower = c.lower;
            const auto w = first(c.w, n), z = first(c.z, n);
            const cplx mu1 = m0 + dm;
            auto r = verify_hyp_laplace(kind, s, mu1, w, z, qs, 1e-4);
            if (n == 1 && kind == SeriesKind::K && c.upper.empty() && c.lower.size() == 1) {
              // Laplace transform of 0F1 is a Kummer function
              const double b = c.lower[0].real(), x = w[0].real() / z[0].real();
              const double cl = std::tgamma(mu1.real()) * std::pow(z[0].real(), -mu1.real()) * kummer(mu1.real(), b, x);
              cr.record(numeric_check("hyplaplace-kummer", r.params, r.lhs, cl, 1e-4), opt.keep_passing);
            }
            cr.record(std::move(r), opt.keep_passing);
          }
      for (SeriesKind kind : {SeriesKind::K, SeriesKind::F})
        for (const auto& [z, w] : std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>>{
                 {{0.5, 0.4}, {0.6, 0.5}}, {{0.6, 0.3}, {0.4, 0.7}}})
          for (double dm : {1.0, 2.0})
            cr.record(verify_1K0(kind, m0 + dm, first(z, n), first(w, n), p, qs, 1e-4), opt.keep_passing);
    }
}

// ---------------------------------------------------------------- criterion 7

void crit_cherednik(CriterionResult& cr, const SuiteOptions& opt, Tables& tabs) {
  const std::vector<Composition> points{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}};
  for (const auto& k : kQuadK) {
    JackTable& t = tabs.get(2, k);
    const auto& p = t.param();
    const QuadratureSpec qs = quad_for(p);
    for (const auto& eta : points)
      for (double dm : {1.0, 2.5})
        for (const auto& z : std::vector<std::vector<cplx>>{{2.0, 3.0}, {1.5, 2.5}})
          cr.record(verify_macdonald_cherednik({eta}, p.mu0_double() + dm, z, qs, t, 1e-4), opt.keep_passing);
  }
}

// ---------------------------------------------------------------- criterion 8

void crit_post_widder(CriterionResult& cr, const SuiteOptions& opt) {
  const MultiplicityParam p1(1, Rational(0));
  const QuadratureSpec q1 = QuadratureSpec::make(p1, 1e-11);
  auto expo = Integrand::function([](const std::vector<double>& x) { return cplx(std::exp(-x[0])); }, -1.0);
  for (int nu : {10, 40}) {
    const auto r = post_widder(expo, {1.0}, nu, p1, q1);
    cr.record(numeric_check("postwidder-closed-form", {{"n", "1"}, {"nu", std::to_string(nu)}}, r.value,
                            std::pow(nu / (nu + 1.0), nu + 1.0), 1e-8),
              opt.keep_passing);
  }
  for (int n = 1; n <= 2; ++n) {
    const MultiplicityParam p(n, Rational(1, 2));
    const QuadratureSpec qs = QuadratureSpec::make(p, 1e-10);
    const std::vector<double> xi{1.0, 2.0};
    for (int nu : {5, 10}) {
      const auto r = post_widder(Integrand::constant(), {xi.begin(), xi.begin() + n}, nu, p, qs);
      cr.record(numeric_check("postwidder-probability", {{"n", std::to_string(n)}, {"nu", std::to_string(nu)}},
                              r.value, 1.0, 1e-8),
                opt.keep_passing);
    }
  }
  const MultiplicityParam p(2, Rational(1, 2));
  const QuadratureSpec qs = QuadratureSpec::make(p, 1e-8);
  auto f = Integrand::function([](const std::vector<double>& x) { return cplx(1.0 / (1.0 + x[0] + x[1])); });
  const double target = 0.25;
  double prev = INFINITY;
  for (int nu : {5, 10, 20, 40}) {
    const auto r = post_widder(f, {1.0, 2.0}, nu, p, qs);
    const double err = std::abs(r.value - target) / target;
    VerificationReport rep = numeric_check("postwidder-convergence", {{"n", "2"}, {"k", "1/2"}, {"nu", std::to_string(nu)}},
                                           r.value, target, nu == 40 ? 0.05 : INFINITY);
    if (!(err < prev)) {
      rep.pass = false;
      rep.detail = "error did not decrease";
    }
    prev = err;
    cr.record(std::move(rep), opt.keep_passing);
  }
}

// ---------------------------------------------------------------- criterion 9

// Adaptive evaluation at tolerance tol, raised tenfold while the rounding allowance sits above it (up to cap).
SeriesValue eval_above_floor(SeriesKind kind, SeriesSpec s, const std::vector<cplx>& z, const std::vector<cplx>& w,
                             double tol, double cap) {
  s.tolerance = tol;
  for (;;) {
    try {
      return eval_series(kind, s, z, w);
    } catch (const SeriesConvergenceError&) {
      if (s.tolerance > cap) throw;
      s.tolerance *= 10;
    }
  }
}

void crit_certification(CriterionResult& cr, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto cunit = [&] {
    const double r = std::sqrt(U(rng)), th = 2 * M_PI * U(rng);
    return std::polar(r, th);
  };
  struct Shape {
    const char* name;
    int p, q;
  };
  const std::vector<Shape> shapes{{"0F0", 0, 0}, {"1F0", 1, 0}, {"0F1", 0, 1}, {"1F1", 1, 1}, {"2F1", 2, 1}};
  const std::vector<Rational> ks{Rational(1, 2), Rational(1), Rational(2)};

  for (const auto& sh : shapes)
    for (SeriesKind kind : {SeriesKind::K, SeriesKind::F})
      for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(U(rng) * 3);
        const MultiplicityParam p(n, ks[static_cast<std::size_t>(U(rng) * 3)]);
        SeriesSpec s;
        s.param = p;
        for (int i = 0; i < sh.p; ++i) s.upper.push_back(cplx(0.5 + 2.5 * U(rng), U(rng) - 0.5));
        for (int i = 0; i < sh.q; ++i) s.lower.push_back(cplx(p.mu0_double() + 0.5 + 2.5 * U(rng), U(rng) - 0.5));
        std::vector<cplx> z, w;
        for (int i = 0; i < n; ++i) z.push_back(cunit());
        for (int i = 0; i < n; ++i) w.push_back(cunit());
        double zn = 0, wn = 0;
        for (int i = 0; i < n; ++i) zn = std::max(zn, std::abs(z[static_cast<std::size_t>(i)]));
        for (int i = 0; i < n; ++i) wn = std::max(wn, std::abs(w[static_cast<std::size_t>(i)]));
        // target size of ||z|| ||w||
        const double a = sh.p == sh.q + 1 ? (0.1 + 0.7 * U(rng)) / n : 0.2 + (n == 3 ? 1.3 : 2.3) * U(rng);
        const double scale = std::sqrt(a / (zn * wn));
        for (auto& v : z) v *= scale;
        for (auto& v : w) v *= scale;
        SeriesSpec trunc = s;
        trunc.truncation = 1 + static_cast<int>(U(rng) * 10);
        const SeriesValue vt = eval_series(kind, trunc, z, w);
        // reference well inside the truncated bound; relaxed only while the rounding floor is above it
        const SeriesValue vr = eval_above_floor(kind, s, z, w, std::max(1e-14, 1e-2 * vt.tailBound), vt.tailBound);
        const double observed = std::abs(vt.value - vr.value);
        VerificationReport r;
        r.identity = std::string("tail-bound-") + sh.name + (kind == SeriesKind::K ? "-K" : "-F");
        r.add("n", std::to_string(n));
        r.add("k", to_string(p.k));
        r.add("upper", vstr(s.upper));
        r.add("lower", vstr(s.lower));
        r.add("z", vstr(z));
        r.add("w", vstr(w));
        r.add("D", std::to_string(trunc.truncation));
        r.lhs = observed;
        r.rhs = vt.tailBound + vr.tailBound;
        r.relError = observed;
        r.tolerance = vt.tailBound + vr.tailBound;
        r.finish();
        cr.record(std::move(r), opt.keep_passing);
      }

  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(U(rng) * 3);
    const MultiplicityParam p(n, ks[static_cast<std::size_t>(U(rng) * 3)]);
    std::vector<cplx> z;
    cplx sum = 0.0;
    for (int i = 0; i < n; ++i) {
      // odd trials real, even trials complex with |z_i| <= 2
      z.push_back(trial % 2 ? cplx(4 * U(rng) - 2, 0.0) : 2.0 * cunit());
      sum += z.back();
    }
    const std::vector<cplx> one(static_cast<std::size_t>(n), 1.0);
    SeriesSpec s;
    s.param = p;
    // degree from the truncation tail alone; rounding is what the comparison measures
    double zn = 0.0;
    for (const auto& v : z) zn = std::max(zn, std::abs(v));
    const double target = 1e-14 * std::exp(sum.real());
    s.truncation = 1;
    while (series_tail_bound(s, s.truncation, zn) > target) ++s.truncation;
    for (SeriesKind kind : {SeriesKind::F, SeriesKind::K}) {
      const SeriesValue v = eval_series(kind, s, z, one);
      cr.record(numeric_check(kind == SeriesKind::F ? "0F0-exponential" : "0K0-exponential",
                              {{"n", std::to_string(n)}, {"k", to_string(p.k)}, {"z", vstr(z)}}, v.value,
                              std::exp(sum), 1e-12),
                opt.keep_passing);
    }
  }
}

const std::map<int, std::string>& titles() {
  static const std::map<int, std::string> t{
      {1, "exact Laurent section identities"},
      {2, "exact structural identities"},
      {3, "Gram-Schmidt oracle equivalence"},
      {4, "master Laplace quadrature"},
      {5, "Kadell and Euler integrals"},
      {6, "series Laplace identities"},
      {7, "Cherednik kernel Laplace identity"},
      {8, "Post-Widder inversion"},
      {9, "series tail certification"},
  };
  return t;
}

}  // namespace

std::vector<int> desk_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

std::string criterion_title(int id) {
  auto it = titles().find(id);
  if (it == titles().end()) throw std::out_of_range("unknown criterion " + std::to_string(id));
  return it->second;
}

CriterionResult run_criterion(int id, const SuiteOptions& opt) {
  CriterionResult cr;
  cr.id = id;
  cr.title = criterion_title(id);
  Tables tabs;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: crit_main1(cr, opt, tabs); break;
      case 2: crit_structural(cr, opt, tabs); break;
      case 3: crit_gram_schmidt(cr, opt, tabs); break;
      case 4: crit_master(cr, opt, tabs); break;
      case 5: crit_kadell_euler(cr, opt, tabs); break;
      case 6: crit_series_laplace(cr, opt); break;
      case 7: crit_cherednik(cr, opt, tabs); break;
      case 8: crit_post_widder(cr, opt); break;
      case 9: crit_certification(cr, opt); break;
    }
  } catch (const std::exception& e) {
    cr.pass = false;
    cr.error = e.what();
  }
  cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cr;
}

std::vector<CriterionResult> run_suite(const std::string& name, const SuiteOptions& opt, const std::vector<int>& only) {
  if (name != "desk") throw std::invalid_argument("unknown suite '" + name + "' (available: desk)");
  std::vector<CriterionResult> out;
  for (int id : only.empty() ? desk_criteria() : only) out.push_back(run_criterion(id, opt));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "[%s] %d %s (%d checks, %d failed, %.1f s)", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.checks, r.failures, r.seconds);
  std::string s = buf;
  if (!r.error.empty()) s += ": " + r.error;
  return s;
}

std::string suite_json(const std::string& name, const std::vector<CriterionResult>& results, bool with_timing,
                       int indent) {
  nlohmann::ordered_json j;
  j["suite"] = name;
  bool all = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["pass"] = r.pass;
    c["checks"] = r.checks;
    c["failures"] = r.failures;
    if (!r.error.empty()) c["error"] = r.error;
    if (with_timing) c["seconds"] = std::round(r.seconds * 1000.0) / 1000.0;
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto& rep : r.reports) reps.push_back(nlohmann::ordered_json::parse(to_json(rep, with_timing)));
    c["reports"] = std::move(reps);
    arr.push_back(std::move(c));
  }
  j["pass"] = all;
  j["criteria"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace jackdunkl
