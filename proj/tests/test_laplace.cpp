#include <doctest.h>

#include <cmath>
#include <numeric>

#include "jackdunkl/gamma.hpp"
#include "jackdunkl/laplace.hpp"
#include "jackdunkl/quadrature.hpp"

using namespace jackdunkl;

namespace {

double relerr(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Selberg integral with exponents alpha-1, beta-1 and |Delta|^{2 gamma}
double selberg(int n, double alpha, double beta, double gamma) {
  double s = 1.0;
  for (int j = 0; j < n; ++j)
    s *= std::tgamma(alpha + j * gamma) * std::tgamma(beta + j * gamma) * std::tgamma(1 + (j + 1) * gamma) /
         (std::tgamma(alpha + beta + (n + j - 1) * gamma) * std::tgamma(1 + gamma));
  return s;
}

double kummer(double a, double b, double x) {
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 300; ++m) {
    term *= (a + m) / (b + m) * x / (m + 1);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("Gauss-Jacobi and Dirichlet rules") {
  const GaussRule g = gauss_jacobi01(12, 1.5, 0.5);
  double s = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * g.x[i] * g.x[i];
  CHECK(std::abs(s - std::beta(4.5, 1.5)) < 1e-14);
  const SimplexRule d = dirichlet_rule({0.5, 1.0, 2.0}, 10);
  double t = 0.0;
  for (std::size_t i = 0; i < d.w.size(); ++i) t += d.w[i] * d.beta[i][1];
  // Dirichlet(1.5, 2, 3) mean of coordinate 1, times the normalizer
  const double norm = std::tgamma(1.5) * std::tgamma(2.0) * std::tgamma(3.0) / std::tgamma(6.5);
  CHECK(std::abs(t - norm * 2.0 / 6.5) < 1e-14);
}

TEST_CASE("weight omega") {
  CHECK(weight_omega({3.0}, 0.5) == 1.0);
  CHECK(weight_omega({3.0, 1.0}, 0.5) == doctest::Approx(2.0));
  CHECK(weight_omega({2.0, 2.0, 1.0}, 1.0) == 0.0);
}

TEST_CASE("one-dimensional Laplace transforms") {
  const MultiplicityParam p(1, Rational(0));
  const auto qs = QuadratureSpec::make(p, 1e-10);
  NumericPoly x2;
  x2.n = 1;
  x2.terms.push_back({Exponent::from(std::vector<int>{2}), 1.0});
  CHECK(relerr(dunkl_laplace(Integrand::polynomial(x2), {1.0}, qs), 2.0) < 1e-10);
  const auto f = Integrand::function([](const std::vector<double>& x) { return cplx(std::pow(x[0], 1.5)); });
  CHECK(relerr(dunkl_laplace(f, {2.0}, qs), std::tgamma(2.5) * std::pow(2.0, -2.5)) < 1e-8);
}

TEST_CASE("Delta power transform in two variables") {
  const MultiplicityParam p(2, Rational(1, 2));
  const auto qs = QuadratureSpec::make(p, 1e-9);
  // f = Delta^{mu - mu0 - 1} with mu = 2, carried by the Delta power of the rule
  const auto q = laplace_integrate({RayKernel{{-2.0, -3.0}, false}}, Integrand::constant(), 0.5, qs);
  CHECK(std::abs(q.value - 1.0 / 36.0) < 1e-9);
  JackTable t(p);
  const auto r = verify_master({0, 0}, 2.0, {2.0, 3.0}, qs, t, 1e-5);
  CHECK(r.pass);
  CHECK(std::abs(r.lhs - 1.0 / 36.0) < 1e-5);
}

TEST_CASE("chamber symmetry, refinement and cutoff stability") {
  const MultiplicityParam p(2, Rational(1));
  auto qs = QuadratureSpec::make(p, 1e-8);
  JackTable t(p);
  const auto h = Integrand::polynomial(to_numeric(t.P({2, 1})));
  const auto a = laplace_integrate({RayKernel{{-2.0, -3.0}, true}}, h, 0.5, qs);
  const auto b = laplace_integrate({RayKernel{{-3.0, -2.0}, true}}, h, 0.5, qs);
  CHECK(relerr(a.value, b.value) < 1e-12);
  CHECK(a.converged);
  CHECK(a.change < qs.relTol);

  auto finer = qs;
  finer.pointsPerChamberAxis = 2 * a.points;
  finer.maxPointsPerAxis = 8 * a.points;
  CHECK(relerr(laplace_integrate({RayKernel{{-2.0, -3.0}, true}}, h, 0.5, finer).value, a.value) < qs.relTol);

  auto longer = qs;
  longer.cutoff = 1.5 * a.cutoff;
  CHECK(relerr(laplace_integrate({RayKernel{{-2.0, -3.0}, true}}, h, 0.5, longer).value, a.value) < qs.relTol);
}

TEST_CASE("tanh-sinh angular scheme agrees with Gauss-Jacobi") {
  const MultiplicityParam p(2, Rational(1, 2));
  auto qs = QuadratureSpec::make(p, 1e-9);
  JackTable t(p);
  const auto h = Integrand::polynomial(to_numeric(t.E_ref({1, 0})));
  const auto g = laplace_integrate({RayKernel{{-2.0, -3.0}, false}}, h, 0.5, qs);
  qs.scheme = QuadratureScheme::tanh_sinh;
  const auto s = laplace_integrate({RayKernel{{-2.0, -3.0}, false}}, h, 0.5, qs);
  CHECK(relerr(s.value, g.value) < 1e-7);
}

TEST_CASE("Selberg integrals on the cube") {
  for (int n = 1; n <= 3; ++n)
    for (double k : {0.5, 1.0}) {
      const MultiplicityParam p(n, k == 0.5 ? Rational(1, 2) : Rational(1));
      const auto qs = QuadratureSpec::make(p, n <= 2 ? 1e-10 : 1e-6);
      const auto r = cube_integrate(Integrand::constant(), 0.75, 1.5, qs);
      CHECK(relerr(r.value, selberg(n, 1.75, 2.5, k)) < (n <= 2 ? 1e-9 : 1e-5));
    }
}

TEST_CASE("identity verifiers") {
  const MultiplicityParam p1(1, Rational(0));
  JackTable t1(p1);
  const auto q1 = QuadratureSpec::make(p1, 1e-10);
  auto m = verify_master({2}, 1.5, {2.0}, q1, t1, 1e-8);
  CHECK(m.pass);
  CHECK(relerr(m.lhs, std::tgamma(3.5) * std::pow(2.0, -3.5)) < 1e-8);
  auto kd = verify_kadell({0}, 2.0, 2.0, q1, t1, 1e-8);
  CHECK(kd.pass);
  CHECK(relerr(kd.lhs, 1.0 / 6.0) < 1e-10);

  SeriesSpec s0;
  s0.param = p1;
  auto eu = verify_euler(s0, 1.5, 4.0, {0.7}, q1, 1e-8);
  CHECK(eu.pass);
  CHECK(relerr(eu.lhs, std::beta(1.5, 2.5) * kummer(1.5, 4.0, 0.7)) < 1e-8);

  SeriesSpec s01 = s0;
  s01.lower = {2.5};
  auto hl = verify_hyp_laplace(SeriesKind::K, s01, 1.5, {0.8}, {2.0}, q1, 1e-7);
  CHECK(hl.pass);
  CHECK(relerr(hl.lhs, std::tgamma(1.5) * std::pow(2.0, -1.5) * kummer(1.5, 2.5, 0.4)) < 1e-7);

  const MultiplicityParam p2(2, Rational(1));
  JackTable t2(p2);
  const auto q2 = QuadratureSpec::make(p2, 1e-8);
  CHECK(verify_master({1, 0}, p2.mu0_double() + 1.5, {2.0, 3.0}, q2, t2, 1e-5).pass);
  CHECK(verify_master_symmetric({1, 1}, 2.5, {1.5, 2.5}, q2, t2, 1e-5).pass);
  CHECK(verify_kadell({1, 0}, 2.0, 3.0, q2, t2, 1e-5).pass);
  CHECK(verify_1K0(SeriesKind::K, 2.5, {0.5, 0.4}, {0.6, 0.5}, p2, q2, 1e-5).pass);
}

TEST_CASE("verifier preconditions") {
  const MultiplicityParam p(2, Rational(1));
  JackTable t(p);
  const auto qs = QuadratureSpec::make(p, 1e-8);
  CHECK_THROWS_AS(verify_master({0, 0}, 1.2, {2.0, 3.0}, qs, t, 1e-5), std::domain_error);
  CHECK_THROWS_AS(verify_master({0, 0}, 2.0, {-2.0, 3.0}, qs, t, 1e-5), std::domain_error);
  SeriesSpec s;
  s.param = p;
  s.upper = {1.0};
  CHECK_THROWS_AS(verify_hyp_laplace(SeriesKind::K, s, 2.0, {0.1, 0.1}, {2.0, 3.0}, qs, 1e-4), SeriesDomainError);
  s.upper.clear();
  CHECK_THROWS_AS(verify_hyp_laplace(SeriesKind::K, s, 2.0, {1.0, 0.1}, {2.0, 3.0}, qs, 1e-4), SeriesDomainError);
  CHECK_THROWS_AS(verify_macdonald_cherednik({{0, 0}}, 2.0, {2.0, 3.0}, qs, t, 1e-4), std::domain_error);
  auto tight = qs;
  tight.relTol = 1e-15;
  tight.maxPointsPerAxis = 4;
  tight.pointsPerChamberAxis = 2;
  const auto h = Integrand::function([](const std::vector<double>& x) { return cplx(std::cos(5 * x[0])); });
  CHECK_THROWS_AS(laplace_integrate({RayKernel{{-2.0, -3.0}, false}}, h, 0.0, tight), QuadratureError);
}

TEST_CASE("rational Cherednik kernel on the lattice") {
  const MultiplicityParam p(2, Rational(1, 2));
  JackTable t(p);
  const std::vector<cplx> z{1.5, 0.4};
  CHECK(std::abs(cherednik_rat({{0, 0}}, z, t) - 1.0) < 1e-15);
  // Delta-shifted lattice point: G(eta + 1) = Delta G(eta)
  CHECK(relerr(cherednik_rat({{2, 1}}, z, t), z[0] * z[1] * cherednik_rat({{1, 0}}, z, t)) < 1e-14);
  // E_eta(1/z) = E_{-eta^R}(z^R)
  const std::vector<cplx> zi{1.0 / z[0], 1.0 / z[1]}, zr{z[1], z[0]};
  const double e02 = eval_E_at_one({0, 2}, p).get_d();
  CHECK(relerr(cherednik_rat({{0, 2}}, zi, t) * e02, cherednik_rat({{-2, 0}}, zr, t) * e02) < 1e-13);
  const auto lam = ShiftedSpectral{{2, 1}}.lambda(p);
  CHECK(lam[0] == doctest::Approx(2.25));
  CHECK(lam[1] == doctest::Approx(0.75));
  CHECK(verify_macdonald_cherednik({{2, 1}}, 2.0, {2.0, 3.0}, QuadratureSpec::make(p, 1e-8), t, 1e-5).pass);
}

TEST_CASE("Post-Widder inversion") {
  const MultiplicityParam p1(1, Rational(0));
  const auto q1 = QuadratureSpec::make(p1, 1e-11);
  const auto e = Integrand::function([](const std::vector<double>& x) { return cplx(std::exp(-x[0])); }, -1.0);
  CHECK(relerr(post_widder(e, {1.0}, 10, p1, q1).value, std::pow(10.0 / 11.0, 11.0)) < 1e-9);
  const MultiplicityParam p2(2, Rational(1, 2));
  const auto q2 = QuadratureSpec::make(p2, 1e-10);
  for (int nu : {3, 8}) CHECK(relerr(post_widder(Integrand::constant(), {1.0, 2.0}, nu, p2, q2).value, 1.0) < 1e-8);
  CHECK_THROWS_AS(post_widder(Integrand::constant(), {1.0, -2.0}, 3, p2, q2), std::domain_error);
}

TEST_CASE("results do not depend on the thread count") {
  const MultiplicityParam p(2, Rational(1, 2));
  JackTable t(p);
  const auto qs = QuadratureSpec::make(p, 1e-8);
  set_thread_count(1);
  const auto a = verify_master({1, 1}, 2.5, {2.0, 3.0}, qs, t, 1e-5);
  set_thread_count(3);
  const auto b = verify_master({1, 1}, 2.5, {2.0, 3.0}, qs, t, 1e-5);
  set_thread_count(1);
  CHECK(a.lhs == b.lhs);
}
