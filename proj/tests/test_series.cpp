#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "jackdunkl/gamma.hpp"
#include "jackdunkl/hyperseries.hpp"
#include "jackdunkl/kernel_ode.hpp"

using namespace jackdunkl;

namespace {

double relerr(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<cplx> random_vec(std::mt19937_64& rng, int n, double radius, bool real = false) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<cplx> v;
  for (int i = 0; i < n; ++i) v.emplace_back(radius * U(rng), real ? 0.0 : radius * U(rng));
  return v;
}

SeriesSpec spec_of(int n, Rational k, std::vector<cplx> upper = {}, std::vector<cplx> lower = {}) {
  SeriesSpec s;
  s.param = MultiplicityParam(n, k);
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  return s;
}

}  // namespace

TEST_CASE("scalar gamma against boost") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-8.0, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double x = U(rng);
    if (std::abs(x - std::round(x)) < 1e-3 && x < 0.5) continue;
    CHECK(relerr(gamma_c(x), boost::math::tgamma(x)) < 1e-13);
  }
  CHECK_THROWS_AS(gamma_c(-2.0), PoleError);
}

TEST_CASE("complex gamma identities") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_vec(rng, 1, 6.0)[0];
    CHECK(relerr(gamma_c(z + 1.0), z * gamma_c(z)) < 1e-12);
    // reflection
    CHECK(relerr(gamma_c(z) * gamma_c(1.0 - z), M_PI / std::sin(M_PI * z)) < 1e-11);
  }
  for (double t : {0.5, 1.0, 3.0}) {
    CHECK(std::abs(std::norm(gamma_c(cplx(0.5, t))) - M_PI / std::cosh(M_PI * t)) < 1e-13);
    CHECK(std::abs(std::norm(gamma_c(cplx(0.0, t))) - M_PI / (t * std::sinh(M_PI * t))) < 1e-13);
  }
}

TEST_CASE("multivariate gamma") {
  CHECK(std::abs(gamma_n(3.0, MultiplicityParam(1, Rational(0))) - 2.0) < 1e-14);
  const MultiplicityParam p(2, Rational(1, 2));
  CHECK(std::abs(gamma_n_constant(2, 0.5) - 2.0 / std::sqrt(M_PI)) < 1e-15);
  CHECK(std::abs(gamma_n(std::vector<cplx>{1.0, 0.0}, p) - (-4.0)) < 1e-13);
  CHECK(std::abs(gamma_n(2.0, p) - 1.0) < 1e-14);
  try {
    gamma_n(std::vector<cplx>{1.0, 0.5}, p);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.index() == 2);
  }
  // log form agrees away from poles
  const MultiplicityParam p3(3, Rational(2));
  const std::vector<cplx> lam{cplx(6.5, 1.0), cplx(5.0, -0.5), 7.25};
  CHECK(relerr(std::exp(log_gamma_n(lam, p3)), gamma_n(lam, p3)) < 1e-12);
}

TEST_CASE("Pochhammer symbol is a ratio of multivariate gammas") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n)
    for (Rational k : {Rational(1, 2), Rational(1), Rational(5, 3)}) {
      const MultiplicityParam p(n, k);
      for (const auto& lam : enumerate_partitions(n, 4)) {
        const cplx mu = cplx(3.0 + k.get_d() * n, 0.0) + random_vec(rng, 1, 1.0)[0];
        std::vector<cplx> shifted;
        for (int v : lam) shifted.push_back(mu + static_cast<double>(v));
        CHECK(relerr(pochhammer(mu, lam, p), gamma_n(shifted, p) / gamma_n(mu, p)) < 1e-11);
      }
    }
}

TEST_CASE("classical and collapsing series values") {
  const MultiplicityParam p2(2, Rational(1, 2));
  CHECK(std::abs(dunkl_kernel({1.0, 2.0}, {0.0, 0.0}, p2).value - 1.0) < 1e-15);
  auto s = spec_of(1, Rational(0), {2.0});
  CHECK(std::abs(eval_pKq(s, {0.5}, {1.0}).value - 4.0) < 1e-12);
  // exponential collapse at w = 1
  const auto v = eval_pKq(spec_of(2, Rational(1)), {1.0, 1.0}, {1.0, 1.0});
  CHECK(std::abs(v.value - std::exp(2.0)) <= v.tailBound);
  CHECK(v.converged);
  CHECK(v.termsUsed > 0);
  // n = 1: the two kinds agree
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    auto sp = spec_of(1, Rational(1), {1.5}, {2.5});
    const auto z = random_vec(rng, 1, 1.5), w = random_vec(rng, 1, 1.5);
    CHECK(relerr(eval_pFq(sp, z, w).value, eval_pKq(sp, z, w).value) < 1e-13);
  }
}

TEST_CASE("symmetric series is the average of the non-symmetric one") {
  std::mt19937_64 rng(19);
  for (Rational k : {Rational(1), Rational(1, 2)})
    for (int i = 0; i < 10; ++i) {
      auto sp = spec_of(2, k, {1.25}, {3.0});
      const auto z = random_vec(rng, 2, 1.2), w = random_vec(rng, 2, 1.2);
      const cplx avg = 0.5 * (eval_pKq(sp, z, w).value + eval_pKq(sp, {z[1], z[0]}, w).value);
      CHECK(relerr(eval_pFq(sp, z, w).value, avg) < 1e-11);
    }
}

TEST_CASE("Dunkl kernel: shift, symmetry, positivity, exponential bound") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int n = 2; n <= 3; ++n) {
    const MultiplicityParam p(n, Rational(1, 2));
    for (int i = 0; i < 10; ++i) {
      const auto lam = random_vec(rng, n, 0.8), z = random_vec(rng, n, 0.8);
      const cplx s(U(rng) - 0.5, U(rng) - 0.5);
      cplx sum = 0.0;
      auto zs = z;
      for (int j = 0; j < n; ++j) {
        sum += lam[static_cast<std::size_t>(j)];
        zs[static_cast<std::size_t>(j)] += s;
      }
      CHECK(relerr(dunkl_kernel(lam, zs, p).value, std::exp(s * sum) * dunkl_kernel(lam, z, p).value) < 1e-11);
      CHECK(relerr(bessel_J(lam, z, p).value, bessel_J(z, lam, p).value) < 1e-12);
      CHECK(relerr(dunkl_kernel(lam, z, p).value, dunkl_kernel(z, lam, p).value) < 1e-12);
    }
    for (int i = 0; i < 20; ++i) {
      const auto x = random_vec(rng, n, 1.0, true), y = random_vec(rng, n, 1.0, true);
      CHECK(dunkl_kernel(x, y, p).value.real() > 0.0);
      // |E(-z, x)| <= exp(-|x|_1 min Re z)
      std::vector<cplx> mz, xp;
      double l1 = 0.0, minre = 1e300;
      for (int j = 0; j < n; ++j) {
        const cplx zj(0.2 + U(rng), U(rng) - 0.5);
        mz.push_back(-zj);
        minre = std::min(minre, zj.real());
        xp.push_back(U(rng));
        l1 += xp.back().real();
      }
      CHECK(std::abs(dunkl_kernel(mz, xp, p).value) <= std::exp(-l1 * minre) * (1 + 1e-12));
    }
  }
}

TEST_CASE("certified tail dominates the observed remainder") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> Dd(1, 12);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 3;
    auto sp = spec_of(n, Rational(1, 2), {0.75}, {2.5});
    const auto z = random_vec(rng, n, 1.0), w = random_vec(rng, n, 1.0);
    sp.truncation = Dd(rng);
    const auto a = eval_pKq(sp, z, w);
    sp.truncation += 10;
    const auto b = eval_pKq(sp, z, w);
    CHECK(std::abs(a.value - b.value) <= a.tailBound);
  }
}

TEST_CASE("tail bound is monotone in the degree for p < q") {
  auto sp = spec_of(2, Rational(1), {1.5}, {2.0, 3.5});
  double prev = INFINITY;
  for (int D = 0; D <= 40; ++D) {
    const double t = series_tail_bound(sp, D, 2.0);
    CHECK(t <= prev);
    prev = t;
  }
}

TEST_CASE("series domain and parameter errors") {
  auto s10 = spec_of(2, Rational(1, 2), {1.0});
  CHECK_THROWS_AS(eval_pKq(s10, {1.0, 0.5}, {1.0, 0.2}), SeriesDomainError);
  auto s20 = spec_of(2, Rational(1, 2), {1.0, 2.0});
  CHECK_THROWS_AS(eval_pKq(s20, {0.1, 0.0}, {0.1, 0.0}), SeriesDomainError);
  CHECK(std::abs(eval_pKq(s20, {0.0, 0.0}, {0.3, 0.1}).value - 1.0) < 1e-15);
  // nu in {0, k, ..., k(n-1)} - N_0
  CHECK_THROWS_AS(validate_series_spec(spec_of(2, Rational(1, 2), {}, {0.5})), SeriesDomainError);
  CHECK_THROWS_AS(validate_series_spec(spec_of(2, Rational(1, 2), {}, {-1.5})), SeriesDomainError);
  CHECK_NOTHROW(validate_series_spec(spec_of(2, Rational(1, 2), {}, {0.75})));
  // p = q+1 inside the ball but outside ||z|| ||w|| < 1/n has no certified bound
  CHECK(std::isinf(series_tail_bound(s10, 10, 0.7)));
  CHECK_THROWS_AS(eval_pKq(s10, {0.7, 0.0}, {1.0, 0.0}), SeriesConvergenceError);
}

TEST_CASE("ray solver reproduces the series kernel") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 3; ++n)
    for (Rational k : {Rational(1, 2), Rational(2)}) {
      const MultiplicityParam p(n, k);
      for (int i = 0; i < 4; ++i) {
        const auto lam = random_vec(rng, n, 1.0);
        std::vector<double> x;
        std::vector<cplx> xc;
        for (const auto& v : random_vec(rng, n, 1.0, true)) {
          x.push_back(std::abs(v.real()));
          xc.emplace_back(x.back());
        }
        CHECK(relerr(dunkl_kernel_ode(lam, x, p), dunkl_kernel(lam, xc, p).value) < 1e-9);
        CHECK(relerr(dunkl_kernel_ode(lam, x, p, true), bessel_J(lam, xc, p).value) < 1e-9);
      }
    }
}

TEST_CASE("closed-form kernel for n = 2, k = 1/2") {
  const MultiplicityParam p(2, Rational(1, 2));
  const std::vector<cplx> lam{1.3, -0.4};
  const std::vector<double> x{2.0, 0.5};
  const double t = (1.3 + 0.4) * (2.0 - 0.5) / 2;
  const double expect = (std::cyl_bessel_i(0.0, t) + std::cyl_bessel_i(1.0, t)) * std::exp((1.3 - 0.4) * 2.5 / 2);
  CHECK(relerr(dunkl_kernel_ode(lam, x, p), expect) < 1e-10);
  CHECK(relerr(dunkl_kernel(lam, {2.0, 0.5}, p).value, expect) < 1e-12);
}

TEST_CASE("series collected by monomial") {
  auto sp = spec_of(2, Rational(1, 2), {}, {2.0});
  const std::vector<cplx> w{0.7, -0.3};
  const NumericPoly h = series_in_x(SeriesKind::K, sp, w, 30);
  const double x[2] = {0.4, 0.9};
  CHECK(relerr(h.eval(x), eval_pKq(sp, {0.4, 0.9}, w).value) < 1e-12);
  CHECK(h.degree() <= 30);
}
