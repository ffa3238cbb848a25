#include <doctest.h>

#include <random>

#include "jackdunkl/dunkl.hpp"

using namespace jackdunkl;

namespace {

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

QPoly x(int n, int i) { return QPoly::variable(n, i); }
QPoly one(int n) { return QPoly::constant(n, Rational(1)); }

QPoly random_poly(std::mt19937_64& rng, int n, int maxdeg, int terms) {
  std::uniform_int_distribution<int> cd(-4, 4);
  QPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e;
    int left = std::uniform_int_distribution<int>(0, maxdeg)(rng);
    for (int i = 0; i < n && left > 0; ++i) {
      int v = std::uniform_int_distribution<int>(0, left)(rng);
      e[i] = static_cast<int16_t>(v);
      left -= v;
    }
    p.add_term(e, canon(Rational(cd(rng), 1 + t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("Dunkl operators on small inputs") {
  const Rational k(1, 3);
  CHECK(dunkl_T(1, x(2, 1), k) == one(2) * Rational(1 + k));
  CHECK(dunkl_T(1, one(2), k).is_zero());
  CHECK(dunkl_T(1, x(2, 2), k) == one(2) * Rational(-k));
}

TEST_CASE("Cherednik operators on small inputs") {
  const Rational k(2, 5);
  CHECK(cherednik_D(2, x(2, 2), k) == x(2, 2));
  CHECK(cherednik_D(1, x(2, 2), k) == x(2, 2) * Rational(-k));
  for (int n = 1; n <= 4; ++n)
    for (int j = 1; j <= n; ++j) CHECK(cherednik_D(j, one(n), k) == one(n) * Rational(-k * (j - 1)));
}

TEST_CASE("raising operator") {
  CHECK(raising_phi(one(2)) == x(2, 2));
  CHECK(raising_phi_index({0, 0}) == Composition{0, 1});
  CHECK(raising_phi(x(2, 2)) == x(2, 1) * x(2, 2));
}

TEST_CASE("operator calculus") {
  const Rational k(1, 2);
  std::mt19937_64 rng(2);
  QPoly p = random_poly(rng, 3, 4, 6);
  CHECK(apply_poly_of_T(x(3, 1), p, k) == dunkl_T(1, p, k));
  CHECK(apply_poly_of_T(one(3), p, k) == p);
  CHECK_THROWS_AS(apply_poly_of_T(QPoly::monomial(3, std::vector<int>{-1, 0, 0}), p, k), std::invalid_argument);
}

TEST_CASE("Dunkl operators commute and are equivariant") {
  std::mt19937_64 rng(7);
  for (Rational k : {Rational(1, 2), Rational(5, 3)}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int n = 2 + trial % 2;
      QPoly p = random_poly(rng, n, 6, 5);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          CHECK(dunkl_T(i, dunkl_T(j, p, k), k) == dunkl_T(j, dunkl_T(i, p, k), k));
      for (const auto& s : all_permutations(n)) {
        const auto si = inverse(s);
        for (int i = 1; i <= n; ++i) {
          QPoly lhs = dunkl_T(i, p.permuted(si), k).permuted(s);
          CHECK(lhs == dunkl_T(s[i - 1] + 1, p, k));
        }
      }
    }
  }
}

TEST_CASE("product rule with a symmetric factor") {
  const Rational k(2);
  std::mt19937_64 rng(13);
  const QPoly g = (x(3, 1) + x(3, 2) + x(3, 3)) * (x(3, 1) * x(3, 2) * x(3, 3) + one(3));
  for (int trial = 0; trial < 5; ++trial) {
    QPoly f = random_poly(rng, 3, 4, 5);
    for (int i = 1; i <= 3; ++i) CHECK(dunkl_T(i, f * g, k) == dunkl_T(i, f, k) * g + f * g.partial(i));
  }
}

TEST_CASE("sections f Delta^{-mu}") {
  const Rational k(1, 2);
  const DeltaPowerSection s1{MuLaurent::constant(2, MuPoly(1))};
  const MuLaurent expect = MuLaurent::monomial(2, std::vector<int>{-1, 0}, -MuPoly::mu());
  CHECK(dunkl_T_on_section(1, s1, k).f == expect);
  const DeltaPowerSection sx{to_mu(x(2, 1))};
  CHECK(dunkl_T_on_section(1, sx, k).f == MuLaurent::constant(2, MuPoly(1 + k) - MuPoly::mu()));
  DeltaPowerSection s = s1;
  for (int t = 0; t < 4; ++t) {
    int before = 0, after = 0;
    for (const auto& [a, c] : s.f.terms()) before = std::max(before, c.degree());
    s = dunkl_T_on_section(1 + t % 2, s, k);
    for (const auto& [a, c] : s.f.terms()) after = std::max(after, c.degree());
    CHECK(after <= before + 1);
  }
}

TEST_CASE("Dunkl pairing") {
  const Rational k(1, 3);
  CHECK(dunkl_pairing(one(2), one(2), k) == 1);
  CHECK(dunkl_pairing(x(2, 1), x(2, 1), k) == 1 + k);
  CHECK(dunkl_pairing(x(2, 1), x(2, 1) * x(2, 1), k) == 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    QPoly p = random_poly(rng, n, 4, 4), q = random_poly(rng, n, 4, 4);
    CHECK(dunkl_pairing(p, q, k) == dunkl_pairing(q, p, k));
    for (int i = 1; i <= n; ++i)
      CHECK(dunkl_pairing(dunkl_T(i, p, k), q, k) == dunkl_pairing(p, x(n, i) * q, k));
  }
}

TEST_CASE("Cherednik operators are triangular") {
  for (Rational k : {Rational(1, 2), Rational(5, 3)}) {
    for (int n = 2; n <= 3; ++n) {
      const MultiplicityParam p(n, k);
      for (int m = 0; m <= 4; ++m)
        for (const auto& eta : enumerate_compositions(n, m)) {
          const QPoly xe = QPoly::monomial(n, eta);
          const auto ev = eta_bar(eta, p);
          for (int j = 1; j <= n; ++j) {
            QPoly r = cherednik_D(j, xe, k) - xe * ev[j - 1];
            for (const auto& [a, c] : r.terms())
              CHECK(dominance_composition(a.to_vector(n), eta) == Order::less);
          }
        }
    }
  }
}
