#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "jackdunkl/jack.hpp"

using namespace jackdunkl;

namespace {

QPoly x(int n, int i) { return QPoly::variable(n, i); }
std::vector<Rational> ones(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)); }

}  // namespace

TEST_CASE("small non-symmetric Jack polynomials") {
  const Rational k(1, 2);
  const MultiplicityParam p(2, k);
  JackTable t(p);
  CHECK(t.E({0, 0}) == QPoly::constant(2, Rational(1)));
  CHECK(t.E({0, 1}) == x(2, 2));
  CHECK(t.E({1, 0}) == x(2, 1) + x(2, 2) * Rational(k / (1 + k)));
  CHECK(t.E({0, 1}).str() == "x2");
  CHECK(t.E({1, 0}).str() == "x1 + 1/3*x2");
}

TEST_CASE("small symmetric Jack polynomials") {
  const Rational k(5, 3);
  const MultiplicityParam p(2, k);
  JackTable t(p);
  CHECK(t.P({1, 0}) == x(2, 1) + x(2, 2));
  CHECK(t.P({1, 1}) == x(2, 1) * x(2, 2));
  CHECK(t.P({2, 0}) == x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2) + x(2, 1) * x(2, 2) * Rational(2 * k / (k + 1)));
  const MultiplicityParam p0(3, Rational(0));
  JackTable t0(p0);
  CHECK(t0.P({2, 1, 0}) == monomial_symmetric({2, 1, 0}));
  CHECK(t0.E({0, 2, 1}) == QPoly::monomial(3, std::vector<int>{0, 2, 1}));
}

TEST_CASE("weight cap") {
  JackTable t(MultiplicityParam(3, Rational(1)));
  CHECK(t.max_weight() == 6);
  CHECK_THROWS_AS(t.E({7, 0, 0}), ResourceLimitError);
  JackTable big(MultiplicityParam(3, Rational(1)), 7);
  CHECK_NOTHROW(big.E({7, 0, 0}));
}

TEST_CASE("normalization constants") {
  const Rational k(2, 7);
  const MultiplicityParam p(2, k);
  CHECK(dprime({1, 0}, p) == 1 / k);
  CHECK(c_norm({1, 0}, p) == 1);
  CHECK(dprime({0, 0}, p) == 1);
  CHECK(c_norm({0, 0}, p) == 1);
  // cells (1,1) with leg 1 and (2,1) with leg 0
  CHECK(dprime({1, 1}, p) == (1 / k + 1) * (1 / k));
  CHECK(c_norm({1, 1}, p) == Rational(2) / (1 + k));
  // c_lambda <= |lambda|!/lambda!
  for (int m = 0; m <= 6; ++m)
    for (const auto& lam : enumerate_partitions(3, m)) {
      Rational bound = factorial(m);
      for (int v : lam) bound /= factorial(v);
      CHECK(c_norm(lam, MultiplicityParam(3, Rational(1, 2))) <= bound);
    }
}

TEST_CASE("evaluation at one: product formulas versus expansion") {
  for (Rational k : {Rational(1, 2), Rational(1), Rational(5, 3), Rational(0)}) {
    for (int n = 1; n <= 3; ++n) {
      const MultiplicityParam p(n, k);
      JackTable t(p);
      for (int m = 0; m <= 5; ++m) {
        for (const auto& eta : enumerate_compositions(n, m))
          CHECK(eval_E_at_one(eta, p) == t.E_ref(eta).eval_exact(ones(n)));
        for (const auto& lam : enumerate_partitions(n, m))
          CHECK(eval_P_at_one(lam, p) == t.P(lam).eval_exact(ones(n)));
      }
    }
  }
  const Rational k(3, 4);
  CHECK(eval_E_at_one({1, 0}, MultiplicityParam(2, k)) == (1 + 2 * k) / (1 + k));
  CHECK(eval_P_at_one({2, 0}, MultiplicityParam(2, k)) == 2 + 2 * k / (k + 1));
}

TEST_CASE("eigenvalue equations, triangularity and positivity") {
  for (Rational k : {Rational(1, 2), Rational(5, 3)}) {
    for (int n = 2; n <= 3; ++n) {
      const MultiplicityParam p(n, k);
      JackTable t(p);
      for (int m = 0; m <= 4; ++m)
        for (const auto& eta : enumerate_compositions(n, m)) {
          const QPoly& e = t.E_ref(eta);
          CHECK(check_eigen_equations(eta, e, p) == 0);
          CHECK(e.coeff(Exponent::from(eta)) == 1);
          for (const auto& [a, c] : e.terms()) {
            CHECK(sgn(c) > 0);
            if (a.to_vector(n) != eta) CHECK(dominance_composition(a.to_vector(n), eta) == Order::less);
          }
        }
    }
  }
}

TEST_CASE("binomial coefficients") {
  const MultiplicityParam p(2, Rational(1, 2));
  JackTable t(p);
  auto row = binomial_coeffs({1, 0}, t);
  CHECK(row.at({0, 0}) == 1);
  CHECK(row.at({1, 0}) == 1);
  const MultiplicityParam p3(3, Rational(5, 3));
  JackTable t3(p3);
  for (int m = 0; m <= 4; ++m)
    for (const auto& lam : enumerate_partitions(3, m)) {
      auto r = binomial_coeffs(lam, t3);
      CHECK(r.at(lam) == 1);
      CHECK(r.at({0, 0, 0}) == 1);
      for (const auto& [mu, b] : r) CHECK(sgn(b) >= 0);
    }
}

TEST_CASE("Gram-Schmidt oracle on small cases") {
  const MultiplicityParam p(2, Rational(5, 3));
  JackTable t(p);
  CHECK(gram_schmidt_P({2, 0}, p) == t.P({2, 0}));
  CHECK(gram_schmidt_P({1, 1}, p) == t.P({1, 1}));
}

TEST_CASE("Laurent section identity on small cases") {
  const MultiplicityParam p(2, Rational(1, 2));
  JackTable t(p);
  CHECK(verify_main1({0, 0}, t).pass);
  auto r = verify_main1({0, 1}, t);
  CHECK(r.pass);
  CHECK(r.detail.empty());
  CHECK(verify_main1({2, 1}, t).pass);
  CHECK(verify_main1_symmetric({2, 1}, t).pass);
}

TEST_CASE("cache round trip and failure modes") {
  const MultiplicityParam p(2, Rational(1, 2));
  JackTable t(p, 4);
  t.build_up_to(4);
  t.E({-1, 2});
  const std::string path = "jack_cache_test.json";
  save_table(t, path);
  auto loaded = load_table(path, p);
  CHECK(serialize_table(*loaded) == serialize_table(t));
  for (const auto& eta : t.stored_E()) CHECK(loaded->E_ref(eta) == t.E_ref(eta));

  CHECK_THROWS_AS(load_table(path, MultiplicityParam(2, Rational(1))), CacheError);

  std::string text = serialize_table(t);
  auto pos = text.find("\"num\": \"1\"");
  REQUIRE(pos != std::string::npos);
  std::string bad = text;
  bad.replace(pos, 10, "\"num\": \"2\"");
  CHECK_THROWS_AS(parse_table(bad, p), CacheError);

  std::string ver = text;
  ver.replace(ver.find("\"formatVersion\": 1"), 18, "\"formatVersion\": 9");
  CHECK_THROWS_AS(parse_table(ver, p), CacheError);
  std::remove(path.c_str());
}
