#include <doctest.h>

#include <random>

#include "jackdunkl/combinatorics.hpp"

using namespace jackdunkl;

namespace {

// Brute force: shortest permutation taking eta_plus to eta.
Permutation brute_shortest(const Composition& eta) {
  const int n = static_cast<int>(eta.size());
  Permutation best;
  int best_len = 1 << 20;
  for (const auto& s : all_permutations(n)) {
    if (act(s, eta_plus(eta)) == eta && perm_length(s) < best_len) {
      best = s;
      best_len = perm_length(s);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("eta_plus") {
  CHECK(eta_plus({0, 2, 1}) == Partition{2, 1, 0});
  CHECK(eta_plus({3, 3}) == Partition{3, 3});
  CHECK(eta_plus({0, 1}) == Partition{1, 0});
}

TEST_CASE("shortest permutation agrees with brute force") {
  CHECK(shortest_perm({1, 0}) == identity_perm(2));
  CHECK(shortest_perm({0, 1}) == Permutation{1, 0});
  const Permutation w = shortest_perm({0, 2, 1});
  CHECK(perm_length(w) == 2);
  CHECK(act(w, Partition{2, 1, 0}) == Composition{0, 2, 1});
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& eta : enumerate_compositions(n, m)) {
        const Permutation s = shortest_perm(eta);
        CHECK(act(s, eta_plus(eta)) == eta);
        CHECK(perm_length(s) == perm_length(brute_shortest(eta)));
      }
}

TEST_CASE("Bruhat recursion matches the tableau criterion") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& u : perms)
      for (const auto& v : perms) CHECK(bruhat_leq(u, v) == bruhat_leq_tableau(u, v));
  }
}

TEST_CASE("dominance on partitions") {
  CHECK(dominance_partition({1, 1}, {2, 0}) == Order::less);
  CHECK(dominance_partition({2, 0}, {2, 0}) == Order::equal);
  CHECK(dominance_partition({2, 0, 0}, {1, 1, 1}) == Order::incomparable);
  CHECK(dominance_partition({3, 1, 1, 1}, {2, 2, 2, 0}) == Order::incomparable);
}

TEST_CASE("dominance on compositions") {
  CHECK(dominance_composition({0, 1}, {1, 0}) == Order::less);
  CHECK(dominance_composition({1, 1}, {2, 0}) == Order::less);
  CHECK(dominance_composition({1, 0}, {0, 1}) == Order::greater);
}

TEST_CASE("composition dominance is a partial order") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m) {
      const auto cs = enumerate_compositions(n, m);
      for (const auto& a : cs)
        for (const auto& b : cs) {
          const Order ab = dominance_composition(a, b), ba = dominance_composition(b, a);
          if (ab == Order::less) CHECK(ba == Order::greater);
          if (ab == Order::equal) CHECK(a == b);
          if (ab == Order::incomparable) CHECK(ba == Order::incomparable);
          for (const auto& c : cs)
            if (ab == Order::less && dominance_composition(b, c) == Order::less)
              CHECK(dominance_composition(a, c) == Order::less);
        }
    }
}

TEST_CASE("eigenvalues eta_bar") {
  const MultiplicityParam p(2, Rational(1, 3));
  CHECK(eta_bar({0, 1}, p) == EigenvalueVector{-p.k, Rational(1)});
  const MultiplicityParam p4(4, Rational(2));
  CHECK(eta_bar({0, 0, 0, 0}, p4) == EigenvalueVector{0, -2, -4, -6});
  const MultiplicityParam p0(3, Rational(0));
  CHECK(eta_bar({2, 0, 5}, p0) == EigenvalueVector{2, 0, 5});
  // lambda-bar + (k/2)(n-1) = lambda - rho on partitions.
  for (Rational k : {Rational(1, 2), Rational(5, 3), Rational(2)}) {
    const MultiplicityParam q(3, k);
    const auto r = rho(q);
    for (int m = 0; m <= 5; ++m)
      for (const auto& lam : enumerate_partitions(3, m)) {
        const auto lb = eta_bar(lam, q);
        for (int j = 0; j < 3; ++j) CHECK(lb[j] + k / 2 * 2 == Rational(lam[j]) - r[j]);
      }
  }
}

TEST_CASE("legs and colegs") {
  CHECK(leg({1, 0}, 1, 1) == 0);
  CHECK(leg({1, 1}, 1, 1) == 1);
  CHECK(leg({2, 0}, 1, 2) == 0);
  CHECK_THROWS_AS(leg({1, 0}, 2, 1), std::out_of_range);
  CHECK(coleg({2, 1, 2}, 3) == 1);
}

TEST_CASE("Pochhammer symbols") {
  const MultiplicityParam p(2, Rational(1, 2));
  CHECK(pochhammer_sym({0, 0}, p) == MuPoly(1));
  const MuPoly mu = MuPoly::mu();
  CHECK(pochhammer_sym({1, 2}, p) == mu * (mu + MuPoly(1)) * (mu - MuPoly(p.k)));
  const MultiplicityParam p1(1, Rational(3));
  CHECK(pochhammer_sym({3}, p1) == mu * (mu + MuPoly(1)) * (mu + MuPoly(2)));
  CHECK(pochhammer_exact(Rational(5, 2), {2, 1}, p) == pochhammer_sym({2, 1}, p).eval(Rational(5, 2)));
}

TEST_CASE("composition enumeration") {
  CHECK(enumerate_compositions(2, 1) == std::vector<Composition>{{1, 0}, {0, 1}});
  CHECK(enumerate_compositions(2, 0) == std::vector<Composition>{{0, 0}});
  CHECK(enumerate_compositions(3, 2).size() == 6);
  CHECK(enumerate_compositions(4, 5).size() == 56);
  CHECK(enumerate_partitions(3, 4) == std::vector<Partition>{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {2, 1, 1}});
}

TEST_CASE("multiplicity parameter validation") {
  CHECK_THROWS_AS(MultiplicityParam(2, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(MultiplicityParam(0, Rational(1)), std::invalid_argument);
  CHECK(MultiplicityParam(3, Rational(1, 2)).mu0() == 1);
}
