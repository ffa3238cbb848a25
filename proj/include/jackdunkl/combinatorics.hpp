#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jackdunkl/mupoly.hpp"
#include "jackdunkl/rational.hpp"

namespace jackdunkl {

/// Exponent vector eta in N_0^n (or Z^n for the Delta-shifted extension).
using Composition = std::vector<int>;
/// Weakly decreasing composition.
using Partition = std::vector<int>;
/// 0-based one-line notation: sigma[i] is the image of i.
using Permutation = std::vector<int>;
/// Exact eigenvalues eta-bar.
using EigenvalueVector = std::vector<Rational>;

struct MultiplicityParam {
  Rational k;
  int n = 1;

  MultiplicityParam() = default;
  MultiplicityParam(int n_, Rational k_);

  Rational mu0() const { return k * (n - 1); }
  double k_double() const { return k.get_d(); }
  double mu0_double() const { return mu0().get_d(); }
};

enum class Order { less, equal, greater, incomparable };
std::string to_string(Order o);

int weight(const Composition& eta);
bool is_partition(const Composition& eta);
bool is_nonnegative(const Composition& eta);
std::string to_string(const Composition& eta);
Composition parse_composition(const std::string& text);

Partition eta_plus(const Composition& eta);

// Permutations
Permutation identity_perm(int n);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& a);
int perm_length(const Permutation& a);
std::vector<Permutation> all_permutations(int n);
/// (sigma . v)_{sigma(i)} = v_i.
Composition act(const Permutation& sigma, const Composition& v);
/// Shortest w with w . eta_plus = eta.
Permutation shortest_perm(const Composition& eta);
/// Bruhat order u <= v by the lifting property on adjacent transpositions.
bool bruhat_leq(const Permutation& u, const Permutation& v);
/// Tableau criterion, kept as an independent oracle.
bool bruhat_leq_tableau(const Permutation& u, const Permutation& v);

Order dominance_partition(const Partition& mu, const Partition& lambda);
/// Order of kappa relative to eta.
Order dominance_composition(const Composition& kappa, const Composition& eta);
inline bool dominated_strictly(const Composition& kappa, const Composition& eta) {
  return dominance_composition(kappa, eta) == Order::less;
}

EigenvalueVector eta_bar(const Composition& eta, const MultiplicityParam& p);
/// rho_j = -(k/2)(n+1-2j).
EigenvalueVector rho(const MultiplicityParam& p);

/// Leg length l(eta,i,j); 1-based cell.
int leg(const Composition& eta, int i, int j);
/// Coleg length l'(eta,i); independent of the column.
int coleg(const Composition& eta, int i);
std::pair<int, int> arm_leg(const Composition& eta, int i, int j);

/// [mu]_{eta_plus} as a polynomial in the formal parameter mu.
MuPoly pochhammer_sym(const Composition& eta, const MultiplicityParam& p);
Rational pochhammer_exact(const Rational& mu, const Composition& eta, const MultiplicityParam& p);

/// All eta in N_0^n with |eta| = m, graded reverse-lexicographic order.
std::vector<Composition> enumerate_compositions(int n, int m);
/// Partitions of m with at most n parts (padded to length n), dominance-decreasing lex order.
std::vector<Partition> enumerate_partitions(int n, int m);
/// Distinct rearrangements of lambda, in graded revlex order.
std::vector<Composition> orbit(const Partition& lambda);

}  // namespace jackdunkl
