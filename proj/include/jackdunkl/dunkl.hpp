#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "jackdunkl/combinatorics.hpp"
#include "jackdunkl/laurent.hpp"

namespace jackdunkl {

/// T_i p = d_i p + k sum_{j != i} (p - s_ij p)/(x_i - x_j). 1-based i.
template <class C>
LaurentPoly<C> dunkl_T(int i, const LaurentPoly<C>& p, const Rational& k) {
  if (i < 1 || i > p.n()) throw std::out_of_range("Dunkl operator index out of range");
  LaurentPoly<C> r = p.partial(i);
  if (sgn(k) == 0) return r;
  LaurentPoly<C> refl(p.n());
  for (int j = 1; j <= p.n(); ++j)
    if (j != i) refl += p.divided_difference(i, j);
  r += refl * C(k);
  return r;
}

/// D_j = x_j T_j + k(1-n) + k sum_{i>j} s_ij.
template <class C>
LaurentPoly<C> cherednik_D(int j, const LaurentPoly<C>& p, const Rational& k) {
  const int n = p.n();
  LaurentPoly<C> r = dunkl_T(j, p, k).times_var(j);
  r += p * C(k * (1 - n));
  for (int i = j + 1; i <= n; ++i) r += p.swapped(i, j) * C(k);
  return r;
}

/// Phi p(z) = z_n p(z_n, z_1, ..., z_{n-1}).
template <class C>
LaurentPoly<C> raising_phi(const LaurentPoly<C>& p) {
  const int n = p.n();
  LaurentPoly<C> r(n);
  for (const auto& [a, c] : p.terms()) {
    Exponent b;
    for (int i = 0; i + 1 < n; ++i) b[i] = a[i + 1];
    b[n - 1] = static_cast<int16_t>(a[0] + 1);
    r.add_term(b, c);
  }
  return r;
}

/// Phi eta = (eta_2, ..., eta_n, eta_1 + 1).
inline Composition raising_phi_index(const Composition& eta) {
  Composition r(eta.begin() + 1, eta.end());
  r.push_back(eta.front() + 1);
  return r;
}

/// q(T) p with the letters of q standing for T_1..T_n.
template <class C>
LaurentPoly<C> apply_poly_of_T(const QPoly& q, const LaurentPoly<C>& p, const Rational& k) {
  if (q.n() != p.n()) throw DimensionError("variable count mismatch");
  if (q.has_negative_exponent()) throw std::invalid_argument("operator polynomial has a negative exponent");
  const int n = q.n();
  std::map<Exponent, LaurentPoly<C>> memo;
  memo.emplace(Exponent{}, p);
  std::function<const LaurentPoly<C>&(const Exponent&)> power =
      [&](const Exponent& a) -> const LaurentPoly<C>& {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    int last = n - 1;
    while (a[last] == 0) --last;
    Exponent b = a;
    b[last] = static_cast<int16_t>(b[last] - 1);
    LaurentPoly<C> v = dunkl_T(last + 1, power(b), k);
    return memo.emplace(a, std::move(v)).first->second;
  };
  LaurentPoly<C> acc(p.n());
  for (const auto& [a, c] : q.terms()) acc += power(a) * C(c);
  return acc;
}

/// f(x) Delta(x)^{-mu}, with mu a formal parameter carried by the coefficients.
struct DeltaPowerSection {
  MuLaurent f;
  friend bool operator==(const DeltaPowerSection&, const DeltaPowerSection&) = default;
};

/// T_i (f Delta^{-mu}) = (T_i f - mu f / x_i) Delta^{-mu}.
inline DeltaPowerSection dunkl_T_on_section(int i, const DeltaPowerSection& s, const Rational& k) {
  MuLaurent r = dunkl_T(i, s.f, k);
  r -= s.f.times_var(i, -1) * MuPoly::mu();
  return {r};
}

/// q(T) applied to a section.
inline DeltaPowerSection apply_poly_of_T(const QPoly& q, const DeltaPowerSection& s, const Rational& k) {
  if (q.has_negative_exponent()) throw std::invalid_argument("operator polynomial has a negative exponent");
  const int n = q.n();
  std::map<Exponent, MuLaurent> memo;
  memo.emplace(Exponent{}, s.f);
  std::function<const MuLaurent&(const Exponent&)> power = [&](const Exponent& a) -> const MuLaurent& {
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    int last = n - 1;
    while (a[last] == 0) --last;
    Exponent b = a;
    b[last] = static_cast<int16_t>(b[last] - 1);
    MuLaurent v = dunkl_T_on_section(last + 1, {power(b)}, k).f;
    return memo.emplace(a, std::move(v)).first->second;
  };
  MuLaurent acc(n);
  for (const auto& [a, c] : q.terms()) acc += power(a) * MuPoly(c);
  return {acc};
}

/// [p, q] = (p(T) q)(0).
inline Rational dunkl_pairing(const QPoly& p, const QPoly& q, const Rational& k) {
  if (p.has_negative_exponent() || q.has_negative_exponent())
    throw std::invalid_argument("Dunkl pairing needs polynomial arguments");
  // Only equal-degree components pair nontrivially.
  Rational total(0);
  std::map<int, bool> seen;
  for (const auto& [a, c] : p.terms()) {
    const int d = a.total(p.n());
    if (seen[d]) continue;
    seen[d] = true;
    QPoly pd = p.component(d), qd = q.component(d);
    if (qd.is_zero()) continue;
    total += apply_poly_of_T(pd, qd, k).coeff(Exponent{});
  }
  return total;
}

}  // namespace jackdunkl
