#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackdunkl/mupoly.hpp"
#include "jackdunkl/rational.hpp"

namespace jackdunkl {

inline constexpr int kMaxVars = 8;

/// Signed exponent vector; entries past n are always zero.
struct Exponent {
  std::array<int16_t, kMaxVars> e{};

  int16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  int16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  int total(int n) const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += e[static_cast<std::size_t>(i)];
    return s;
  }
  static Exponent from(std::span<const int> v) {
    if (v.size() > kMaxVars) throw std::invalid_argument("too many variables");
    Exponent x;
    for (std::size_t i = 0; i < v.size(); ++i) x.e[i] = static_cast<int16_t>(v[i]);
    return x;
  }
  std::vector<int> to_vector(int n) const { return {e.begin(), e.begin() + n}; }
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline std::string coeff_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_str(const MuPoly& c) { return c.str(); }
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const MuPoly& c) { return c.degree() == 0 && c.coeff(0) == 1; }
inline bool coeff_is_neg_one(const Rational& c) { return c == -1; }
inline bool coeff_is_neg_one(const MuPoly& c) { return c.degree() == 0 && c.coeff(0) == -1; }
inline bool coeff_is_simple(const Rational&) { return true; }
inline bool coeff_is_simple(const MuPoly& c) {
  int nz = 0;
  for (const auto& q : c.coeffs()) nz += sgn(q) != 0;
  return nz <= 1;
}
}  // namespace detail

/// Sparse Laurent polynomial in n variables with exact coefficients of type C
/// (Rational or MuPoly). Zero coefficients are never stored.
template <class C>
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(int n) : n_(n) {
    if (n < 1 || n > kMaxVars) throw DimensionError("variable count must be in 1..8");
  }

  static LaurentPoly constant(int n, const C& c) {
    LaurentPoly p(n);
    p.add_term(Exponent{}, c);
    return p;
  }
  static LaurentPoly monomial(int n, const Exponent& a, const C& c = C(1)) {
    LaurentPoly p(n);
    p.add_term(a, c);
    return p;
  }
  static LaurentPoly monomial(int n, std::span<const int> a, const C& c = C(1)) {
    if (static_cast<int>(a.size()) != n) throw DimensionError("exponent length differs from n");
    return monomial(n, Exponent::from(a), c);
  }
  /// x_i, 1-based.
  static LaurentPoly variable(int n, int i) {
    Exponent a;
    a[i - 1] = 1;
    return monomial(n, a);
  }
  /// Delta(x)^power = (x_1 ... x_n)^power.
  static LaurentPoly delta(int n, int power = 1) {
    Exponent a;
    for (int i = 0; i < n; ++i) a[i] = static_cast<int16_t>(power);
    return monomial(n, a);
  }

  int n() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  C coeff(const Exponent& a) const {
    auto it = t_.find(a);
    return it == t_.end() ? C() : it->second;
  }

  void add_term(const Exponent& a, const C& c) {
    if (jackdunkl::is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (jackdunkl::is_zero(it->second)) t_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [a, c] : o.t_) add_term(a, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [a, c] : o.t_) add_term(a, -c);
    return *this;
  }
  LaurentPoly& operator*=(const C& s) {
    if (jackdunkl::is_zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto& kv : t_) kv.second *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const C& s) { return a *= s; }
  friend LaurentPoly operator*(const C& s, LaurentPoly a) { return a *= s; }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.n_);
    for (const auto& [ea, ca] : a.t_) {
      for (const auto& [eb, cb] : b.t_) {
        Exponent e;
        for (int i = 0; i < a.n_; ++i) e[i] = static_cast<int16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  /// sigma acting on functions, (sigma f)(x) = f(sigma^{-1} x). sigma is
  /// 0-based with sigma[i] the image of i; exponents move as a_i -> slot sigma(i).
  LaurentPoly permuted(std::span<const int> sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw DimensionError("permutation length differs from n");
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b;
      for (int i = 0; i < n_; ++i) b[sigma[static_cast<std::size_t>(i)]] = a[i];
      r.t_.emplace(b, c);
    }
    return r;
  }

  /// Transposition s_ij, 1-based.
  LaurentPoly swapped(int i, int j) const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b = a;
      std::swap(b[i - 1], b[j - 1]);
      r.t_.emplace(b, c);
    }
    return r;
  }

  /// (p - s_ij p)/(x_i - x_j), exact. 1-based indices.
  LaurentPoly divided_difference(int i, int j) const {
    if (i == j) throw std::invalid_argument("divided_difference needs i != j");
    const int ii = i - 1, jj = j - 1;
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      const int u = a[ii], v = a[jj];
      if (u == v) continue;
      const int lo = std::min(u, v), d = std::abs(u - v);
      const C coef = u > v ? c : C(-c);
      for (int t = 0; t < d; ++t) {
        Exponent b = a;
        b[ii] = static_cast<int16_t>(lo + t);
        b[jj] = static_cast<int16_t>(lo + d - 1 - t);
        r.add_term(b, coef);
      }
    }
    return r;
  }

  /// d/dx_i, 1-based.
  LaurentPoly partial(int i) const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      const int m = a[i - 1];
      if (m == 0) continue;
      Exponent b = a;
      b[i - 1] = static_cast<int16_t>(m - 1);
      r.add_term(b, c * C(Rational(m)));
    }
    return r;
  }

  /// Multiplies by x_i^power.
  LaurentPoly times_var(int i, int power = 1) const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b = a;
      b[i - 1] = static_cast<int16_t>(b[i - 1] + power);
      r.t_.emplace(b, c);
    }
    return r;
  }

  /// Multiplies by Delta^p.
  LaurentPoly shifted(int p) const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b = a;
      for (int i = 0; i < n_; ++i) b[i] = static_cast<int16_t>(b[i] + p);
      r.t_.emplace(b, c);
    }
    return r;
  }

  /// x -> 1/x.
  LaurentPoly reciprocal() const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b;
      for (int i = 0; i < n_; ++i) b[i] = static_cast<int16_t>(-a[i]);
      r.t_.emplace(b, c);
    }
    return r;
  }

  /// (x_1..x_n) -> (x_n..x_1).
  LaurentPoly reversed() const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_) {
      Exponent b;
      for (int i = 0; i < n_; ++i) b[i] = a[n_ - 1 - i];
      r.t_.emplace(b, c);
    }
    return r;
  }

  bool has_negative_exponent() const {
    for (const auto& [a, c] : t_)
      for (int i = 0; i < n_; ++i)
        if (a[i] < 0) return true;
    return false;
  }

  bool is_homogeneous() const {
    if (t_.empty()) return true;
    const int d = t_.begin()->first.total(n_);
    return std::all_of(t_.begin(), t_.end(), [&](const auto& kv) { return kv.first.total(n_) == d; });
  }

  /// Largest |a| over terms; -1 for the zero polynomial... only meaningful
  /// when every exponent is nonnegative.
  int max_total_degree() const {
    int d = -1;
    for (const auto& [a, c] : t_) d = std::max(d, a.total(n_));
    return d;
  }

  /// Homogeneous component of total degree d.
  LaurentPoly component(int d) const {
    LaurentPoly r(n_);
    for (const auto& [a, c] : t_)
      if (a.total(n_) == d) r.t_.emplace(a, c);
    return r;
  }

  /// Exact evaluation at a rational point; coefficients stay in C.
  C eval_exact(std::span<const Rational> x) const {
    check_point(x.size());
    C acc{};
    for (const auto& [a, c] : t_) {
      Rational m(1);
      for (int i = 0; i < n_; ++i) m *= ipow(x[static_cast<std::size_t>(i)], a[i]);
      acc += c * m;
    }
    return acc;
  }

  /// Floating evaluation (double, long double or complex<double>); only for
  /// Rational coefficients.
  template <class T>
  T eval(std::span<const T> x) const {
    check_point(x.size());
    T acc{};
    for (const auto& [a, c] : t_) {
      T m = rational_as<T>(c);
      for (int i = 0; i < n_; ++i) m *= ipow(x[static_cast<std::size_t>(i)], a[i]);
      acc += m;
    }
    return acc;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Exponent, C>> v(t_.begin(), t_.end());
    const int n = n_;
    std::stable_sort(v.begin(), v.end(), [n](const auto& l, const auto& r) {
      const int dl = l.first.total(n), dr = r.first.total(n);
      if (dl != dr) return dl > dr;
      return l.first > r.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : v) {
      std::string mono = monomial_str(a);
      std::string cs = detail::coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-' && detail::coeff_is_simple(c);
      if (neg) cs.erase(0, 1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (mono.empty()) {
        os << (detail::coeff_is_simple(c) ? cs : "(" + cs + ")");
      } else if (detail::coeff_is_one(c) || detail::coeff_is_neg_one(c)) {
        os << mono;
      } else {
        os << (detail::coeff_is_simple(c) ? cs : "(" + cs + ")") << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  void check(const LaurentPoly& o) const {
    if (n_ != o.n_) throw DimensionError("variable count mismatch");
  }
  void check_point(std::size_t m) const {
    if (static_cast<int>(m) != n_) throw DimensionError("point dimension differs from n");
  }
  template <class T>
  static T ipow(const T& x, int e) {
    if (e < 0) {
      if (x == T(0)) throw std::domain_error("zero coordinate raised to a negative power");
      return T(1) / ipow(x, -e);
    }
    T r(1), b = x;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  std::string monomial_str(const Exponent& a) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (a[i] != 1) s += "^" + std::to_string(a[i]);
    }
    return s;
  }

  int n_ = 1;
  Terms t_;
};

using QPoly = LaurentPoly<Rational>;
using MuLaurent = LaurentPoly<MuPoly>;

template <class C>
inline bool is_zero(const LaurentPoly<C>& p) {
  return p.is_zero();
}

/// Lifts rational coefficients into constant mu-polynomials.
inline MuLaurent to_mu(const QPoly& p) {
  MuLaurent r(p.n());
  for (const auto& [a, c] : p.terms()) r.add_term(a, MuPoly(c));
  return r;
}

/// Specializes mu to a rational value.
inline QPoly at_mu(const MuLaurent& p, const Rational& mu) {
  QPoly r(p.n());
  for (const auto& [a, c] : p.terms()) r.add_term(a, c.eval(mu));
  return r;
}

}  // namespace jackdunkl
