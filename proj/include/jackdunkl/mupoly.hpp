#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jackdunkl/rational.hpp"

namespace jackdunkl {

/// Dense univariate polynomial in the formal parameter "mu" with exact
/// rational coefficients. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and degree -1.
class MuPoly {
 public:
  MuPoly() = default;
  MuPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MuPoly(long c) : MuPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MuPoly(int c) : MuPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  explicit MuPoly(std::vector<Rational> coeffs);

  static MuPoly mu();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  MuPoly& operator+=(const MuPoly& o);
  MuPoly& operator-=(const MuPoly& o);
  MuPoly& operator*=(const MuPoly& o);
  MuPoly& operator*=(const Rational& s);

  friend MuPoly operator+(MuPoly a, const MuPoly& b) { return a += b; }
  friend MuPoly operator-(MuPoly a, const MuPoly& b) { return a -= b; }
  friend MuPoly operator*(MuPoly a, const MuPoly& b) { return a *= b; }
  friend MuPoly operator*(MuPoly a, const Rational& s) { return a *= s; }
  friend MuPoly operator*(const Rational& s, MuPoly a) { return a *= s; }
  MuPoly operator-() const;

  friend bool operator==(const MuPoly& a, const MuPoly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& mu) const;
  std::complex<double> eval(std::complex<double> mu) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

inline bool is_zero(const MuPoly& p) { return p.is_zero(); }

}  // namespace jackdunkl
