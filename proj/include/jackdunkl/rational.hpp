#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace jackdunkl {

using Rational = mpq_class;

/// Parses "p/q" or an integer literal. Decimal notation is rejected so that
/// every symbolic layer stays exact.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational factorial(int m);

/// Casts an exact coefficient into the evaluation domain T.
template <class T>
T rational_as(const Rational& q);

template <>
inline double rational_as<double>(const Rational& q) {
  return q.get_d();
}
template <>
inline long double rational_as<long double>(const Rational& q) {
  // mpq has no long double accessor; numerator/denominator separately keeps
  // the extra bits for moderate heights.
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}
template <>
inline std::complex<double> rational_as<std::complex<double>>(const Rational& q) {
  return {q.get_d(), 0.0};
}
template <>
inline Rational rational_as<Rational>(const Rational& q) {
  return q;
}

}  // namespace jackdunkl
