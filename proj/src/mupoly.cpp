#include "jackdunkl/mupoly.hpp"

#include <algorithm>
#include <sstream>

namespace jackdunkl {

MuPoly::MuPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

MuPoly::MuPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

MuPoly MuPoly::mu() { return MuPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

Rational MuPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

void MuPoly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

MuPoly& MuPoly::operator+=(const MuPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

MuPoly& MuPoly::operator-=(const MuPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

MuPoly& MuPoly::operator*=(const MuPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

MuPoly& MuPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

MuPoly MuPoly::operator-() const {
  MuPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Rational MuPoly::eval(const Rational& mu) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * mu + *it;
  return acc;
}

std::complex<double> MuPoly::eval(std::complex<double> mu) const {
  std::complex<double> acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * mu + it->get_d();
  return acc;
}

std::string MuPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "mu";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace jackdunkl
