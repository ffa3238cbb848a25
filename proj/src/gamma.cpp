#include "jackdunkl/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace jackdunkl {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_lgamma(cplx z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double pole_distance(cplx z) {
  if (z.real() > 0.5) return 1.0;
  const double r = std::round(z.real());
  return std::abs(z - cplx(r, 0.0));
}

void check_pole(cplx z, int j) {
  if (pole_distance(z) < kPoleDistance) {
    throw PoleError(j, "gamma argument at a pole: " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) +
                           "i (factor " + std::to_string(j) + ")");
  }
}

}  // namespace

cplx lgamma_c(cplx z) {
  check_pole(z, 0);
  if (z.imag() == 0.0) {
    const double v = std::lgamma(z.real());
    const double sgn = std::tgamma(z.real()) < 0 ? 1.0 : 0.0;
    return {v, sgn * std::numbers::pi};
  }
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lanczos_lgamma(1.0 - z);
  }
  return lanczos_lgamma(z);
}

cplx gamma_c(cplx z) {
  check_pole(z, 0);
  if (z.imag() == 0.0) return std::tgamma(z.real());
  if (z.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * z) * std::exp(lanczos_lgamma(1.0 - z)));
  return std::exp(lanczos_lgamma(z));
}

double log_abs_gamma(cplx z) { return lgamma_c(z).real(); }

double gamma_n_constant(int n, double k) {
  double lg = 0.0;
  for (int j = 1; j <= n; ++j) lg += std::lgamma(1.0 + j * k) - std::lgamma(1.0 + k);
  return std::exp(lg);
}

cplx gamma_n(const std::vector<cplx>& lambda, const MultiplicityParam& p) {
  const double k = p.k_double();
  cplx r = gamma_n_constant(p.n, k);
  for (int j = 1; j <= p.n; ++j) {
    const cplx a = lambda[static_cast<std::size_t>(j - 1)] - k * (j - 1);
    try {
      check_pole(a, j);
    } catch (const PoleError&) {
      throw PoleError(j, "Gamma_n pole: lambda_" + std::to_string(j) + " - k(j-1) is a nonpositive integer");
    }
    r *= gamma_c(a);
  }
  return r;
}

cplx gamma_n(cplx s, const MultiplicityParam& p) {
  return gamma_n(std::vector<cplx>(static_cast<std::size_t>(p.n), s), p);
}

cplx log_gamma_n(const std::vector<cplx>& lambda, const MultiplicityParam& p) {
  const double k = p.k_double();
  cplx r = std::log(gamma_n_constant(p.n, k));
  for (int j = 1; j <= p.n; ++j) {
    const cplx a = lambda[static_cast<std::size_t>(j - 1)] - k * (j - 1);
    if (pole_distance(a) < kPoleDistance)
      throw PoleError(j, "Gamma_n pole: lambda_" + std::to_string(j) + " - k(j-1) is a nonpositive integer");
    r += lgamma_c(a);
  }
  return r;
}

cplx pochhammer(cplx mu, const Partition& lambda, const MultiplicityParam& p) {
  const double k = p.k_double();
  cplx r = 1.0;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (int t = 0; t < lambda[j]; ++t) r *= mu - k * static_cast<double>(j) + static_cast<double>(t);
  return r;
}

}  // namespace jackdunkl
