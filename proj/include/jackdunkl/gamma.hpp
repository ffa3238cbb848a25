#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackdunkl/combinatorics.hpp"

namespace jackdunkl {

using cplx = std::complex<double>;

/// Argument of Gamma_n hits (or comes within 1e-6 of) a pole; j is the 1-based
/// factor index, 0 for the scalar gamma function.
class PoleError : public std::domain_error {
 public:
  PoleError(int j, const std::string& what) : std::domain_error(what), j_(j) {}
  int index() const { return j_; }

 private:
  int j_;
};

inline constexpr double kPoleDistance = 1e-6;

/// Complex log-gamma (Lanczos with reflection); branch of the imaginary part
/// is not tracked, so only exp() of sums of these is meaningful.
cplx lgamma_c(cplx z);
cplx gamma_c(cplx z);
double log_abs_gamma(cplx z);

/// d_n(k) = prod_{j=1}^n Gamma(1 + jk)/Gamma(1 + k).
double gamma_n_constant(int n, double k);

/// Gamma_n(lambda) = d_n(k) prod_j Gamma(lambda_j - k(j-1)).
cplx gamma_n(const std::vector<cplx>& lambda, const MultiplicityParam& p);
cplx gamma_n(cplx s, const MultiplicityParam& p);
/// log Gamma_n (principal-ish branch, for large arguments).
cplx log_gamma_n(const std::vector<cplx>& lambda, const MultiplicityParam& p);

/// [mu]_lambda = prod_j (mu - k(j-1))_{lambda_j}, numerically.
cplx pochhammer(cplx mu, const Partition& lambda, const MultiplicityParam& p);

}  // namespace jackdunkl
