#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "jackdunkl/combinatorics.hpp"
#include "jackdunkl/gamma.hpp"
#include "jackdunkl/laurent.hpp"

namespace jackdunkl {

class SeriesDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SeriesConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SeriesKind { K, F };

struct SeriesSpec {
  std::vector<cplx> upper;  // mu_1..mu_p
  std::vector<cplx> lower;  // nu_1..nu_q
  MultiplicityParam param;
  int truncation = 0;  // fixed degree D when > 0, adaptive otherwise
  double tolerance = 1e-12;
  int max_degree = 0;  // 0 selects default_max_degree(n)

  int p() const { return static_cast<int>(upper.size()); }
  int q() const { return static_cast<int>(lower.size()); }
};

struct SeriesValue {
  cplx value{0.0, 0.0};
  double tailBound = 0.0;
  long termsUsed = 0;
  int degree = 0;
  bool converged = false;
};

int default_max_degree(int n);

/// Throws SeriesDomainError if some nu_i lies in {0, k, ..., k(n-1)} - N_0.
void validate_series_spec(const SeriesSpec& spec);

/// Upper bound for |sum_{|eta| > D} term| given a = ||z||_inf ||w||_inf.
/// Returns +inf when no finite bound is available (p = q+1 and n a >= 1, or p > q+1).
double series_tail_bound(const SeriesSpec& spec, int D, double a);

SeriesValue eval_pKq(const SeriesSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w);
SeriesValue eval_pFq(const SeriesSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w);
SeriesValue eval_series(SeriesKind kind, const SeriesSpec& spec, const std::vector<cplx>& z,
                        const std::vector<cplx>& w);

/// E(z, w) = 0K0(z, w) and J(z, w) = 0F0(z, w).
SeriesValue dunkl_kernel(const std::vector<cplx>& z, const std::vector<cplx>& w, const MultiplicityParam& p,
                         double tol = 1e-12);
SeriesValue bessel_J(const std::vector<cplx>& z, const std::vector<cplx>& w, const MultiplicityParam& p,
                     double tol = 1e-12);

/// Sparse complex polynomial in x, used for integrands.
struct NumericPoly {
  int n = 0;
  std::vector<std::pair<Exponent, cplx>> terms;

  cplx eval(const double* x) const;
  int degree() const;
};

NumericPoly to_numeric(const QPoly& p);

/// x -> sum_{|eta| <= D} coefficient(eta) L_eta(w) L_eta(x) / (|eta|! L_eta(1)), collected by monomial.
NumericPoly series_in_x(SeriesKind kind, const SeriesSpec& spec, const std::vector<cplx>& w, int D);

/// Smallest D such that tail(D; ||w|| r) e^{-decay r} <= eps for all r in [0, R].
int series_degree_for_region(const SeriesSpec& spec, double w_norm, double R, double decay, double eps);

}  // namespace jackdunkl
