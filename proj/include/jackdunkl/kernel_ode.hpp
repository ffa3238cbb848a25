#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "jackdunkl/combinatorics.hpp"

namespace jackdunkl {

using cplx = std::complex<double>;

/// One Dunkl-kernel factor E(lambda, x), or its symmetrization J(lambda, x) when bessel is set.
struct RayKernel {
  std::vector<cplx> lambda;
  bool bessel = false;
};

struct RayTolerances {
  double abs = 1e-13;
  double rel = 1e-11;
  int start_nodes = 24;  // Gauss-Jacobi nodes on the initial series segment
};

/// Evaluates Dunkl kernels along rays r -> r sigma(theta) for all sigma in S_n at once.
///
/// F_sigma(r) = E(lambda, r sigma theta) satisfies
///   r F' = r A F - k L F,  A = diag <lambda, sigma theta>,  (L F)_sigma = sum_{i<j} (F_sigma - F_{s_ij sigma}),
/// with F(0) = 1. A power series starts the solution and an adaptive Dormand-Prince integrator continues it.
class RaySolver {
 public:
  RaySolver(int n, double k, std::vector<RayKernel> kernels, RayTolerances tol = {});

  int n() const { return n_; }
  const std::vector<Permutation>& perms() const { return perms_; }

  /// Integrand callback: (sigma index, r, x = r sigma theta) -> h(x).
  using Integrand = std::function<cplx(int, double, const std::vector<double>&)>;

  /// int_0^R r^p sum_sigma prod_l K_l(r sigma theta) h(r sigma theta) dr.
  cplx integrate(const std::vector<double>& theta, double p, double R, const Integrand& h) const;

  /// Kernel values E(lambda_l, r sigma theta) for each sigma, kernel 0 only, at the given radii.
  std::vector<std::vector<cplx>> along_ray(const std::vector<double>& theta, const std::vector<double>& radii) const;

 private:
  struct RayData;
  RayData prepare(const std::vector<double>& theta) const;

  int n_;
  double k_;
  std::vector<RayKernel> kernels_;
  RayTolerances tol_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<int>> neighbours_;  // s_ij o sigma for each sigma and each pair i<j
  std::vector<std::vector<double>> eigvec_;   // eigenvectors of L (columns)
  std::vector<double> eigval_;
};

/// E(lambda, x) (or J) for a single point x in R^n via the ray solver.
cplx dunkl_kernel_ode(const std::vector<cplx>& lambda, const std::vector<double>& x, const MultiplicityParam& p,
                      bool bessel = false);

}  // namespace jackdunkl
