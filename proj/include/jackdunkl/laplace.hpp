#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jackdunkl/combinatorics.hpp"
#include "jackdunkl/hyperseries.hpp"
#include "jackdunkl/jack.hpp"
#include "jackdunkl/kernel_ode.hpp"
#include "jackdunkl/report.hpp"

namespace jackdunkl {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QuadratureScheme { gauss_jacobi, tanh_sinh };

struct QuadratureSpec {
  int n = 1;
  double k = 0.0;
  double cutoff = 0.0;            // radial cutoff R in ||x||_1; 0 selects it from the exponential bound
  int pointsPerChamberAxis = 8;   // initial angular order, doubled until converged
  int maxPointsPerAxis = 64;
  double relTol = 1e-7;
  QuadratureScheme scheme = QuadratureScheme::gauss_jacobi;
  RayTolerances ode{};
  bool require_convergence = true;  // throw QuadratureError at the resolution cap

  static QuadratureSpec make(const MultiplicityParam& p, double relTol = 1e-7);
};

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double change = 0.0;  // |last refinement difference|, relative
  int points = 0;       // final angular order
  double cutoff = 0.0;
  bool converged = false;
};

/// Integrand h(x) on R_+^n, optionally a numeric polynomial (fast radial path).
struct Integrand {
  std::function<cplx(const std::vector<double>&)> f;
  std::optional<NumericPoly> poly;
  double growth = 0.0;  // |h(x)| <= C exp(growth ||x||_1)
  int degree_hint = 0;  // radial power growth used for the cutoff

  static Integrand constant(cplx c = 1.0);
  static Integrand polynomial(NumericPoly p, double growth = 0.0);
  static Integrand function(std::function<cplx(const std::vector<double>&)> f, double growth = 0.0);
};

double weight_omega(const std::vector<double>& x, double k);

/// int_{R_+^n} prod_l K_l(x) h(x) Delta(x)^a omega(x) dx with each K_l a Dunkl kernel E(lambda_l, x) or J(lambda_l, x).
QuadratureResult laplace_integrate(const std::vector<RayKernel>& kernels, const Integrand& h, cplx a,
                                   const QuadratureSpec& spec);

/// Dunkl-Laplace transform int f(x) E(-z, x) omega(x) dx.
cplx dunkl_laplace(const Integrand& f, const std::vector<cplx>& z, const QuadratureSpec& spec,
                   QuadratureResult* info = nullptr);

/// int_{[0,1]^n} h(x) Delta(x)^a Delta(1-x)^b omega(x) dx.
QuadratureResult cube_integrate(const Integrand& h, cplx a, cplx b, const QuadratureSpec& spec);

/// Delta(z)^s with the principal branch, Re z > 0.
cplx delta_power(const std::vector<cplx>& z, cplx s);

/// Rational Cherednik kernel at the lattice point lambda = eta_bar + (k/2)(n-1) 1, eta in Z^n.
struct ShiftedSpectral {
  Composition eta;
  std::vector<double> lambda(const MultiplicityParam& p) const;
};
cplx cherednik_rat(const ShiftedSpectral& s, const std::vector<cplx>& z, const JackTable& table);

// Verifiers. Each returns a report with pass = relError <= tolerance.
VerificationReport verify_master(const Composition& eta, cplx mu, const std::vector<cplx>& z,
                                 const QuadratureSpec& spec, const JackTable& table, double tol);
VerificationReport verify_master_symmetric(const Partition& lambda, cplx mu, const std::vector<cplx>& z,
                                           const QuadratureSpec& spec, const JackTable& table, double tol);
VerificationReport verify_kadell(const Partition& lambda, cplx mu, cplx nu, const QuadratureSpec& spec,
                                 const JackTable& table, double tol);
VerificationReport verify_euler(const SeriesSpec& series, cplx mu1, cplx nu1, const std::vector<cplx>& w,
                                const QuadratureSpec& spec, double tol);
VerificationReport verify_hyp_laplace(SeriesKind kind, const SeriesSpec& series, cplx mu1,
                                      const std::vector<cplx>& w, const std::vector<cplx>& z,
                                      const QuadratureSpec& spec, double tol);
VerificationReport verify_1K0(SeriesKind kind, cplx mu, const std::vector<cplx>& z, const std::vector<cplx>& w,
                              const MultiplicityParam& p, const QuadratureSpec& spec, double tol);
VerificationReport verify_macdonald_cherednik(const ShiftedSpectral& s, cplx mu, const std::vector<cplx>& z,
                                              const QuadratureSpec& spec, const JackTable& table, double tol);

struct PostWidderResult {
  cplx value;
  QuadratureResult quad;
};
/// (Delta(nu/xi)^{nu+mu0+1} / Gamma_n(nu+mu0+1)) int f(x) E(-nu/xi, x) Delta(x)^nu omega(x) dx.
PostWidderResult post_widder(const Integrand& f, const std::vector<double>& xi, int nu, const MultiplicityParam& p,
                             const QuadratureSpec& spec);

/// Worker threads used by the quadrature loops (results do not depend on it).
void set_thread_count(int threads);
int thread_count();

}  // namespace jackdunkl
