#pragma once

#include <vector>

namespace jackdunkl {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// N-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta (Golub-Welsch).
GaussRule gauss_jacobi(int N, double alpha, double beta);
/// N-point rule on [0, 1] for the weight t^a (1-t)^b.
GaussRule gauss_jacobi01(int N, double a, double b);

/// Rule for int over the standard d-simplex of prod_i beta_i^{e_i} g(beta), with
/// beta_0 = 1 - beta_1 - ... - beta_d and Lebesgue measure in beta_1..beta_d.
/// Built from a collapsed (stick-breaking) product of Gauss-Jacobi rules.
struct SimplexRule {
  int d = 0;
  std::vector<std::vector<double>> beta;  // each of length d + 1
  std::vector<double> w;
};

SimplexRule dirichlet_rule(const std::vector<double>& exponents, int N);

}  // namespace jackdunkl
