#include "jackdunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace jackdunkl {

GaussRule gauss_jacobi(int N, double alpha, double beta) {
  if (N < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (alpha <= -1.0 || beta <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(N), sub(std::max(N - 1, 1));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int j = 1; j < N; ++j) {
    const double t = 2.0 * j + ab;
    diag(j) = (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }
  for (int j = 1; j < N; ++j) {
    double b2;
    if (j == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double t = 2.0 * j + ab;
      b2 = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    sub(j - 1) = std::sqrt(b2);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussRule r;
  if (N == 1) {
    r.x = {diag(0)};
    r.w = {mu0};
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(N - 1), Eigen::ComputeEigenvectors);
  r.x.resize(static_cast<std::size_t>(N));
  r.w.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    r.x[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    r.w[static_cast<std::size_t>(i)] = mu0 * v * v;
  }
  return r;
}

GaussRule gauss_jacobi01(int N, double a, double b) {
  GaussRule g = gauss_jacobi(N, b, a);
  const double scale = std::exp(-(a + b + 1.0) * std::log(2.0));
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    g.x[i] = 0.5 * (1.0 + g.x[i]);
    g.w[i] *= scale;
  }
  return g;
}

SimplexRule dirichlet_rule(const std::vector<double>& e, int N) {
  SimplexRule rule;
  const int d = static_cast<int>(e.size()) - 1;
  rule.d = d;
  if (d < 0) throw std::invalid_argument("dirichlet_rule: empty exponent list");
  if (d == 0) {
    rule.beta = {{1.0}};
    rule.w = {1.0};
    return rule;
  }
  // t_j in [0,1] carries t^{sum_{i>=j} e_i + d - j} (1-t)^{e_{j-1}}
  std::vector<GaussRule> g;
  for (int j = 1; j <= d; ++j) {
    double tail = d - j;
    for (int i = j; i <= d; ++i) tail += e[static_cast<std::size_t>(i)];
    g.push_back(gauss_jacobi01(N, tail, e[static_cast<std::size_t>(j - 1)]));
  }
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  for (;;) {
    std::vector<double> beta(static_cast<std::size_t>(d) + 1);
    double s = 1.0, w = 1.0;
    for (int j = 1; j <= d; ++j) {
      const double t = g[static_cast<std::size_t>(j - 1)].x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j - 1)])];
      w *= g[static_cast<std::size_t>(j - 1)].w[static_cast<std::size_t>(idx[static_cast<std::size_t>(j - 1)])];
      beta[static_cast<std::size_t>(j - 1)] = s * (1.0 - t);
      s *= t;
    }
    beta[static_cast<std::size_t>(d)] = s;
    rule.beta.push_back(std::move(beta));
    rule.w.push_back(w);
    int pos = d - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == N) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return rule;
}

}  // namespace jackdunkl
