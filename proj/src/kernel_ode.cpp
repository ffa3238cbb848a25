#include "jackdunkl/kernel_ode.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <map>
#include <stdexcept>

#include "jackdunkl/quadrature.hpp"

namespace jackdunkl {

namespace odeint = boost::numeric::odeint;
using State = std::vector<cplx>;

struct RaySolver::RayData {
  std::vector<std::vector<double>> images;  // sigma theta
  std::vector<std::vector<cplx>> A;          // per kernel, per sigma
  std::vector<double> shift;                 // per kernel, max Re A
  std::vector<std::vector<std::vector<cplx>>> coeffs;  // per kernel, series coefficients c_m
  double r0 = 0.0;
};

RaySolver::RaySolver(int n, double k, std::vector<RayKernel> kernels, RayTolerances tol)
    : n_(n), k_(k), kernels_(std::move(kernels)), tol_(tol), perms_(all_permutations(n)) {
  if (kernels_.empty()) throw std::invalid_argument("RaySolver: need at least one kernel");
  for (const auto& kr : kernels_)
    if (static_cast<int>(kr.lambda.size()) != n) throw std::invalid_argument("RaySolver: kernel dimension mismatch");
  const int N = static_cast<int>(perms_.size());
  std::map<Permutation, int> index;
  for (int s = 0; s < N; ++s) index[perms_[static_cast<std::size_t>(s)]] = s;
  neighbours_.resize(static_cast<std::size_t>(N));
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(N, N);
  for (int s = 0; s < N; ++s)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Permutation t = identity_perm(n);
        std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
        const int nb = index.at(compose(t, perms_[static_cast<std::size_t>(s)]));
        neighbours_[static_cast<std::size_t>(s)].push_back(nb);
        L(s, s) += 1.0;
        L(s, nb) -= 1.0;
      }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  eigval_.resize(static_cast<std::size_t>(N));
  eigvec_.assign(static_cast<std::size_t>(N), std::vector<double>(static_cast<std::size_t>(N)));
  for (int c = 0; c < N; ++c) {
    eigval_[static_cast<std::size_t>(c)] = std::max(0.0, es.eigenvalues()(c));
    for (int r = 0; r < N; ++r) eigvec_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = es.eigenvectors()(r, c);
  }
}

RaySolver::RayData RaySolver::prepare(const std::vector<double>& theta) const {
  RayData d;
  const std::size_t N = perms_.size();
  for (const auto& s : perms_) {
    std::vector<double> img(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) img[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = theta[static_cast<std::size_t>(i)];
    d.images.push_back(std::move(img));
  }
  double amax = 0.0;
  for (const auto& kr : kernels_) {
    std::vector<cplx> A(N);
    double sh = -1e300;
    for (std::size_t s = 0; s < N; ++s) {
      cplx a = 0.0;
      for (int i = 0; i < n_; ++i) a += kr.lambda[static_cast<std::size_t>(i)] * d.images[s][static_cast<std::size_t>(i)];
      A[s] = a;
      sh = std::max(sh, a.real());
      amax = std::max(amax, std::abs(a));
    }
    d.A.push_back(std::move(A));
    d.shift.push_back(sh);
  }
  d.r0 = amax > 0 ? 0.5 / amax : 1.0;
  for (const auto& A : d.A) {
    std::vector<std::vector<cplx>> c{std::vector<cplx>(N, 1.0)};
    double rp = 1.0;
    for (int m = 1; m < 400; ++m) {
      std::vector<cplx> rhs(N), proj(N, 0.0), next(N, 0.0);
      for (std::size_t s = 0; s < N; ++s) rhs[s] = A[s] * c.back()[s];
      for (std::size_t e = 0; e < N; ++e) {
        for (std::size_t s = 0; s < N; ++s) proj[e] += eigvec_[s][e] * rhs[s];
        proj[e] /= (m + k_ * eigval_[e]);
      }
      double mx = 0.0;
      for (std::size_t s = 0; s < N; ++s) {
        for (std::size_t e = 0; e < N; ++e) next[s] += eigvec_[s][e] * proj[e];
        mx = std::max(mx, std::abs(next[s]));
      }
      c.push_back(std::move(next));
      rp *= d.r0;
      if (mx * rp < 1e-18) break;
    }
    d.coeffs.push_back(std::move(c));
  }
  return d;
}

namespace {

std::vector<cplx> series_at(const std::vector<std::vector<cplx>>& c, double r) {
  std::vector<cplx> out(c[0].size(), 0.0);
  for (std::size_t m = c.size(); m-- > 0;)
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = out[s] * r + c[m][s];
  return out;
}

cplx mean(const cplx* v, std::size_t N) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += v[i];
  return s / static_cast<double>(N);
}

}  // namespace

cplx RaySolver::integrate(const std::vector<double>& theta, double p, double R, const Integrand& h) const {
  const RayData d = prepare(theta);
  const std::size_t N = perms_.size(), K = kernels_.size();
  const double r0 = std::min(d.r0, R);
  std::vector<double> x(static_cast<std::size_t>(n_));

  auto combine = [&](const cplx* vals, std::size_t sigma, std::size_t l) {
    return kernels_[l].bessel ? mean(vals, N) : vals[sigma];
  };
  auto integrand_sum = [&](double r, const std::vector<std::vector<cplx>>& F) {
    cplx acc = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
      cplx prod = 1.0;
      for (std::size_t l = 0; l < K; ++l) prod *= combine(F[l].data(), s, l);
      for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(i)] = r * d.images[s][static_cast<std::size_t>(i)];
      acc += prod * h(static_cast<int>(s), r, x);
    }
    return acc;
  };

  // [0, r0]: weight r^p via Gauss-Jacobi, kernels from the power series
  cplx head = 0.0;
  const GaussRule g = gauss_jacobi01(tol_.start_nodes, p, 0.0);
  const double scale0 = std::pow(r0, p + 1.0);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double r = r0 * g.x[i];
    std::vector<std::vector<cplx>> F;
    for (std::size_t l = 0; l < K; ++l) F.push_back(series_at(d.coeffs[l], r));
    head += g.w[i] * integrand_sum(r, F);
  }
  head *= scale0;
  if (R <= r0) return head;

  // [r0, R]: G_l = exp(-s_l r) F_l, Q' carries the rescaled integrand
  double S = 0.0;
  for (double s : d.shift) S += s;
  double rpk = S < 0 ? -p / S : R;
  rpk = std::clamp(rpk, r0, R);
  const double log_scale = -(p * std::log(rpk) + S * rpk);

  State y(K * N + 1);
  for (std::size_t l = 0; l < K; ++l) {
    const auto F0 = series_at(d.coeffs[l], r0);
    for (std::size_t s = 0; s < N; ++s) y[l * N + s] = F0[s] * std::exp(-d.shift[l] * r0);
  }
  y[K * N] = 0.0;

  std::vector<std::vector<cplx>> G(K, std::vector<cplx>(N));
  auto rhs = [&](const State& st, State& dy, double r) {
    for (std::size_t l = 0; l < K; ++l)
      for (std::size_t s = 0; s < N; ++s) {
        const cplx gs = st[l * N + s];
        cplx lap = 0.0;
        for (int nb : neighbours_[s]) lap += gs - st[l * N + static_cast<std::size_t>(nb)];
        dy[l * N + s] = (d.A[l][s] - d.shift[l]) * gs - (k_ / r) * lap;
        G[l][s] = gs;
      }
    dy[K * N] = std::exp(p * std::log(r) + S * r + log_scale) * integrand_sum(r, G);
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(tol_.abs, tol_.rel);
  odeint::integrate_adaptive(stepper, rhs, y, r0, R, std::min(0.1 * r0, (R - r0) / 16));
  return head + y[K * N] * std::exp(-log_scale);
}

std::vector<std::vector<cplx>> RaySolver::along_ray(const std::vector<double>& theta,
                                                     const std::vector<double>& radii) const {
  const RayData d = prepare(theta);
  const std::size_t N = perms_.size();
  const auto& A = d.A[0];
  const double sh = d.shift[0];
  std::vector<std::vector<cplx>> out;
  State y(N);
  double r = d.r0;
  {
    const auto F0 = series_at(d.coeffs[0], r);
    for (std::size_t s = 0; s < N; ++s) y[s] = F0[s] * std::exp(-sh * r);
  }
  auto rhs = [&](const State& st, State& dy, double t) {
    for (std::size_t s = 0; s < N; ++s) {
      cplx lap = 0.0;
      for (int nb : neighbours_[s]) lap += st[s] - st[static_cast<std::size_t>(nb)];
      dy[s] = (A[s] - sh) * st[s] - (k_ / t) * lap;
    }
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(tol_.abs, tol_.rel);
  for (double target : radii) {
    if (target <= d.r0) {
      auto v = series_at(d.coeffs[0], target);
      if (kernels_[0].bessel) std::fill(v.begin(), v.end(), mean(v.data(), N));
      out.push_back(std::move(v));
      continue;
    }
    if (target < r) throw std::invalid_argument("along_ray: radii must be increasing");
    if (target > r) odeint::integrate_adaptive(stepper, rhs, y, r, target, std::min(0.1 * d.r0, target - r));
    r = target;
    std::vector<cplx> v(N);
    for (std::size_t s = 0; s < N; ++s) v[s] = y[s] * std::exp(sh * r);
    if (kernels_[0].bessel) std::fill(v.begin(), v.end(), mean(v.data(), N));
    out.push_back(std::move(v));
  }
  return out;
}

cplx dunkl_kernel_ode(const std::vector<cplx>& lambda, const std::vector<double>& x, const MultiplicityParam& p,
                      bool bessel) {
  double r = 0.0;
  for (double v : x) r = std::max(r, std::abs(v));
  if (r == 0.0) return 1.0;
  std::vector<double> theta(x);
  for (auto& v : theta) v /= r;
  RaySolver rs(p.n, p.k_double(), {RayKernel{lambda, bessel}});
  return rs.along_ray(theta, {r})[0][0];
}

}  // namespace jackdunkl
