#include "jackdunkl/laplace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "jackdunkl/gamma.hpp"
#include "jackdunkl/quadrature.hpp"

namespace jackdunkl {

namespace {

std::atomic<int> g_threads{1};

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, g_threads.load())), count);
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

struct AngularNode {
  std::vector<double> theta;
  double weight;
};

/// Nodes on the chamber simplex {theta_1 > ... > theta_n > 0, sum theta = 1}, weights
/// including omega(theta) Delta(theta)^{Re a} and the Jacobian.
std::vector<AngularNode> chamber_rule(int n, double k, double a, int N) {
  if (n == 1) return {{{1.0}, 1.0}};
  std::vector<std::vector<double>> v(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) v[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] = 1.0 / j;
  Eigen::MatrixXd J(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 1; j < n; ++j) J(i, j - 1) = v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - v[0][static_cast<std::size_t>(i)];
  const double jac = std::abs(J.determinant());

  std::vector<double> e(static_cast<std::size_t>(n), 2.0 * k);
  e.back() = a;
  const SimplexRule rule = dirichlet_rule(e, N);
  std::vector<AngularNode> out;
  out.reserve(rule.w.size());
  for (std::size_t q = 0; q < rule.w.size(); ++q) {
    const auto& beta = rule.beta[q];
    std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) theta[static_cast<std::size_t>(i)] += beta[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    double s = jac * std::pow(1.0 / n, a);
    for (int i = 1; i < n; ++i) s *= std::pow(1.0 / i, 2.0 * k);
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) s *= std::pow(theta[static_cast<std::size_t>(i)] - theta[static_cast<std::size_t>(j)], 2.0 * k);
    for (int i = 0; i + 1 < n; ++i) s *= std::pow(theta[static_cast<std::size_t>(i)], a);
    out.push_back({std::move(theta), rule.w[q] * s});
  }
  return out;
}

double min_real(const std::vector<cplx>& v) {
  double m = 1e300;
  for (const auto& x : v) m = std::min(m, x.real());
  return m;
}

double sup_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string vec_str(const std::vector<cplx>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i].real());
    if (v[i].imag() != 0.0) s += (v[i].imag() > 0 ? "+" : "") + format_double(v[i].imag()) + "i";
  }
  return s + ")";
}

std::string c_str(cplx c) { return vec_str({c}).substr(1, vec_str({c}).size() - 2); }

/// Radial cutoff from the exponential bound: Gamma(p+1, cR)/Gamma(p+1) < relTol/100.
double auto_cutoff(double p, double c, double relTol) {
  if (c <= 0) throw std::domain_error("integrand is not dominated by the kernel decay");
  return boost::math::gamma_q_inv(p + 1.0, relTol * 1e-2) / c;
}

double kernel_decay(const std::vector<RayKernel>& kernels) {
  double c = 0.0;
  for (const auto& kr : kernels) c += -std::max_element(kr.lambda.begin(), kr.lambda.end(), [](cplx x, cplx y) {
                                        return x.real() < y.real();
                                      })->real();
  return c;
}

std::vector<cplx> neg(const std::vector<cplx>& z) {
  std::vector<cplx> r(z);
  for (auto& v : r) v = -v;
  return r;
}

std::vector<cplx> inv(const std::vector<cplx>& z) {
  std::vector<cplx> r(z);
  for (auto& v : r) v = 1.0 / v;
  return r;
}

void require_positive(const std::vector<cplx>& z, const char* what) {
  for (const auto& v : z)
    if (!(v.real() > 0)) throw std::domain_error(std::string(what) + " must have positive real parts");
}

void require_mu(cplx mu, const MultiplicityParam& p, const char* what) {
  if (mu.real() < p.mu0_double() + 0.5)
    throw std::domain_error(std::string(what) + " must satisfy Re >= mu0 + 1/2");
}

cplx eval_qpoly(const QPoly& q, const std::vector<cplx>& z) { return q.eval<cplx>(std::span<const cplx>(z)); }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

VerificationReport make_report(std::string name, const MultiplicityParam& p) {
  VerificationReport r;
  r.identity = std::move(name);
  r.add("n", std::to_string(p.n));
  r.add("k", to_string(p.k));
  return r;
}

void finish(VerificationReport& r, cplx lhs, cplx rhs, double tol, const QuadratureResult& q,
            std::chrono::steady_clock::time_point t0) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.relError = rel_error(lhs, rhs);
  r.tolerance = tol;
  r.quadratureError = q.change;
  r.runtimeMs = elapsed_ms(t0);
  r.finish();
  if (!q.converged) {
    r.pass = false;
    r.detail = "quadrature did not reach relTol at the resolution cap";
  }
}

}  // namespace

void set_thread_count(int threads) { g_threads = std::max(1, threads); }
int thread_count() { return g_threads.load(); }

QuadratureSpec QuadratureSpec::make(const MultiplicityParam& p, double relTol) {
  QuadratureSpec s;
  s.n = p.n;
  s.k = p.k_double();
  s.relTol = relTol;
  if (p.n >= 3) {
    s.pointsPerChamberAxis = 6;
    s.maxPointsPerAxis = 24;
  }
  return s;
}

Integrand Integrand::constant(cplx c) {
  Integrand h;
  NumericPoly p;
  h.poly = p;
  h.poly->terms.emplace_back(Exponent{}, c);
  return h;
}

Integrand Integrand::polynomial(NumericPoly p, double growth) {
  Integrand h;
  h.degree_hint = p.degree();
  h.poly = std::move(p);
  h.growth = growth;
  return h;
}

Integrand Integrand::function(std::function<cplx(const std::vector<double>&)> f, double growth) {
  Integrand h;
  h.f = std::move(f);
  h.growth = growth;
  return h;
}

double weight_omega(const std::vector<double>& x, double k) {
  double w = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) w *= std::pow(std::abs(x[i] - x[j]), 2.0 * k);
  return w;
}

cplx delta_power(const std::vector<cplx>& z, cplx s) {
  cplx l = 0.0;
  for (const auto& v : z) l += std::log(v);
  return std::exp(s * l);
}

QuadratureResult laplace_integrate(const std::vector<RayKernel>& kernels, const Integrand& h, cplx a,
                                   const QuadratureSpec& spec) {
  const int n = spec.n;
  // n == 0 marks a constant polynomial usable in any dimension
  if (h.poly && h.poly->n != 0 && h.poly->n != n) throw DimensionError("integrand dimension mismatch");
  const double ar = a.real(), ai = a.imag();
  if (ar <= -1.0) throw std::domain_error("Delta power must have real part > -1");
  const double p = (n - 1) + n * ar + spec.k * n * (n - 1);
  const double c = kernel_decay(kernels) - h.growth;
  QuadratureResult res;
  res.cutoff = spec.cutoff > 0 ? spec.cutoff : auto_cutoff(p + std::max(0, h.degree_hint), c, spec.relTol);
  const RaySolver solver(n, spec.k, kernels, spec.ode);
  const auto& perms = solver.perms();

  auto ray_value = [&](const std::vector<double>& theta) -> cplx {
    // radial polynomial coefficients per chamber image
    std::vector<std::vector<cplx>> radial;
    if (h.poly) {
      const int deg = h.poly->n == 0 ? 0 : h.poly->degree();
      for (const auto& s : perms) {
        std::vector<double> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = theta[static_cast<std::size_t>(i)];
        std::vector<cplx> b(static_cast<std::size_t>(deg) + 1, 0.0);
        for (const auto& [e, cf] : h.poly->terms) {
          double m = 1.0;
          int d = 0;
          for (int i = 0; i < h.poly->n; ++i) {
            m *= std::pow(img[static_cast<std::size_t>(i)], e[i]);
            d += e[i];
          }
          b[static_cast<std::size_t>(d)] += cf * m;
        }
        radial.push_back(std::move(b));
      }
    }
    auto integrand = [&](int s, double r, const std::vector<double>& x) -> cplx {
      cplx v;
      if (h.poly) {
        const auto& b = radial[static_cast<std::size_t>(s)];
        v = 0.0;
        for (std::size_t d = b.size(); d-- > 0;) v = v * r + b[d];
      } else {
        v = h.f(x);
      }
      if (ai != 0.0) {
        double l = 0.0;
        for (double xi : x) l += std::log(xi);
        v *= std::exp(cplx(0.0, ai * l));
      }
      return v;
    };
    return solver.integrate(theta, p, res.cutoff, integrand);
  };

  if (n == 1) {
    res.value = ray_value({1.0});
    res.converged = true;
    res.points = 1;
    return res;
  }

  auto gauss_at = [&](int N) {
    const auto nodes = chamber_rule(n, spec.k, ar, N);
    std::vector<cplx> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) { vals[i] = nodes[i].weight * ray_value(nodes[i].theta); });
    cplx s = 0.0;
    for (const auto& v : vals) s += v;
    return s;
  };

  if (spec.scheme == QuadratureScheme::tanh_sinh) {
    if (n != 2) throw std::invalid_argument("tanh-sinh angular scheme is implemented for n = 2");
    // theta = (1 - t/2, t/2) covers the chamber; Jacobian 1/2
    std::map<double, cplx> memo;
    auto g = [&](double t) -> cplx {
      auto it = memo.find(t);
      if (it != memo.end()) return it->second;
      const std::vector<double> theta{1.0 - 0.5 * t, 0.5 * t};
      const double w = 0.5 * weight_omega(theta, spec.k) * std::pow(theta[0] * theta[1], ar);
      const cplx v = w * ray_value(theta);
      memo.emplace(t, v);
      return v;
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    double err_re = 0.0, err_im = 0.0;
    const double re = ts.integrate([&](double t) { return g(t).real(); }, 0.0, 1.0, spec.relTol, &err_re);
    const double im = ts.integrate([&](double t) { return g(t).imag(); }, 0.0, 1.0, spec.relTol, &err_im);
    res.value = {re, im};
    res.change = std::hypot(err_re, err_im) / std::max(std::abs(res.value), 1e-300);
    res.converged = res.change <= spec.relTol;
    res.points = static_cast<int>(memo.size());
    return res;
  }

  int N = std::max(2, spec.pointsPerChamberAxis);
  cplx prev = gauss_at(N);
  for (;;) {
    const int N2 = 2 * N;
    const cplx cur = gauss_at(N2);
    res.change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    res.value = cur;
    res.points = N2;
    if (res.change < spec.relTol) {
      res.converged = true;
      break;
    }
    if (2 * N2 > spec.maxPointsPerAxis) break;
    prev = cur;
    N = N2;
  }
  if (!res.converged && spec.require_convergence)
    throw QuadratureError("angular quadrature did not converge: last change " + format_double(res.change));
  return res;
}

cplx dunkl_laplace(const Integrand& f, const std::vector<cplx>& z, const QuadratureSpec& spec,
                   QuadratureResult* info) {
  require_positive(z, "z");
  const QuadratureResult r = laplace_integrate({RayKernel{neg(z), false}}, f, 0.0, spec);
  if (info) *info = r;
  return r.value;
}

QuadratureResult cube_integrate(const Integrand& h, cplx a, cplx b, const QuadratureSpec& spec) {
  const int n = spec.n;
  const double ar = a.real(), br = b.real();
  if (ar <= -1.0 || br <= -1.0) throw std::domain_error("Selberg exponents must have real part > -1");
  const auto perms = all_permutations(n);
  auto at = [&](int N) {
    std::vector<double> e(static_cast<std::size_t>(n) + 1, 2.0 * spec.k);
    e.front() = br;
    e.back() = ar;
    const SimplexRule rule = dirichlet_rule(e, N);
    std::vector<cplx> vals(rule.w.size());
    parallel_for(rule.w.size(), [&](std::size_t q) {
      const auto& beta = rule.beta[q];
      // x_j = beta_j + ... + beta_n, so x_i - x_{i+1} = beta_i, x_n = beta_n, 1 - x_1 = beta_0
      std::vector<double> x(static_cast<std::size_t>(n), 0.0);
      double acc = 0.0;
      for (int j = n; j >= 1; --j) {
        acc += beta[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(j - 1)] = acc;
      }
      double s = 1.0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) s *= std::pow(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)], 2.0 * spec.k);
      for (int i = 0; i + 1 < n; ++i) s *= std::pow(x[static_cast<std::size_t>(i)], ar);
      for (int i = 1; i < n; ++i) s *= std::pow(1.0 - x[static_cast<std::size_t>(i)], br);
      cplx phase = 1.0;
      if (a.imag() != 0.0 || b.imag() != 0.0) {
        double l = 0.0, l1 = 0.0;
        for (double xi : x) {
          l += std::log(xi);
          l1 += std::log(1.0 - xi);
        }
        phase = std::exp(cplx(0.0, a.imag() * l + b.imag() * l1));
      }
      cplx hs = 0.0;
      std::vector<double> y(static_cast<std::size_t>(n));
      for (const auto& sg : perms) {
        for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(sg[static_cast<std::size_t>(i)])] = x[static_cast<std::size_t>(i)];
        hs += h.poly ? (h.poly->n == 0 ? h.poly->terms[0].second : h.poly->eval(y.data())) : h.f(y);
      }
      vals[q] = rule.w[q] * s * phase * hs;
    });
    cplx sum = 0.0;
    for (const auto& v : vals) sum += v;
    return sum;
  };
  QuadratureResult res;
  int N = std::max(2, spec.pointsPerChamberAxis);
  cplx prev = at(N);
  for (;;) {
    const int N2 = 2 * N;
    const cplx cur = at(N2);
    res.change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    res.value = cur;
    res.points = N2;
    if (res.change < spec.relTol) {
      res.converged = true;
      break;
    }
    if (2 * N2 > spec.maxPointsPerAxis) break;
    prev = cur;
    N = N2;
  }
  if (!res.converged && spec.require_convergence)
    throw QuadratureError("cube quadrature did not converge: last change " + format_double(res.change));
  return res;
}

std::vector<double> ShiftedSpectral::lambda(const MultiplicityParam& p) const {
  const auto eb = eta_bar(eta, p);
  std::vector<double> l;
  for (const auto& v : eb) l.push_back(Rational(v + p.k * (p.n - 1) / 2).get_d());
  return l;
}

cplx cherednik_rat(const ShiftedSpectral& s, const std::vector<cplx>& z, const JackTable& table) {
  const int lo = std::min(0, *std::min_element(s.eta.begin(), s.eta.end()));
  Composition base(s.eta);
  for (auto& v : base) v -= lo;
  const QPoly& e = table.E_ref(base);
  return delta_power(z, static_cast<double>(lo)) * eval_qpoly(e, z) / eval_E_at_one(base, table.param()).get_d();
}

VerificationReport verify_master(const Composition& eta, cplx mu, const std::vector<cplx>& z,
                                 const QuadratureSpec& spec, const JackTable& table, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = table.param();
  require_positive(z, "z");
  require_mu(mu, p, "mu");
  auto r = make_report("master", p);
  r.add("eta", to_string(eta));
  r.add("mu", c_str(mu));
  r.add("z", vec_str(z));
  const QPoly& e = table.E_ref(eta);
  const auto q = laplace_integrate({RayKernel{neg(z), false}}, Integrand::polynomial(to_numeric(e)),
                                   mu - p.mu0_double() - 1.0, spec);
  std::vector<cplx> arg;
  for (int v : eta_plus(eta)) arg.push_back(static_cast<double>(v) + mu);
  const cplx rhs = gamma_n(arg, p) * eval_qpoly(e, inv(z)) * delta_power(z, -mu);
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

VerificationReport verify_master_symmetric(const Partition& lambda, cplx mu, const std::vector<cplx>& z,
                                           const QuadratureSpec& spec, const JackTable& table, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = table.param();
  require_positive(z, "z");
  require_mu(mu, p, "mu");
  auto r = make_report("master-symmetric", p);
  r.add("lambda", to_string(lambda));
  r.add("mu", c_str(mu));
  r.add("z", vec_str(z));
  const QPoly& P = table.P(lambda);
  const auto q = laplace_integrate({RayKernel{neg(z), true}}, Integrand::polynomial(to_numeric(P)),
                                   mu - p.mu0_double() - 1.0, spec);
  std::vector<cplx> arg;
  for (int v : lambda) arg.push_back(static_cast<double>(v) + mu);
  const cplx rhs = gamma_n(arg, p) * eval_qpoly(P, inv(z)) * delta_power(z, -mu);
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

VerificationReport verify_kadell(const Partition& lambda, cplx mu, cplx nu, const QuadratureSpec& spec,
                                 const JackTable& table, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = table.param();
  require_mu(mu, p, "mu");
  require_mu(nu, p, "nu");
  auto r = make_report("kadell", p);
  r.add("lambda", to_string(lambda));
  r.add("mu", c_str(mu));
  r.add("nu", c_str(nu));
  const QPoly& P = table.P(lambda);
  NumericPoly h = to_numeric(P);
  const double at1 = eval_P_at_one(lambda, p).get_d();
  for (auto& t : h.terms) t.second /= at1;
  const double m0 = p.mu0_double();
  const auto q = cube_integrate(Integrand::polynomial(std::move(h)), mu - m0 - 1.0, nu - m0 - 1.0, spec);
  const cplx rhs = gamma_n(mu, p) * gamma_n(nu, p) / gamma_n(mu + nu, p) * pochhammer(mu, lambda, p) /
                   pochhammer(mu + nu, lambda, p);
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

VerificationReport verify_euler(const SeriesSpec& series, cplx mu1, cplx nu1, const std::vector<cplx>& w,
                                const QuadratureSpec& spec, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = series.param;
  require_mu(mu1, p, "mu'");
  require_mu(nu1 - mu1, p, "nu' - mu'");
  auto r = make_report("euler", p);
  r.add("p", std::to_string(series.p()));
  r.add("q", std::to_string(series.q()));
  r.add("upper", vec_str(series.upper));
  r.add("lower", vec_str(series.lower));
  r.add("mu'", c_str(mu1));
  r.add("nu'", c_str(nu1));
  r.add("w", vec_str(w));
  const cplx vol = gamma_n(mu1, p) * gamma_n(nu1 - mu1, p) / gamma_n(nu1, p);
  SeriesSpec up = series;
  up.upper.insert(up.upper.begin(), mu1);
  up.lower.insert(up.lower.begin(), nu1);
  up.truncation = 0;
  up.tolerance = 1e-3 * tol;
  const std::vector<cplx> one(static_cast<std::size_t>(p.n), 1.0);
  const SeriesValue rv = eval_pFq(up, w, one);
  const cplx rhs = vol * rv.value;
  const int D = series_degree_for_region(series, sup_abs(w), 1.0, 0.0, 1e-3 * tol * std::abs(rv.value));
  const NumericPoly h = series_in_x(SeriesKind::F, series, w, D);
  const double m0 = p.mu0_double();
  const auto q = cube_integrate(Integrand::polynomial(h), mu1 - m0 - 1.0, nu1 - mu1 - m0 - 1.0, spec);
  r.add("degree", std::to_string(D));
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

VerificationReport verify_hyp_laplace(SeriesKind kind, const SeriesSpec& series, cplx mu1,
                                      const std::vector<cplx>& w, const std::vector<cplx>& z,
                                      const QuadratureSpec& spec, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = series.param;
  require_positive(z, "z");
  require_mu(mu1, p, "mu'");
  const int n = p.n;
  const double wn = sup_abs(w), czmin = min_real(z);
  if (series.p() > series.q()) throw SeriesDomainError("series Laplace identity needs p <= q");
  if (series.p() == series.q() && !(wn / czmin < 1.0 / n))
    throw SeriesDomainError("p = q requires ||w|| ||1/Re z|| < 1/n");
  auto r = make_report(kind == SeriesKind::K ? "hyplaplace-K" : "hyplaplace-F", p);
  r.add("p", std::to_string(series.p()));
  r.add("q", std::to_string(series.q()));
  r.add("upper", vec_str(series.upper));
  r.add("lower", vec_str(series.lower));
  r.add("mu'", c_str(mu1));
  r.add("w", vec_str(w));
  r.add("z", vec_str(z));

  SeriesSpec up = series;
  up.upper.insert(up.upper.begin(), mu1);
  up.truncation = 0;
  up.tolerance = 1e-3 * tol;
  const SeriesValue rv = eval_series(kind, up, w, inv(z));
  const cplx rhs = gamma_n(mu1, p) * delta_power(z, -mu1) * rv.value;

  const double growth = series.p() == series.q() ? n * wn : 0.5 * czmin;
  const double a = (mu1 - p.mu0_double() - 1.0).real();
  const double pw = (n - 1) + n * a + p.k_double() * n * (n - 1);
  const double R = spec.cutoff > 0 ? spec.cutoff : auto_cutoff(pw + 8.0, czmin - growth, spec.relTol);
  // sup_r tail e^{-c r/2} times int e^{-c r/2} Delta^a omega bounds the truncation error
  const double half = 0.5 * czmin;
  const double vol = std::abs(gamma_n(mu1, p)) * std::pow(half, -n * mu1.real());
  const int D = series_degree_for_region(series, wn, R, half, 1e-3 * tol * std::abs(rhs) / vol);
  Integrand h = Integrand::polynomial(series_in_x(kind, series, w, D), growth);
  h.degree_hint = 8;
  QuadratureSpec qs = spec;
  qs.cutoff = R;
  const auto q = laplace_integrate({RayKernel{neg(z), false}}, h, mu1 - p.mu0_double() - 1.0, qs);
  r.add("degree", std::to_string(D));
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

VerificationReport verify_1K0(SeriesKind kind, cplx mu, const std::vector<cplx>& z, const std::vector<cplx>& w,
                              const MultiplicityParam& p, const QuadratureSpec& spec, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  require_positive(z, "z");
  require_positive(w, "w");
  require_mu(mu, p, "mu");
  auto r = make_report(kind == SeriesKind::K ? "1K0-integral" : "1F0-integral", p);
  r.add("mu", c_str(mu));
  r.add("z", vec_str(z));
  r.add("w", vec_str(w));
  SeriesSpec s;
  s.param = p;
  s.upper = {mu};
  s.tolerance = 1e-3 * tol;
  const SeriesValue sv = eval_series(kind, s, neg(z), w);
  const bool bessel = kind == SeriesKind::F;
  const auto q = laplace_integrate({RayKernel{neg(inv(z)), bessel}, RayKernel{neg(w), bessel}}, Integrand::constant(),
                                   mu - p.mu0_double() - 1.0, spec);
  const cplx lhs = delta_power(z, -mu) / gamma_n(mu, p) * q.value;
  finish(r, lhs, sv.value, tol, q, t0);
  return r;
}

VerificationReport verify_macdonald_cherednik(const ShiftedSpectral& s, cplx mu, const std::vector<cplx>& z,
                                              const QuadratureSpec& spec, const JackTable& table, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& p = table.param();
  require_positive(z, "z");
  require_mu(mu, p, "mu");
  const auto lam = s.lambda(p);
  for (double v : lam)
    if (v < 0) throw std::domain_error("spectral point must satisfy Re lambda >= 0");
  auto r = make_report("cherednik", p);
  r.add("eta", to_string(s.eta));
  {
    std::vector<cplx> lc(lam.begin(), lam.end());
    r.add("lambda", vec_str(lc));
  }
  r.add("mu", c_str(mu));
  r.add("z", vec_str(z));
  const int lo = std::min(0, *std::min_element(s.eta.begin(), s.eta.end()));
  Composition base(s.eta);
  for (auto& v : base) v -= lo;
  NumericPoly h = to_numeric(table.E_ref(base));
  const double at1 = eval_E_at_one(base, p).get_d();
  for (auto& t : h.terms) t.second /= at1;
  const auto q = laplace_integrate({RayKernel{neg(z), false}}, Integrand::polynomial(std::move(h)),
                                   mu - p.mu0_double() - 1.0 + static_cast<double>(lo), spec);
  const auto rh = rho(p);
  std::vector<cplx> arg;
  for (int j = 0; j < p.n; ++j) arg.push_back(lam[static_cast<std::size_t>(j)] + rh[static_cast<std::size_t>(j)].get_d() + mu);
  const cplx rhs = gamma_n(arg, p) * cherednik_rat(s, inv(z), table) * delta_power(z, -mu);
  finish(r, q.value, rhs, tol, q, t0);
  return r;
}

PostWidderResult post_widder(const Integrand& f, const std::vector<double>& xi, int nu, const MultiplicityParam& p,
                             const QuadratureSpec& spec) {
  if (static_cast<int>(xi.size()) != p.n) throw DimensionError("xi must have length n");
  std::vector<cplx> lam;
  double logd = 0.0;
  for (double v : xi) {
    if (!(v > 0)) throw std::domain_error("xi must be positive");
    lam.push_back(-nu / v);
    logd += std::log(nu / v);
  }
  PostWidderResult out;
  out.quad = laplace_integrate({RayKernel{lam, false}}, f, static_cast<double>(nu), spec);
  const double s = nu + p.mu0_double() + 1.0;
  const cplx lg = log_gamma_n(std::vector<cplx>(static_cast<std::size_t>(p.n), s), p);
  out.value = std::exp(s * logd - lg) * out.quad.value;
  return out;
}

}  // namespace jackdunkl
