#include "jackdunkl/hyperseries.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <mutex>

#include "jackdunkl/jack.hpp"

namespace jackdunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Series terms are summed in extended precision; the result is rounded to double once.
using xreal = long double;
using xcplx = std::complex<xreal>;
constexpr xreal kXEps = std::numeric_limits<xreal>::epsilon();

template <class T>
struct NeumaierSum {
  T s = 0, c = 0;
  void add(T x) {
    const T t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  T value() const { return s + c; }
};

struct ComplexSum {
  NeumaierSum<xreal> re, im;
  void add(xcplx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  xcplx value() const { return {re.value(), im.value()}; }
};

// Rational to long double via a double plus its rounding residual.
xreal to_x(const Rational& q) {
  const double hi = q.get_d();
  const Rational rest = q - Rational(hi);
  return static_cast<xreal>(hi) + static_cast<xreal>(rest.get_d());
}

struct NumEntry {
  Composition index;  // eta for L, lambda for C
  int partition = 0;  // index of eta_plus in the level's partition list
  std::vector<std::pair<Exponent, xreal>> terms;
  xreal at_one = 1.0;
};

struct NumLevel {
  std::vector<Partition> partitions;
  std::vector<NumEntry> L;
  std::vector<NumEntry> C;
};

std::vector<std::pair<Exponent, xreal>> numeric_terms(const QPoly& p) {
  std::vector<std::pair<Exponent, xreal>> out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) out.emplace_back(e, to_x(c));
  return out;
}

/// Float images of L_eta and C_lambda, built weight by weight from the exact table.
class NumericJackTable {
 public:
  explicit NumericJackTable(const MultiplicityParam& p) : exact_(p, default_max_degree(p.n)) {}

  void ensure(int D) {
    std::lock_guard<std::mutex> lock(mu_);
    if (D > exact_.max_weight())
      throw ResourceLimitError("series degree " + std::to_string(D) + " exceeds the table cap " +
                               std::to_string(exact_.max_weight()));
    const int n = exact_.n();
    while (static_cast<int>(levels_.size()) <= D) {
      const int m = static_cast<int>(levels_.size());
      NumLevel lv;
      lv.partitions = enumerate_partitions(n, m);
      std::map<Partition, int> pindex;
      for (std::size_t i = 0; i < lv.partitions.size(); ++i) {
        pindex[lv.partitions[i]] = static_cast<int>(i);
        lv.C.push_back({lv.partitions[i], static_cast<int>(i), {}, 0.0L});
      }
      std::vector<std::map<Exponent, xreal>> csum(lv.partitions.size());
      for (const auto& eta : enumerate_compositions(n, m)) {
        const Rational cq = c_norm(eta, exact_.param());
        const xreal c = to_x(cq);
        auto terms = numeric_terms(exact_.E_ref(eta));
        for (auto& t : terms) t.second *= c;
        const int pi = pindex.at(eta_plus(eta));
        const xreal at1 = to_x(cq * eval_E_at_one(eta, exact_.param()));
        // C_lambda is the orbit sum of the L_eta
        for (const auto& [e, v] : terms) csum[static_cast<std::size_t>(pi)][e] += v;
        lv.C[static_cast<std::size_t>(pi)].at_one += at1;
        lv.L.push_back({eta, pi, std::move(terms), at1});
      }
      for (std::size_t i = 0; i < csum.size(); ++i)
        lv.C[i].terms.assign(csum[i].begin(), csum[i].end());
      levels_.push_back(std::move(lv));
    }
  }

  const NumLevel& level(int m) const {
    std::lock_guard<std::mutex> lock(mu_);
    return levels_.at(static_cast<std::size_t>(m));
  }

 private:
  JackTable exact_;
  mutable std::mutex mu_;
  std::deque<NumLevel> levels_;
};

std::shared_ptr<NumericJackTable> numeric_table(const MultiplicityParam& p) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::shared_ptr<NumericJackTable>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p.n, to_string(p.k)}];
  if (!slot) slot = std::make_shared<NumericJackTable>(p);
  return slot;
}

double sup_norm(const std::vector<cplx>& v) {
  double r = 0.0;
  for (const auto& x : v) r = std::max(r, std::abs(x));
  return r;
}

/// Bounds for sum_{m > D} rho(m) (n a)^m / m!.
class TailBounder {
 public:
  explicit TailBounder(const SeriesSpec& spec) : spec_(spec), n_(spec.param.n), k_(spec.param.k_double()) {
    const double shift = k_ * (n_ - 1);
    for (const auto& m : spec.upper) A_.push_back(std::abs(m) + shift);
    for (const auto& v : spec.lower) B_.push_back(std::abs(v) + shift);
    maxB_ = B_.empty() ? 0.0 : *std::max_element(B_.begin(), B_.end());
  }

  double tail(int D, double a) {
    if (a == 0.0) return 0.0;
    const int p = spec_.p(), q = spec_.q();
    if (p > q + 1) return kInf;
    const double na = n_ * a;
    if (p == q + 1 && na >= 1.0) return kInf;
    int M = std::max({D + 17, static_cast<int>(std::ceil(maxB_)) + 2, 8});
    double rstar = 0.0;
    for (;;) {
      rstar = ratio_bound(M, na);
      if (rstar < 0.95) break;
      if (M > 40000) return kInf;
      M *= 2;
    }
    extend(M);
    const double lna = std::log(na);
    NeumaierSum<double> s;
    double last = 0.0;
    for (int m = M; m > D; --m) {
      const double lt = logrho_[static_cast<std::size_t>(m)] + m * lna - std::lgamma(m + 1.0);
      const double t = std::exp(lt);
      if (m == M) last = t;
      s.add(t);
    }
    return s.value() + last * rstar / (1.0 - rstar);
  }

  /// Extended-precision rounding allowance on sum_{m <= D} rho(m) (n a)^m / m!, which dominates sum |terms|.
  /// A term of degree m carries O(m) roundings from the power tables.
  double rounding(int D, double a) {
    extend(D);
    const double eps = static_cast<double>(kXEps) * (16.0 + 4.0 * (n_ + 1) * D);
    if (a == 0.0) return eps;
    const double lna = std::log(n_ * a);
    double s = 0.0;
    for (int m = 0; m <= D; ++m) s += std::exp(logrho_[static_cast<std::size_t>(m)] + m * lna - std::lgamma(m + 1.0));
    return eps * s;
  }

 private:
  // log |F(j, t)|: factor added to the Pochhammer ratio by a box in row j at column t.
  double log_box(int j, int t) const {
    double r = 0.0;
    for (const auto& mu : spec_.upper) r += std::log(std::abs(mu - k_ * j + static_cast<double>(t)));
    for (const auto& nu : spec_.lower) r -= std::log(std::abs(nu - k_ * j + static_cast<double>(t)));
    return r;
  }

  void extend_rows(int M) {
    if (rows_.empty()) rows_.assign(static_cast<std::size_t>(n_), std::vector<double>{0.0});
    while (static_cast<int>(rows_[0].size()) <= M) {
      const int t = static_cast<int>(rows_[0].size()) - 1;
      double best = -kInf;
      for (int j = 0; j < n_; ++j) {
        const double f = log_box(j, t);
        rows_[static_cast<std::size_t>(j)].push_back(rows_[static_cast<std::size_t>(j)].back() + f);
        best = std::max(best, f);
      }
      umax_.push_back(umax_.empty() ? best : std::max(umax_.back(), best));
    }
  }

  void enumerate(int m, int parts_left, int bound, int row, double acc, double& best) const {
    if (m == 0) {
      best = std::max(best, acc);
      return;
    }
    if (parts_left == 0) return;
    for (int v = std::min(m, bound); v * parts_left >= m && v >= 1; --v)
      enumerate(m - v, parts_left - 1, v, row + 1, acc + rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(v)], best);
  }

  void extend(int M) {
    extend_rows(M);
    while (static_cast<int>(logrho_.size()) <= M) {
      const int m = static_cast<int>(logrho_.size());
      double best = -kInf;
      enumerate(m, n_, m, 0, 0.0, best);
      logrho_.push_back(best);
    }
  }

  double ratio_bound(int M, double na) {
    extend_rows(M);
    const double lu = umax_[static_cast<std::size_t>(M - 1)];  // boxes with column t < M
    const int p = spec_.p(), q = spec_.q();
    auto factor = [&](int i) { return std::log((M + A_[static_cast<std::size_t>(i)]) / (M - B_[static_cast<std::size_t>(i)])); };
    if (p <= q) {
      double lg = 0.0;
      for (int i = 0; i < p; ++i) lg += factor(i);
      for (int l = p; l < q; ++l) lg -= std::log(M - B_[static_cast<std::size_t>(l)]);
      return na * std::exp(std::max(lu, lg)) / (M + 1.0);
    }
    double lv = 0.0;
    for (int i = 0; i < q; ++i) lv += factor(i);
    const double ap = A_.back();
    return na * std::max(std::exp(lu) / (M + 1.0), std::exp(lv) * std::max(1.0, (M + ap) / (M + 1.0)));
  }

  SeriesSpec spec_;
  int n_;
  double k_;
  std::vector<double> A_, B_;
  double maxB_ = 0.0;
  std::vector<std::vector<double>> rows_;
  std::vector<double> umax_;
  std::vector<double> logrho_;
};

xcplx pochhammer_x(xcplx mu, const Partition& lambda, xreal k) {
  xcplx r = 1.0L;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (int t = 0; t < lambda[j]; ++t) r *= mu - k * static_cast<xreal>(j) + static_cast<xreal>(t);
  return r;
}

xcplx coefficient_ratio(const SeriesSpec& spec, const Partition& lambda) {
  const xreal k = to_x(spec.param.k);
  xcplx r = 1.0L;
  for (const auto& mu : spec.upper) r *= pochhammer_x(xcplx(mu), lambda, k);
  for (const auto& nu : spec.lower) r /= pochhammer_x(xcplx(nu), lambda, k);
  return r;
}

std::vector<std::vector<xcplx>> power_table(const std::vector<xcplx>& v, int D) {
  std::vector<std::vector<xcplx>> pw(v.size(), std::vector<xcplx>(static_cast<std::size_t>(D) + 1, 1.0L));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int e = 1; e <= D; ++e) pw[i][static_cast<std::size_t>(e)] = pw[i][static_cast<std::size_t>(e) - 1] * v[i];
  return pw;
}

xcplx eval_terms(const std::vector<std::pair<Exponent, xreal>>& terms, const std::vector<std::vector<xcplx>>& pw) {
  ComplexSum s;
  const std::size_t n = pw.size();
  for (const auto& [e, c] : terms) {
    xcplx t = c;
    for (std::size_t i = 0; i < n; ++i) t *= pw[i][static_cast<std::size_t>(e[static_cast<int>(i)])];
    s.add(t);
  }
  return s.value();
}

void check_dims(const SeriesSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w) {
  if (static_cast<int>(z.size()) != spec.param.n || static_cast<int>(w.size()) != spec.param.n)
    throw DimensionError("series arguments must have length n = " + std::to_string(spec.param.n));
}

}  // namespace

int default_max_degree(int n) {
  switch (n) {
    case 1: return 400;
    case 2: return 200;
    case 3: return 80;
    default: return 24;
  }
}

void validate_series_spec(const SeriesSpec& spec) {
  const double k = spec.param.k_double();
  for (std::size_t l = 0; l < spec.lower.size(); ++l)
    for (int j = 0; j < spec.param.n; ++j) {
      const cplx x = spec.lower[l] - k * j;
      if (std::abs(x.imag()) < 1e-14 && x.real() < 0.5 && std::abs(x.real() - std::round(x.real())) < 1e-12)
        throw SeriesDomainError("lower parameter nu_" + std::to_string(l + 1) +
                                " makes a generalized Pochhammer symbol vanish");
    }
}

double series_tail_bound(const SeriesSpec& spec, int D, double a) {
  TailBounder tb(spec);
  return tb.tail(D, a);
}

SeriesValue eval_series(SeriesKind kind, const SeriesSpec& spec, const std::vector<cplx>& z,
                        const std::vector<cplx>& w) {
  validate_series_spec(spec);
  check_dims(spec, z, w);
  const int n = spec.param.n;
  const int Dmax = spec.max_degree > 0 ? spec.max_degree : default_max_degree(n);
  const double zn = sup_norm(z), wn = sup_norm(w), a = zn * wn;
  const int p = spec.p(), q = spec.q();
  if (p == q + 1 && a >= 1.0)
    throw SeriesDomainError("p = q+1 series requires ||z||_inf ||w||_inf < 1");
  if (p > q + 1 && a > 0.0) throw SeriesDomainError("p > q+1 series diverge for nonzero arguments");

  TailBounder tb(spec);
  SeriesValue out;
  int D = spec.truncation;
  if (D > 0) {
    if (D > Dmax) throw ResourceLimitError("truncation degree exceeds the maximum series degree");
    out.tailBound = tb.tail(D, a) + tb.rounding(D, a);
  } else {
    D = 0;
    for (;; ++D) {
      out.tailBound = tb.tail(D, a);
      if (out.tailBound <= spec.tolerance) {
        out.tailBound += tb.rounding(D, a);
        if (out.tailBound <= spec.tolerance) break;
      }
      if (D >= Dmax)
        throw SeriesConvergenceError("tail bound " + format_double(out.tailBound) + " not below tolerance at degree " +
                                     std::to_string(Dmax));
    }
  }
  out.degree = D;
  out.converged = out.tailBound <= spec.tolerance;

  auto table = numeric_table(spec.param);
  table->ensure(D);
  std::vector<xcplx> zh(z.begin(), z.end()), wh(w.begin(), w.end());
  if (zn > 0)
    for (auto& v : zh) v /= static_cast<xreal>(zn);
  if (wn > 0)
    for (auto& v : wh) v /= static_cast<xreal>(wn);
  const auto pz = power_table(zh, D), pwt = power_table(wh, D);
  const xreal la = a > 0 ? std::log(static_cast<xreal>(zn)) + std::log(static_cast<xreal>(wn)) : 0.0L;

  ComplexSum total;
  for (int m = 0; m <= D; ++m) {
    const xreal scale = m == 0 ? 1.0L : (a > 0 ? std::exp(m * la - std::lgamma(m + 1.0L)) : 0.0L);
    if (scale == 0.0L) break;
    const NumLevel& lv = table->level(m);
    std::vector<xcplx> ratio(lv.partitions.size());
    for (std::size_t i = 0; i < lv.partitions.size(); ++i) ratio[i] = coefficient_ratio(spec, lv.partitions[i]);
    ComplexSum level;
    const auto& entries = kind == SeriesKind::K ? lv.L : lv.C;
    for (const auto& e : entries) {
      level.add(ratio[static_cast<std::size_t>(e.partition)] * eval_terms(e.terms, pz) * eval_terms(e.terms, pwt) /
                e.at_one);
      ++out.termsUsed;
    }
    total.add(level.value() * scale);
  }
  const xcplx v = total.value();
  out.value = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  // final rounding to double
  out.tailBound += std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

SeriesValue eval_pKq(const SeriesSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w) {
  return eval_series(SeriesKind::K, spec, z, w);
}

SeriesValue eval_pFq(const SeriesSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w) {
  return eval_series(SeriesKind::F, spec, z, w);
}

SeriesValue dunkl_kernel(const std::vector<cplx>& z, const std::vector<cplx>& w, const MultiplicityParam& p,
                         double tol) {
  SeriesSpec s;
  s.param = p;
  s.tolerance = tol;
  return eval_pKq(s, z, w);
}

SeriesValue bessel_J(const std::vector<cplx>& z, const std::vector<cplx>& w, const MultiplicityParam& p,
                     double tol) {
  SeriesSpec s;
  s.param = p;
  s.tolerance = tol;
  return eval_pFq(s, z, w);
}

cplx NumericPoly::eval(const double* x) const {
  cplx s = 0.0;
  for (const auto& [e, c] : terms) {
    double m = 1.0;
    for (int i = 0; i < n; ++i) m *= std::pow(x[i], e[i]);
    s += c * m;
  }
  return s;
}

int NumericPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e.total(n));
  return d;
}

NumericPoly to_numeric(const QPoly& p) {
  NumericPoly out;
  out.n = p.n();
  for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, cplx(c.get_d(), 0.0));
  return out;
}

NumericPoly series_in_x(SeriesKind kind, const SeriesSpec& spec, const std::vector<cplx>& w, int D) {
  validate_series_spec(spec);
  const int n = spec.param.n;
  if (static_cast<int>(w.size()) != n) throw DimensionError("series argument must have length n");
  auto table = numeric_table(spec.param);
  table->ensure(D);
  const auto pw = power_table(std::vector<xcplx>(w.begin(), w.end()), D);
  std::map<Exponent, xcplx> acc;
  for (int m = 0; m <= D; ++m) {
    const NumLevel& lv = table->level(m);
    const xreal inv_fact = std::exp(-std::lgamma(m + 1.0L));
    const auto& entries = kind == SeriesKind::K ? lv.L : lv.C;
    for (const auto& e : entries) {
      const xcplx c = coefficient_ratio(spec, lv.partitions[static_cast<std::size_t>(e.partition)]) *
                      eval_terms(e.terms, pw) * inv_fact / e.at_one;
      for (const auto& [ex, v] : e.terms) acc[ex] += c * v;
    }
  }
  NumericPoly out;
  out.n = n;
  for (const auto& [e, c] : acc)
    if (c != xcplx(0.0L, 0.0L)) out.terms.emplace_back(e, cplx(static_cast<double>(c.real()), static_cast<double>(c.imag())));
  return out;
}

int series_degree_for_region(const SeriesSpec& spec, double w_norm, double R, double decay, double eps) {
  const int Dmax = spec.max_degree > 0 ? spec.max_degree : default_max_degree(spec.param.n);
  TailBounder tb(spec);
  constexpr int kGrid = 128;
  for (int D = 0; D <= Dmax; ++D) {
    bool ok = true;
    for (int i = 0; i < kGrid && ok; ++i) {
      const double r0 = R * i / kGrid, r1 = R * (i + 1) / kGrid;
      ok = tb.tail(D, w_norm * r1) * std::exp(-decay * r0) <= eps;
    }
    if (ok) return D;
  }
  throw SeriesConvergenceError("integrand series needs a degree above " + std::to_string(Dmax));
}

}  // namespace jackdunkl
