#include "jackdunkl/jack.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "jackdunkl/serialize.hpp"

namespace jackdunkl {

JackTable::JackTable(MultiplicityParam p, int max_weight)
    : p_(std::move(p)), cap_(max_weight > 0 ? max_weight : default_weight_cap(p_.n)) {
  if (p_.n > kMaxVars) throw std::invalid_argument("n exceeds the supported variable count");
}

int JackTable::default_weight_cap(int n) {
  switch (n) {
    case 1: return 40;
    case 2: return 8;
    case 3: return 6;
    case 4: return 4;
    default: return 3;
  }
}

void JackTable::check_weight(int w) const {
  if (w > cap_) {
    throw ResourceLimitError("weight " + std::to_string(w) + " exceeds the table cap " + std::to_string(cap_) +
                             " for n=" + std::to_string(p_.n));
  }
}

const QPoly& JackTable::build_E_locked(const Composition& eta) const {
  if (auto it = e_.find(eta); it != e_.end()) return it->second;
  const int n = p_.n;
  if (static_cast<int>(eta.size()) != n) throw DimensionError("composition length differs from n");
  QPoly result(n);
  const int lo = *std::min_element(eta.begin(), eta.end());
  if (lo < 0) {
    Composition shifted = eta;
    for (auto& v : shifted) v -= lo;
    result = build_E_locked(shifted).shifted(lo);
  } else {
    check_weight(weight(eta));
    if (weight(eta) == 0) {
      result = QPoly::constant(n, Rational(1));
    } else if (eta.back() > 0) {
      // eta = Phi(eta_n - 1, eta_1, ..., eta_{n-1})
      Composition hat(static_cast<std::size_t>(n));
      hat[0] = eta.back() - 1;
      for (int i = 1; i < n; ++i) hat[static_cast<std::size_t>(i)] = eta[static_cast<std::size_t>(i - 1)];
      result = raising_phi(build_E_locked(hat));
    } else {
      // Move the last nonzero part one slot right: kappa = s_i eta with kappa_i < kappa_{i+1}.
      int i = n - 1;
      while (eta[static_cast<std::size_t>(i - 1)] == 0) --i;
      Composition kappa = eta;
      std::swap(kappa[static_cast<std::size_t>(i - 1)], kappa[static_cast<std::size_t>(i)]);
      const QPoly& ek = build_E_locked(kappa);
      const EigenvalueVector kb = eta_bar(kappa, p_);
      const Rational gap = kb[static_cast<std::size_t>(i)] - kb[static_cast<std::size_t>(i - 1)];
      if (sgn(gap) == 0) throw InvariantViolation("vanishing eigenvalue gap in the exchange relation");
      result = ek.swapped(i, i + 1);
      if (sgn(p_.k) != 0) result += ek * Rational(p_.k / gap);
    }
  }
  return e_.emplace(eta, std::move(result)).first->second;
}

const QPoly& JackTable::E_ref(const Composition& eta) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return build_E_locked(eta);
}

QPoly JackTable::E(const Composition& eta) const { return E_ref(eta); }

const QPoly& JackTable::P(const Partition& lambda) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = p_tab_.find(lambda); it != p_tab_.end()) return it->second;
  if (!is_partition(lambda) || static_cast<int>(lambda.size()) != p_.n)
    throw std::invalid_argument("not a partition of length n: " + to_string(lambda));
  check_weight(weight(lambda));
  const Rational dl = dprime_scaled(lambda, p_);
  QPoly r(p_.n);
  for (const auto& eta : orbit(lambda)) r += build_E_locked(eta) * Rational(dl / dprime_scaled(eta, p_));
  return p_tab_.emplace(lambda, std::move(r)).first->second;
}

QPoly JackTable::L(const Composition& eta) const { return E_ref(eta) * c_norm(eta, p_); }

QPoly JackTable::C(const Partition& lambda) const { return P(lambda) * c_norm(lambda, p_); }

void JackTable::build_up_to(int w) const {
  check_weight(w);
  for (int m = 0; m <= w; ++m) {
    for (const auto& eta : enumerate_compositions(p_.n, m)) E_ref(eta);
    for (const auto& lam : enumerate_partitions(p_.n, m)) P(lam);
  }
}

std::vector<Composition> JackTable::stored_E() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::vector<Composition> out;
  for (const auto& kv : e_) out.push_back(kv.first);
  return out;
}

std::vector<Partition> JackTable::stored_P() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  std::vector<Partition> out;
  for (const auto& kv : p_tab_) out.push_back(kv.first);
  return out;
}

void JackTable::insert_E(const Composition& eta, QPoly poly) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  e_.insert_or_assign(eta, std::move(poly));
}

void JackTable::insert_P(const Partition& lambda, QPoly poly) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  p_tab_.insert_or_assign(lambda, std::move(poly));
}

QPoly build_E(const Composition& eta, const MultiplicityParam& p) {
  JackTable t(p, std::max(JackTable::default_weight_cap(p.n), 0));
  return t.E(eta);
}

QPoly build_P(const Partition& lambda, const MultiplicityParam& p) {
  JackTable t(p);
  return t.P(lambda);
}

Rational dprime_scaled(const Composition& eta, const MultiplicityParam& p) {
  Rational r(1);
  for (int i = 1; i <= static_cast<int>(eta.size()); ++i)
    for (int j = 1; j <= eta[static_cast<std::size_t>(i - 1)]; ++j)
      r *= Rational(eta[static_cast<std::size_t>(i - 1)] - j + 1) + p.k * leg(eta, i, j);
  return r;
}

Rational dprime(const Composition& eta, const MultiplicityParam& p) {
  if (sgn(p.k) == 0) throw std::domain_error("d'_eta requires k > 0");
  Rational kw(1);
  for (int t = 0; t < weight(eta); ++t) kw *= p.k;
  return dprime_scaled(eta, p) / kw;
}

Rational c_norm(const Composition& eta, const MultiplicityParam& p) {
  return factorial(weight(eta)) / dprime_scaled(eta, p);
}

Rational eval_E_at_one(const Composition& eta, const MultiplicityParam& p) {
  const int n = static_cast<int>(eta.size());
  Rational r(1);
  for (int i = 1; i <= n; ++i) {
    const int ei = eta[static_cast<std::size_t>(i - 1)];
    const int lc = coleg(eta, i);
    for (int j = 1; j <= ei; ++j) {
      r *= Rational(j) + p.k * (n - lc);
      r /= Rational(ei - j + 1) + p.k * (leg(eta, i, j) + 1);
    }
  }
  return r;
}

Rational eval_P_at_one(const Partition& lambda, const MultiplicityParam& p) {
  const int n = static_cast<int>(lambda.size());
  if (sgn(p.k) == 0) return Rational(static_cast<long>(orbit(lambda).size()));
  Rational r(1);
  for (int i = 1; i <= n; ++i) {
    const int li = lambda[static_cast<std::size_t>(i - 1)];
    const int lc = coleg(lambda, i);
    for (int j = 1; j <= li; ++j) {
      r *= Rational(j - 1) + p.k * (n - lc);
      r /= Rational(li - j) + p.k * (leg(lambda, i, j) + 1);
    }
  }
  return r;
}

namespace {

QPoly shift_by_one(const QPoly& p) {
  // p(x + 1) by binomial expansion per variable.
  const int n = p.n();
  QPoly r(n);
  for (const auto& [a, c] : p.terms()) {
    QPoly term = QPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      QPoly f(n);
      mpz_class binom;
      for (int t = 0; t <= a[i]; ++t) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a[i]), static_cast<unsigned long>(t));
        Exponent e;
        e[i] = static_cast<int16_t>(t);
        f.add_term(e, Rational(binom));
      }
      term = term * f;
    }
    r += term;
  }
  return r;
}

bool is_partition_exponent(const Exponent& a, int n) {
  for (int i = 0; i + 1 < n; ++i)
    if (a[i] < a[i + 1]) return false;
  return a[n - 1] >= 0;
}

}  // namespace

std::map<Partition, Rational> binomial_coeffs(const Partition& lambda, const JackTable& table) {
  const int n = table.n();
  const MultiplicityParam& p = table.param();
  QPoly rest = shift_by_one(table.P(lambda)) * Rational(1 / eval_P_at_one(lambda, p));
  std::map<Partition, Rational> row;
  while (!rest.is_zero()) {
    // Leading partition: highest degree, then lexicographically largest.
    const Exponent* best = nullptr;
    int best_deg = -1;
    for (const auto& [a, c] : rest.terms()) {
      if (!is_partition_exponent(a, n)) continue;
      const int d = a.total(n);
      if (d > best_deg || (d == best_deg && a > *best)) {
        best = &a;
        best_deg = d;
      }
    }
    if (best == nullptr) throw InvariantViolation("binomial expansion left a non-symmetric remainder");
    const Partition mu = best->to_vector(n);
    const Rational a = rest.coeff(*best);
    row[mu] = a * eval_P_at_one(mu, p);
    rest -= table.P(mu) * a;
  }
  return row;
}

QPoly monomial_symmetric(const Partition& lambda) {
  const int n = static_cast<int>(lambda.size());
  QPoly r(n);
  for (const auto& eta : orbit(lambda)) r.add_term(Exponent::from(eta), Rational(1));
  return r;
}

QPoly gram_schmidt_P(const Partition& lambda, const MultiplicityParam& p) {
  const int n = static_cast<int>(lambda.size());
  std::vector<Partition> lower;
  for (const auto& nu : enumerate_partitions(n, weight(lambda)))
    if (dominance_partition(nu, lambda) == Order::less) lower.push_back(nu);
  const QPoly ml = monomial_symmetric(lambda);
  const std::size_t m = lower.size();
  std::vector<QPoly> mons;
  for (const auto& nu : lower) mons.push_back(monomial_symmetric(nu));
  // G a = -b with G_{rs} = [m_s, m_r], b_r = [m_lambda, m_r].
  std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) g[r][s] = dunkl_pairing(mons[s], mons[r], p.k);
    g[r][m] = -dunkl_pairing(ml, mons[r], p.k);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && sgn(g[piv][col]) == 0) ++piv;
    if (piv == m) throw InvariantViolation("singular Gram matrix");
    std::swap(g[piv], g[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sgn(g[r][col]) == 0) continue;
      const Rational f = g[r][col] / g[col][col];
      for (std::size_t s = col; s <= m; ++s) g[r][s] -= f * g[col][s];
    }
  }
  QPoly res = ml;
  for (std::size_t r = 0; r < m; ++r) res += mons[r] * Rational(g[r][m] / g[r][r]);
  return res;
}

namespace {

std::string first_difference(const MuLaurent& a, const MuLaurent& b) {
  MuLaurent d = a - b;
  if (d.is_zero()) return {};
  const auto& [e, c] = *d.terms().begin();
  std::ostringstream os;
  os << "coefficient of " << MuLaurent::monomial(a.n(), e).str() << ": lhs " << a.coeff(e).str() << ", rhs "
     << b.coeff(e).str();
  return os.str();
}

VerificationReport main1_report(const std::string& name, const Composition& idx, const QPoly& poly,
                                const Composition& lam, const MultiplicityParam& p) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.identity = name;
  rep.add("n", std::to_string(p.n));
  rep.add("k", to_string(p.k));
  rep.add("index", to_string(idx));
  rep.tolerance = 0.0;
  const DeltaPowerSection one{MuLaurent::constant(p.n, MuPoly(1))};
  const MuLaurent lhs = apply_poly_of_T(poly, one, p.k).f;
  MuPoly factor = pochhammer_sym(lam, p);
  if (weight(idx) % 2 != 0) factor = -factor;
  const MuLaurent rhs = to_mu(poly.reciprocal()) * factor;
  // Display both sides at a fixed rational sample point.
  const Rational mu_s(7, 3);
  std::vector<Rational> x;
  for (int i = 0; i < p.n; ++i) x.emplace_back(i + 2);
  rep.lhs = at_mu(lhs, mu_s).eval_exact(x).get_d();
  rep.rhs = at_mu(rhs, mu_s).eval_exact(x).get_d();
  rep.detail = first_difference(lhs, rhs);
  rep.relError = rep.detail.empty() ? 0.0 : 1.0;
  rep.pass = rep.detail.empty();
  rep.runtimeMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

VerificationReport verify_main1(const Composition& eta, const JackTable& table) {
  if (!is_nonnegative(eta)) throw std::invalid_argument("main1 needs eta in N_0^n");
  return main1_report("main1", eta, table.E_ref(eta), eta_plus(eta), table.param());
}

VerificationReport verify_main1_symmetric(const Partition& lambda, const JackTable& table) {
  return main1_report("main1_symmetric", lambda, table.P(lambda), lambda, table.param());
}

int check_eigen_equations(const Composition& eta, const QPoly& e, const MultiplicityParam& p) {
  const EigenvalueVector ev = eta_bar(eta, p);
  for (int j = 1; j <= p.n; ++j)
    if (!(cherednik_D(j, e, p.k) == e * ev[static_cast<std::size_t>(j - 1)])) return j;
  return 0;
}

namespace {

nlohmann::ordered_json entries_json(const JackTable& t) {
  nlohmann::ordered_json body;
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& eta : t.stored_E()) {
    nlohmann::ordered_json e;
    e["eta"] = eta;
    e["poly"] = to_json(t.E_ref(eta));
    es.push_back(std::move(e));
  }
  nlohmann::ordered_json ps = nlohmann::ordered_json::array();
  for (const auto& lam : t.stored_P()) {
    nlohmann::ordered_json e;
    e["lambda"] = lam;
    e["poly"] = to_json(t.P(lam));
    ps.push_back(std::move(e));
  }
  body["E"] = std::move(es);
  body["P"] = std::move(ps);
  return body;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

}  // namespace

std::string serialize_table(const JackTable& table) {
  const nlohmann::ordered_json body = entries_json(table);
  nlohmann::ordered_json j;
  j["formatVersion"] = kCacheFormatVersion;
  j["n"] = table.n();
  j["k"] = to_string(table.k());
  j["maxWeight"] = table.max_weight();
  j["checksum"] = hex64(fnv1a(body.dump()));
  j["E"] = body["E"];
  j["P"] = body["P"];
  return j.dump(1) + "\n";
}

void save_table(const JackTable& table, const std::string& path) {
  const std::string text = serialize_table(table);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp);
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw CacheError("cannot move cache file into place: " + path);
}

std::unique_ptr<JackTable> parse_table(const std::string& text, const MultiplicityParam& expected,
                                       std::uint64_t seed, int spot_checks) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache file: ") + e.what());
  }
  try {
    if (j.at("formatVersion").get<int>() != kCacheFormatVersion)
      throw CacheError("cache format version mismatch");
    const int n = j.at("n").get<int>();
    const Rational k = parse_rational(j.at("k").get<std::string>());
    if (n != expected.n || k != expected.k)
      throw CacheError("cache key mismatch: file has n=" + std::to_string(n) + ", k=" + to_string(k) +
                       ", requested n=" + std::to_string(expected.n) + ", k=" + to_string(expected.k));
    nlohmann::ordered_json body;
    body["E"] = j.at("E");
    body["P"] = j.at("P");
    if (hex64(fnv1a(body.dump())) != j.at("checksum").get<std::string>()) throw CacheError("cache checksum mismatch");
    auto table = std::make_unique<JackTable>(expected, j.at("maxWeight").get<int>());
    std::vector<Composition> etas;
    for (const auto& e : j.at("E")) {
      Composition eta = e.at("eta").get<Composition>();
      table->insert_E(eta, qpoly_from_json(n, e.at("poly")));
      etas.push_back(std::move(eta));
    }
    for (const auto& e : j.at("P")) table->insert_P(e.at("lambda").get<Partition>(), qpoly_from_json(n, e.at("poly")));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < spot_checks && !etas.empty(); ++s) {
      const auto& eta = etas[std::uniform_int_distribution<std::size_t>(0, etas.size() - 1)(rng)];
      if (check_eigen_equations(eta, table->E_ref(eta), expected) != 0)
        throw CacheError("spot re-verification failed for E" + to_string(eta));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache entry: ") + e.what());
  }
}

std::unique_ptr<JackTable> load_table(const std::string& path, const MultiplicityParam& expected, std::uint64_t seed,
                                      int spot_checks) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), expected, seed, spot_checks);
}

}  // namespace jackdunkl
