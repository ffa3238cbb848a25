#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackdunkl/combinatorics.hpp"
#include "jackdunkl/dunkl.hpp"
#include "jackdunkl/laurent.hpp"
#include "jackdunkl/report.hpp"

namespace jackdunkl {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoized non-symmetric and symmetric Jack polynomials for fixed (n, k).
/// Construction is serialized by an internal lock; stored polynomials are
/// never modified afterwards, so returned references stay valid.
class JackTable {
 public:
  explicit JackTable(MultiplicityParam p, int max_weight = 0);

  static int default_weight_cap(int n);

  const MultiplicityParam& param() const { return p_; }
  int n() const { return p_.n; }
  const Rational& k() const { return p_.k; }
  int max_weight() const { return cap_; }

  /// E_eta, monic in x^eta. Signed eta uses E_eta = Delta^{-p} E_{eta + p 1}.
  QPoly E(const Composition& eta) const;
  const QPoly& E_ref(const Composition& eta) const;
  /// P_lambda = d'_lambda sum_{eta in S_n lambda} E_eta / d'_eta.
  const QPoly& P(const Partition& lambda) const;
  QPoly L(const Composition& eta) const;
  QPoly C(const Partition& lambda) const;

  /// Builds every E_eta with |eta| <= w and every P_lambda with |lambda| <= w.
  void build_up_to(int w) const;

  std::vector<Composition> stored_E() const;
  std::vector<Partition> stored_P() const;

  /// Inserts an externally provided entry (cache loading).
  void insert_E(const Composition& eta, QPoly poly);
  void insert_P(const Partition& lambda, QPoly poly);

 private:
  const QPoly& build_E_locked(const Composition& eta) const;
  void check_weight(int w) const;

  MultiplicityParam p_;
  int cap_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Composition, QPoly> e_;
  mutable std::map<Partition, QPoly> p_tab_;
};

QPoly build_E(const Composition& eta, const MultiplicityParam& p);
QPoly build_P(const Partition& lambda, const MultiplicityParam& p);

/// k^{|eta|} d'_eta = prod over cells of (eta_i - j + 1) + k l(eta,i,j); defined for k = 0 too.
Rational dprime_scaled(const Composition& eta, const MultiplicityParam& p);
/// d'_eta itself; needs k > 0.
Rational dprime(const Composition& eta, const MultiplicityParam& p);
/// c_eta = |eta|! / (k^{|eta|} d'_eta); the multinomial |eta|!/eta! at k = 0.
Rational c_norm(const Composition& eta, const MultiplicityParam& p);

/// Product formulas for E_eta(1) and P_lambda(1).
Rational eval_E_at_one(const Composition& eta, const MultiplicityParam& p);
Rational eval_P_at_one(const Partition& lambda, const MultiplicityParam& p);

/// Row {mu -> binom(lambda, mu)} of the generalized binomial coefficients.
std::map<Partition, Rational> binomial_coeffs(const Partition& lambda, const JackTable& table);

/// Independent construction of P_lambda: m_lambda orthogonalized under the
/// Dunkl pairing against every m_nu with nu strictly dominated by lambda.
QPoly gram_schmidt_P(const Partition& lambda, const MultiplicityParam& p);
/// Monomial symmetric function m_lambda.
QPoly monomial_symmetric(const Partition& lambda);

/// E_eta(T) Delta^{-mu} versus (-1)^{|eta|} [mu]_{eta+} E_eta(1/x) Delta^{-mu}, exactly.
VerificationReport verify_main1(const Composition& eta, const JackTable& table);
/// Symmetric variant with P_lambda.
VerificationReport verify_main1_symmetric(const Partition& lambda, const JackTable& table);

/// Versioned JSON cache.
inline constexpr int kCacheFormatVersion = 1;
void save_table(const JackTable& table, const std::string& path);
std::string serialize_table(const JackTable& table);
/// Throws CacheError on version/key mismatch, checksum failure or failed
/// spot re-verification of the eigenvalue equations.
std::unique_ptr<JackTable> load_table(const std::string& path, const MultiplicityParam& expected,
                                      std::uint64_t seed = 1, int spot_checks = 8);
std::unique_ptr<JackTable> parse_table(const std::string& text, const MultiplicityParam& expected,
                                       std::uint64_t seed = 1, int spot_checks = 8);

/// Checks D_j E = eta_bar_j E for all j; returns the first failing j or 0.
int check_eigen_equations(const Composition& eta, const QPoly& e, const MultiplicityParam& p);

}  // namespace jackdunkl
