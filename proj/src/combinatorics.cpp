#include "jackdunkl/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackdunkl {

MultiplicityParam::MultiplicityParam(int n_, Rational k_) : k(std::move(k_)), n(n_) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (sgn(k) < 0) throw std::invalid_argument("multiplicity k must be >= 0");
}

std::string to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

int weight(const Composition& eta) { return std::accumulate(eta.begin(), eta.end(), 0); }

bool is_partition(const Composition& eta) {
  return is_nonnegative(eta) && std::is_sorted(eta.begin(), eta.end(), std::greater<>());
}

bool is_nonnegative(const Composition& eta) {
  return std::all_of(eta.begin(), eta.end(), [](int v) { return v >= 0; });
}

std::string to_string(const Composition& eta) {
  std::string s = "(";
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eta[i]);
  }
  return s + ")";
}

Composition parse_composition(const std::string& text) {
  Composition r;
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') t += c;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad composition entry '" + item + "'");
    r.push_back(v);
  }
  if (r.empty()) throw std::invalid_argument("empty composition");
  return r;
}

Partition eta_plus(const Composition& eta) {
  Partition p = eta;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

int perm_length(const Permutation& a) {
  int inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) inv += a[i] > a[j];
  return inv;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Composition act(const Permutation& sigma, const Composition& v) {
  Composition r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<std::size_t>(sigma[i])] = v[i];
  return r;
}

Permutation shortest_perm(const Composition& eta) {
  // Stable matching: equal parts keep their relative order, so no inversion
  // is spent among them.
  const std::size_t n = eta.size();
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) { return eta[a] > eta[b]; });
  // eta_plus[t] = eta[pos[t]], so w(t) = pos[t].
  return Permutation(pos.begin(), pos.end());
}

namespace {

// s_i w swaps the values i and i+1 in one-line notation.
Permutation left_mul(int i, Permutation w) {
  for (auto& v : w) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return w;
}

bool is_left_descent(int i, const Permutation& w) {
  const Permutation wi = inverse(w);
  return wi[static_cast<std::size_t>(i)] > wi[static_cast<std::size_t>(i) + 1];
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  const int n = static_cast<int>(v.size());
  int s = -1;
  for (int i = 0; i + 1 < n; ++i) {
    if (is_left_descent(i, v)) {
      s = i;
      break;
    }
  }
  if (s < 0) return perm_length(u) == 0;
  const Permutation sv = left_mul(s, v);
  if (is_left_descent(s, u)) return bruhat_leq(left_mul(s, u), sv);
  return bruhat_leq(u, sv);
}

bool bruhat_leq_tableau(const Permutation& u, const Permutation& v) {
  const std::size_t n = u.size();
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<int> a(u.begin(), u.begin() + static_cast<long>(m));
    std::vector<int> b(v.begin(), v.begin() + static_cast<long>(m));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t t = 0; t < m; ++t)
      if (a[t] > b[t]) return false;
  }
  return true;
}

Order dominance_partition(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size() || weight(mu) != weight(lambda)) return Order::incomparable;
  if (mu == lambda) return Order::equal;
  bool le = true, ge = true;
  int sm = 0, sl = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    sm += mu[i];
    sl += lambda[i];
    if (sm > sl) le = false;
    if (sm < sl) ge = false;
  }
  if (le) return Order::less;
  if (ge) return Order::greater;
  return Order::incomparable;
}

Order dominance_composition(const Composition& kappa, const Composition& eta) {
  if (kappa.size() != eta.size()) return Order::incomparable;
  if (kappa == eta) return Order::equal;
  const Partition kp = eta_plus(kappa), ep = eta_plus(eta);
  if (kp != ep) return dominance_partition(kp, ep);
  const Permutation wk = shortest_perm(kappa), we = shortest_perm(eta);
  if (bruhat_leq(we, wk)) return Order::less;
  if (bruhat_leq(wk, we)) return Order::greater;
  return Order::incomparable;
}

EigenvalueVector eta_bar(const Composition& eta, const MultiplicityParam& p) {
  const std::size_t n = eta.size();
  EigenvalueVector r(n);
  for (std::size_t j = 0; j < n; ++j) {
    int cnt = 0;
    for (std::size_t i = 0; i < j; ++i) cnt += eta[i] >= eta[j];
    for (std::size_t i = j + 1; i < n; ++i) cnt += eta[i] > eta[j];
    r[j] = Rational(eta[j]) - p.k * cnt;
  }
  return r;
}

EigenvalueVector rho(const MultiplicityParam& p) {
  EigenvalueVector r(static_cast<std::size_t>(p.n));
  for (int j = 1; j <= p.n; ++j) r[static_cast<std::size_t>(j - 1)] = -p.k / 2 * (p.n + 1 - 2 * j);
  return r;
}

int leg(const Composition& eta, int i, int j) {
  const int n = static_cast<int>(eta.size());
  if (i < 1 || i > n || j < 1 || j > eta[static_cast<std::size_t>(i - 1)])
    throw std::out_of_range("cell outside the diagram");
  const int ei = eta[static_cast<std::size_t>(i - 1)];
  int l = 0;
  for (int r = i + 1; r <= n; ++r) {
    const int er = eta[static_cast<std::size_t>(r - 1)];
    l += (j <= er && er <= ei);
  }
  for (int r = 1; r < i; ++r) {
    const int er = eta[static_cast<std::size_t>(r - 1)] + 1;
    l += (j <= er && er <= ei);
  }
  return l;
}

int coleg(const Composition& eta, int i) {
  const int n = static_cast<int>(eta.size());
  const int ei = eta[static_cast<std::size_t>(i - 1)];
  int l = 0;
  for (int r = 1; r < i; ++r) l += eta[static_cast<std::size_t>(r - 1)] >= ei;
  for (int r = i + 1; r <= n; ++r) l += eta[static_cast<std::size_t>(r - 1)] > ei;
  return l;
}

std::pair<int, int> arm_leg(const Composition& eta, int i, int j) { return {leg(eta, i, j), coleg(eta, i)}; }

MuPoly pochhammer_sym(const Composition& eta, const MultiplicityParam& p) {
  const Partition lam = eta_plus(eta);
  MuPoly r(1);
  for (std::size_t j = 0; j < lam.size(); ++j) {
    for (int t = 0; t < lam[j]; ++t) {
      Rational c0 = Rational(t) - p.k * static_cast<long>(j);
      r *= MuPoly(std::vector<Rational>{c0, Rational(1)});
    }
  }
  return r;
}

Rational pochhammer_exact(const Rational& mu, const Composition& eta, const MultiplicityParam& p) {
  const Partition lam = eta_plus(eta);
  Rational r(1);
  for (std::size_t j = 0; j < lam.size(); ++j)
    for (int t = 0; t < lam[j]; ++t) r *= mu - p.k * static_cast<long>(j) + t;
  return r;
}

std::vector<Composition> enumerate_compositions(int n, int m) {
  std::vector<Composition> out;
  Composition cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  if (m < 0) return out;
  rec(0, m);
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<Partition> enumerate_partitions(int n, int m) {
  std::vector<Partition> out;
  Partition cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int maxv) {
    if (pos == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(left, maxv); v >= 0; --v) {
      if (v * (n - pos) < left) break;
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v, v);
    }
  };
  if (m < 0) return out;
  rec(0, m, m);
  return out;
}

std::vector<Composition> orbit(const Partition& lambda) {
  std::vector<Composition> out;
  Composition c = lambda;
  std::sort(c.begin(), c.end());
  do out.push_back(c);
  while (std::next_permutation(c.begin(), c.end()));
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace jackdunkl
