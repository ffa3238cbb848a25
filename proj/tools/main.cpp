#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "jackdunkl/hyperseries.hpp"
#include "jackdunkl/jack.hpp"
#include "jackdunkl/laplace.hpp"
#include "jackdunkl/report.hpp"
#include "jackdunkl/serialize.hpp"
#include "jackdunkl/suites.hpp"

namespace fs = std::filesystem;
using namespace jackdunkl;
using json = nlohmann::ordered_json;

namespace {

// Bad parameters that the option parser cannot see; reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int threads = 0;
  std::string format = "auto";
  bool timing = false;
  std::uint64_t seed = 1;
  std::string cache_dir;
  bool no_cache = false;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("JACKDUNKL_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return (fs::path(home) / ".cache" / "jackdunkl").string();
  return ".jackdunkl-cache";
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format == "auto" ? fallback : cfg.format;
}

// ------------------------------------------------------------------ parsing

std::vector<std::string> split_list(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') t += c;
  std::vector<std::string> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// "2", "1.5+0.2i", "-0.3i", "i", "3/2" (rationals are accepted for real parts).
cplx parse_cplx(const std::string& text) {
  if (text.empty()) throw UsageError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') {
    if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
    return parse_real(text);
  }
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::vector<cplx> parse_cplx_list(const std::string& text) {
  std::vector<cplx> v;
  for (const auto& s : split_list(text)) v.push_back(parse_cplx(s));
  return v;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> v;
  for (const auto& s : split_list(text)) v.push_back(parse_real(s));
  return v;
}

Rational parse_k(const std::string& text) {
  Rational k = parse_rational(text);
  if (sgn(k) < 0) throw UsageError("multiplicity k must be nonnegative");
  return k;
}

struct SeriesType {
  int p = 0, q = 0;
  SeriesKind kind = SeriesKind::F;
};

SeriesType parse_series_type(const std::string& t) {
  static const std::regex re(R"(^(\d+)([KF])(\d+)$)");
  std::smatch m;
  if (!std::regex_match(t, m, re)) throw UsageError("series type must look like 0F0, 1K0, 2F1, ...: '" + t + "'");
  return {std::stoi(m[1]), std::stoi(m[3]), m[2] == "K" ? SeriesKind::K : SeriesKind::F};
}

void check_dim(const std::vector<cplx>& v, int n, const std::string& what) {
  if (static_cast<int>(v.size()) != n)
    throw UsageError(what + " has " + std::to_string(v.size()) + " entries, expected n = " + std::to_string(n));
}

std::string cplx_str(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

double num(double v) { return std::stod(format_double(v)); }

// ------------------------------------------------------------------ tables

std::string cache_file(const RunConfig& cfg, int n, const Rational& k) {
  std::string ks = to_string(k);
  for (char& c : ks)
    if (c == '/') c = '_';
  return (fs::path(cfg.cache_dir) / ("jack_n" + std::to_string(n) + "_k" + ks + ".json")).string();
}

int working_cap(int n) { return n <= 2 ? 20 : n == 3 ? 18 : 12; }

// Loads a cached table when one covers the requested weight, otherwise builds lazily.
std::unique_ptr<JackTable> open_table(const RunConfig& cfg, const MultiplicityParam& p, int need = 0) {
  const std::string path = cache_file(cfg, p.n, p.k);
  if (!cfg.no_cache && fs::exists(path)) {
    auto t = load_table(path, p, cfg.seed);
    if (t->max_weight() >= std::max(need, 1)) return t;
  }
  return std::make_unique<JackTable>(p, std::max(need, working_cap(p.n)));
}

// ------------------------------------------------------------------ reports

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string params_str(const VerificationReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

int emit_reports(const RunConfig& cfg, const std::vector<VerificationReport>& reports) {
  const std::string fmt = resolve_format(cfg, "json");
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass;
  if (fmt == "json") {
    if (reports.size() == 1) {
      std::cout << to_json(reports[0], cfg.timing, 1) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(json::parse(to_json(r, cfg.timing)));
      std::cout << arr.dump(1) << "\n";
    }
  } else if (fmt == "csv") {
    std::cout << "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,relError,tolerance,pass\n";
    for (const auto& r : reports)
      std::cout << csv_escape(r.identity) << "," << csv_escape(params_str(r)) << "," << format_double(r.lhs.real())
                << "," << format_double(r.lhs.imag()) << "," << format_double(r.rhs.real()) << ","
                << format_double(r.rhs.imag()) << "," << format_double(r.relError) << ","
                << format_double(r.tolerance) << "," << (r.pass ? "true" : "false") << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.identity << "  " << params_str(r) << "\n"
                << "       lhs = " << cplx_str(r.lhs) << "\n       rhs = " << cplx_str(r.rhs)
                << "\n       relError = " << format_double(r.relError) << " (tolerance "
                << format_double(r.tolerance) << ")\n";
      if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
      if (cfg.timing) std::cout << "       runtime " << format_double(r.runtimeMs) << " ms\n";
    }
  }
  return ok ? 0 : 1;
}

// Re-runs a quadrature verifier at decreasing relTol and writes the sequence as CSV.
void write_convergence(const std::string& path, double final_tol, const MultiplicityParam& p,
                       const std::function<VerificationReport(const QuadratureSpec&)>& run) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "relTol,lhs_re,lhs_im,rhs_re,rhs_im,relError,quadratureError\n";
  for (double t = 1e-3; t >= final_tol * 0.999; t /= 10.0) {
    const auto r = run(QuadratureSpec::make(p, t));
    out << format_double(t) << "," << format_double(r.lhs.real()) << "," << format_double(r.lhs.imag()) << ","
        << format_double(r.rhs.real()) << "," << format_double(r.rhs.imag()) << "," << format_double(r.relError)
        << "," << format_double(r.quadratureError) << "\n";
  }
}

// ------------------------------------------------------------------ jack

struct JackArgs {
  int n = 0;
  std::string k, eta, x;
  bool symmetric = false;
  int weight = 3;
};

int cmd_jack_expand(const RunConfig& cfg, const JackArgs& a) {
  const Composition eta = parse_composition(a.eta);
  const int n = a.n ? a.n : static_cast<int>(eta.size());
  if (static_cast<int>(eta.size()) != n) throw UsageError("--eta must have n entries");
  if (a.symmetric && !is_partition(eta)) throw UsageError("--symmetric needs a weakly decreasing nonnegative --eta");
  const MultiplicityParam p(n, parse_k(a.k));
  int need = 0;
  for (int e : eta) need += std::abs(e);
  auto t = open_table(cfg, p, need * n);
  const QPoly poly = a.symmetric ? t->P(eta) : t->E(eta);
  const std::string fmt = resolve_format(cfg, "pretty");
  if (fmt == "json") {
    json j;
    j["n"] = n;
    j["k"] = to_string(p.k);
    j[a.symmetric ? "lambda" : "eta"] = eta;
    j["text"] = poly.str();
    j["poly"] = to_json(poly);
    std::cout << j.dump(1) << "\n";
  } else if (fmt == "csv") {
    std::cout << "eta,poly\n" << csv_escape(to_string(eta)) << "," << csv_escape(poly.str()) << "\n";
  } else {
    std::cout << poly.str() << "\n";
  }
  return 0;
}

int cmd_jack_eval(const RunConfig& cfg, const JackArgs& a) {
  const Composition eta = parse_composition(a.eta);
  const int n = a.n ? a.n : static_cast<int>(eta.size());
  if (static_cast<int>(eta.size()) != n) throw UsageError("--eta must have n entries");
  const MultiplicityParam p(n, parse_k(a.k));
  const auto xs = split_list(a.x);
  if (static_cast<int>(xs.size()) != n) throw UsageError("--x must have n entries");
  int need = 0;
  for (int e : eta) need += std::abs(e);
  auto t = open_table(cfg, p, need * n);
  const QPoly poly = a.symmetric ? t->P(eta) : t->E(eta);

  std::string value;
  bool exact = true;
  std::vector<Rational> xq;
  try {
    for (const auto& s : xs) xq.push_back(parse_rational(s));
  } catch (const std::invalid_argument&) {
    exact = false;
  }
  if (exact) {
    value = to_string(poly.eval_exact(xq));
  } else {
    std::vector<double> xd;
    for (const auto& s : xs) xd.push_back(parse_real(s));
    value = format_double(poly.eval<double>(xd));
  }
  const std::string fmt = resolve_format(cfg, "pretty");
  if (fmt == "json") {
    json j;
    j["n"] = n;
    j["k"] = to_string(p.k);
    j["eta"] = eta;
    j["x"] = xs;
    j["exact"] = exact;
    j["value"] = value;
    std::cout << j.dump(1) << "\n";
  } else if (fmt == "csv") {
    std::cout << "eta,x,value\n" << csv_escape(to_string(eta)) << "," << csv_escape(a.x) << "," << value << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_jack_table(const RunConfig& cfg, const JackArgs& a) {
  if (a.n < 1) throw UsageError("--n must be positive");
  if (a.weight < 0) throw UsageError("--weight must be nonnegative");
  const MultiplicityParam p(a.n, parse_k(a.k));
  auto t = open_table(cfg, p, a.weight);
  std::vector<std::pair<Composition, QPoly>> rows;
  for (int m = 0; m <= a.weight; ++m) {
    if (a.symmetric) {
      for (const auto& lam : enumerate_partitions(a.n, m)) rows.emplace_back(lam, t->P(lam));
    } else {
      for (const auto& eta : enumerate_compositions(a.n, m)) rows.emplace_back(eta, t->E(eta));
    }
  }
  const std::string fmt = resolve_format(cfg, "pretty");
  const char* sym = a.symmetric ? "P" : "E";
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& [eta, poly] : rows) {
      json j;
      j[a.symmetric ? "lambda" : "eta"] = eta;
      j["text"] = poly.str();
      arr.push_back(j);
    }
    json j;
    j["n"] = a.n;
    j["k"] = to_string(p.k);
    j["maxWeight"] = a.weight;
    j["entries"] = arr;
    std::cout << j.dump(1) << "\n";
  } else if (fmt == "csv") {
    std::cout << (a.symmetric ? "lambda" : "eta") << ",poly\n";
    for (const auto& [eta, poly] : rows) std::cout << csv_escape(to_string(eta)) << "," << csv_escape(poly.str()) << "\n";
  } else {
    for (const auto& [eta, poly] : rows) std::cout << sym << "_" << to_string(eta) << " = " << poly.str() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ series

struct SeriesArgs {
  std::string type, upper, lower, z, w, k;
  int n = 0;
  double tol = 1e-12;
  int degree = 0;
  int max_degree = 0;
};

SeriesSpec make_series(const std::string& type, const std::string& upper, const std::string& lower, int n,
                       const Rational& k, SeriesKind* kind) {
  const SeriesType st = parse_series_type(type);
  SeriesSpec s;
  s.upper = upper.empty() ? std::vector<cplx>{} : parse_cplx_list(upper);
  s.lower = lower.empty() ? std::vector<cplx>{} : parse_cplx_list(lower);
  if (s.p() != st.p || s.q() != st.q)
    throw UsageError("type " + type + " needs " + std::to_string(st.p) + " upper and " + std::to_string(st.q) +
                     " lower parameters");
  s.param = MultiplicityParam(n, k);
  if (kind) *kind = st.kind;
  return s;
}

int cmd_series_eval(const RunConfig& cfg, const SeriesArgs& a) {
  const auto z = parse_cplx_list(a.z);
  const int n = a.n ? a.n : static_cast<int>(z.size());
  check_dim(z, n, "--z");
  std::vector<cplx> w = a.w.empty() ? std::vector<cplx>(static_cast<std::size_t>(n), 1.0) : parse_cplx_list(a.w);
  check_dim(w, n, "--w");
  if (!(a.tol > 0)) throw UsageError("--tol must be positive");
  if (a.degree < 0 || a.max_degree < 0) throw UsageError("degrees must be nonnegative");
  SeriesKind kind{};
  SeriesSpec s = make_series(a.type, a.upper, a.lower, n, parse_k(a.k), &kind);
  s.tolerance = a.tol;
  s.truncation = a.degree;
  s.max_degree = a.max_degree;
  const SeriesValue v = eval_series(kind, s, z, w);

  const std::string fmt = resolve_format(cfg, "json");
  if (fmt == "json") {
    json j;
    j["type"] = a.type;
    j["value"] = num(v.value.real());
    j["valueImag"] = num(v.value.imag());
    j["tailBound"] = num(v.tailBound);
    j["termsUsed"] = v.termsUsed;
    j["degree"] = v.degree;
    j["converged"] = v.converged;
    std::cout << j.dump(1) << "\n";
  } else if (fmt == "csv") {
    std::cout << "type,value_re,value_im,tailBound,termsUsed,degree,converged\n"
              << a.type << "," << format_double(v.value.real()) << "," << format_double(v.value.imag()) << ","
              << format_double(v.tailBound) << "," << v.termsUsed << "," << v.degree << ","
              << (v.converged ? "true" : "false") << "\n";
  } else {
    std::cout << a.type << " = " << cplx_str(v.value) << "  (tail <= " << format_double(v.tailBound) << ", "
              << v.termsUsed << " terms, degree " << v.degree << (v.converged ? "" : ", NOT converged") << ")\n";
  }
  return v.converged ? 0 : 1;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  int n = 0;
  std::string k = "1/2";
  std::string eta, mu, nu, z, w, xi, type, upper, lower, mu1, nu1;
  std::string function = "inv1plus";
  std::vector<int> nus;
  bool symmetric = false;
  bool corollary = false;
  double tol = 0.0;
  double rel_tol = 0.0;
  std::string convergence;
  std::string suite = "desk";
  std::vector<int> criteria;
};

double default_tol(int n) { return n <= 2 ? 1e-5 : 1e-3; }

QuadratureSpec quad(const MultiplicityParam& p, const VerifyArgs& a) {
  return QuadratureSpec::make(p, a.rel_tol > 0 ? a.rel_tol : (p.n <= 2 ? 1e-8 : 1e-5));
}

void need(const std::string& v, const char* opt) {
  if (v.empty()) throw UsageError(std::string("missing required option ") + opt);
}

int finish_single(const RunConfig& cfg, const VerifyArgs& a, const MultiplicityParam& p,
                  const std::function<VerificationReport(const QuadratureSpec&)>& run) {
  const QuadratureSpec qs = quad(p, a);
  auto r = run(qs);
  if (!a.convergence.empty()) write_convergence(a.convergence, qs.relTol, p, run);
  return emit_reports(cfg, {r});
}

int cmd_verify_master(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.eta, "--eta");
  need(a.mu, "--mu");
  need(a.z, "--z");
  const Composition eta = parse_composition(a.eta);
  const int n = static_cast<int>(eta.size());
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  if (!is_nonnegative(eta) || (a.symmetric && !is_partition(eta)))
    throw UsageError("--eta must be nonnegative (and a partition with --symmetric)");
  const MultiplicityParam p(n, parse_k(a.k));
  const auto z = parse_cplx_list(a.z);
  check_dim(z, n, "--z");
  const cplx mu = parse_cplx(a.mu);
  const double tol = a.tol > 0 ? a.tol : default_tol(n);
  auto t = open_table(cfg, p);
  return finish_single(cfg, a, p, [&](const QuadratureSpec& qs) {
    return a.symmetric ? verify_master_symmetric(eta, mu, z, qs, *t, tol) : verify_master(eta, mu, z, qs, *t, tol);
  });
}

int cmd_verify_kadell(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.eta, "--lambda");
  need(a.mu, "--mu");
  need(a.nu, "--nu");
  const Partition lam = parse_composition(a.eta);
  const int n = static_cast<int>(lam.size());
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  if (!is_partition(lam)) throw UsageError("--lambda must be a partition");
  const MultiplicityParam p(n, parse_k(a.k));
  const cplx mu = parse_cplx(a.mu), nu = parse_cplx(a.nu);
  const double tol = a.tol > 0 ? a.tol : default_tol(n);
  auto t = open_table(cfg, p);
  return finish_single(cfg, a, p, [&](const QuadratureSpec& qs) { return verify_kadell(lam, mu, nu, qs, *t, tol); });
}

int cmd_verify_euler(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.w, "--w");
  need(a.mu1, "--mu1");
  need(a.nu1, "--nu1");
  const auto w = parse_cplx_list(a.w);
  const int n = a.n ? a.n : static_cast<int>(w.size());
  check_dim(w, n, "--w");
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  const MultiplicityParam p(n, parse_k(a.k));
  const SeriesSpec s = make_series(a.type.empty() ? "0F0" : a.type, a.upper, a.lower, n, p.k, nullptr);
  const cplx mu1 = parse_cplx(a.mu1), nu1 = parse_cplx(a.nu1);
  const double tol = a.tol > 0 ? a.tol : 1e-5;
  return finish_single(cfg, a, p, [&](const QuadratureSpec& qs) { return verify_euler(s, mu1, nu1, w, qs, tol); });
}

int cmd_verify_hyplaplace(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.z, "--z");
  need(a.w, "--w");
  const auto z = parse_cplx_list(a.z), w = parse_cplx_list(a.w);
  const int n = a.n ? a.n : static_cast<int>(z.size());
  check_dim(z, n, "--z");
  check_dim(w, n, "--w");
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  const MultiplicityParam p(n, parse_k(a.k));
  const double tol = a.tol > 0 ? a.tol : 1e-4;
  if (a.corollary) {
    need(a.mu, "--mu");
    const cplx mu = parse_cplx(a.mu);
    const SeriesKind kind = a.type.empty() ? SeriesKind::K : parse_series_type(a.type).kind;
    return finish_single(cfg, a, p, [&](const QuadratureSpec& qs) { return verify_1K0(kind, mu, z, w, p, qs, tol); });
  }
  need(a.type, "--type");
  need(a.mu1, "--mu1");
  SeriesKind kind{};
  const SeriesSpec s = make_series(a.type, a.upper, a.lower, n, p.k, &kind);
  const cplx mu1 = parse_cplx(a.mu1);
  return finish_single(cfg, a, p,
                       [&](const QuadratureSpec& qs) { return verify_hyp_laplace(kind, s, mu1, w, z, qs, tol); });
}

int cmd_verify_cherednik(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.eta, "--eta");
  need(a.mu, "--mu");
  need(a.z, "--z");
  const Composition eta = parse_composition(a.eta);
  const int n = static_cast<int>(eta.size());
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  const MultiplicityParam p(n, parse_k(a.k));
  const auto z = parse_cplx_list(a.z);
  check_dim(z, n, "--z");
  const cplx mu = parse_cplx(a.mu);
  const double tol = a.tol > 0 ? a.tol : 1e-4;
  auto t = open_table(cfg, p);
  return finish_single(cfg, a, p,
                       [&](const QuadratureSpec& qs) { return verify_macdonald_cherednik({eta}, mu, z, qs, *t, tol); });
}

struct NamedFunction {
  Integrand f;
  std::function<double(const std::vector<double>&)> exact;
};

NamedFunction named_function(const std::string& name, int n) {
  if (name == "one") return {Integrand::constant(), [](const std::vector<double>&) { return 1.0; }};
  if (name == "exp") {
    auto sum = [](const std::vector<double>& x) {
      double s = 0.0;
      for (double v : x) s += v;
      return s;
    };
    return {Integrand::function([sum](const std::vector<double>& x) { return cplx(std::exp(-sum(x))); }, -1.0),
            [sum](const std::vector<double>& x) { return std::exp(-sum(x)); }};
  }
  if (name == "inv1plus") {
    auto f = [](const std::vector<double>& x) {
      double s = 1.0;
      for (double v : x) s += v;
      return 1.0 / s;
    };
    return {Integrand::function([f](const std::vector<double>& x) { return cplx(f(x)); }), f};
  }
  (void)n;
  throw UsageError("unknown --function '" + name + "' (one, exp, inv1plus)");
}

int cmd_verify_postwidder(const RunConfig& cfg, const VerifyArgs& a) {
  need(a.xi, "--xi");
  const auto xi = parse_real_list(a.xi);
  const int n = static_cast<int>(xi.size());
  if (n > 3) throw UsageError("quadrature verifiers support n <= 3");
  for (double v : xi)
    if (!(v > 0)) throw UsageError("--xi must be positive");
  if (a.nus.empty()) throw UsageError("--nu needs at least one order");
  const MultiplicityParam p(n, parse_k(a.k));
  const NamedFunction nf = named_function(a.function, n);
  const double target = nf.exact(xi);
  const double tol = a.tol > 0 ? a.tol : 0.05;
  const QuadratureSpec qs = quad(p, a);

  std::vector<VerificationReport> reps;
  std::ofstream csv;
  if (!a.convergence.empty()) {
    csv.open(a.convergence);
    if (!csv) throw std::runtime_error("cannot write " + a.convergence);
    csv << "nu,value,target,relError\n";
  }
  double prev = INFINITY;
  for (std::size_t i = 0; i < a.nus.size(); ++i) {
    const int nu = a.nus[i];
    if (nu < 1) throw UsageError("--nu orders must be positive");
    const auto res = post_widder(nf.f, xi, nu, p, qs);
    VerificationReport r;
    r.identity = "post-widder";
    r.add("n", std::to_string(n));
    r.add("k", to_string(p.k));
    r.add("function", a.function);
    r.add("nu", std::to_string(nu));
    r.lhs = res.value;
    r.rhs = target;
    r.relError = rel_error(res.value, target);
    r.quadratureError = res.quad.change;
    // intermediate orders only need to improve; the last one must meet the tolerance
    r.tolerance = i + 1 == a.nus.size() ? tol : INFINITY;
    r.finish();
    if (!(r.relError < prev)) {
      r.pass = false;
      r.detail = "error did not decrease";
    }
    prev = r.relError;
    if (csv) csv << nu << "," << format_double(res.value.real()) << "," << format_double(target) << ","
                 << format_double(r.relError) << "\n";
    reps.push_back(std::move(r));
  }
  return emit_reports(cfg, reps);
}

int cmd_verify_all(const RunConfig& cfg, const VerifyArgs& a) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  const auto results = run_suite(a.suite, opt, a.criteria);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  const std::string fmt = resolve_format(cfg, "json");
  if (fmt == "json") {
    std::cout << suite_json(a.suite, results, cfg.timing) << "\n";
  } else if (fmt == "csv") {
    std::cout << "id,title,pass,checks,failures\n";
    for (const auto& r : results)
      std::cout << r.id << "," << csv_escape(r.title) << "," << (r.pass ? "true" : "false") << "," << r.checks << ","
                << r.failures << "\n";
  } else {
    for (const auto& r : results) std::cout << summary_line(r) << "\n";
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ cache

struct CacheArgs {
  int n = 0;
  std::string k;
  int weight = 0;
  std::string file;
};

int cmd_cache_build(const RunConfig& cfg, const CacheArgs& a) {
  if (a.n < 1) throw UsageError("--n must be positive");
  const MultiplicityParam p(a.n, parse_k(a.k));
  const int w = a.weight > 0 ? a.weight : JackTable::default_weight_cap(a.n);
  JackTable t(p, w);
  t.build_up_to(w);
  fs::create_directories(cfg.cache_dir);
  const std::string path = a.file.empty() ? cache_file(cfg, a.n, p.k) : a.file;
  save_table(t, path);
  const std::string fmt = resolve_format(cfg, "json");
  if (fmt == "json") {
    json j;
    j["file"] = path;
    j["n"] = a.n;
    j["k"] = to_string(p.k);
    j["maxWeight"] = w;
    j["entriesE"] = t.stored_E().size();
    j["entriesP"] = t.stored_P().size();
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "wrote " << path << " (" << t.stored_E().size() << " E, " << t.stored_P().size() << " P)\n";
  }
  return 0;
}

int cmd_cache_inspect(const RunConfig& cfg, const CacheArgs& a) {
  std::string path = a.file;
  if (path.empty()) {
    if (a.n < 1 || a.k.empty()) throw UsageError("give --file or both --n and --k");
    path = cache_file(cfg, a.n, parse_k(a.k));
  }
  std::ifstream in(path);
  if (!in) throw CacheError("no cache file at " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json head;
  try {
    head = json::parse(ss.str());
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache file: ") + e.what());
  }
  const MultiplicityParam p(head.value("n", 1), parse_rational(head.value("k", std::string("0"))));
  auto t = parse_table(ss.str(), p, cfg.seed);
  json j;
  j["file"] = path;
  j["formatVersion"] = head.value("formatVersion", 0);
  j["n"] = p.n;
  j["k"] = to_string(p.k);
  j["maxWeight"] = t->max_weight();
  j["checksum"] = head.value("checksum", std::string());
  j["entriesE"] = t->stored_E().size();
  j["entriesP"] = t->stored_P().size();
  j["verified"] = true;
  const std::string fmt = resolve_format(cfg, "json");
  if (fmt == "json") {
    std::cout << j.dump(1) << "\n";
  } else {
    for (const auto& [key, v] : j.items()) std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ plot

const char* kPlotScript = R"(import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent


def rows(name):
    with open(here / name, newline="") as fh:
        return list(csv.DictReader(fh))


fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))

pw = rows("postwidder.csv")
for case in sorted({r["case"] for r in pw}):
    sel = [r for r in pw if r["case"] == case]
    ax1.loglog([float(r["nu"]) for r in sel], [float(r["relError"]) for r in sel], "o-", label=case)
ax1.set_xlabel("nu")
ax1.set_ylabel("relative error")
ax1.set_title("Post-Widder inversion")
ax1.legend()

st = rows("series_tail.csv")
deg = [int(r["degree"]) for r in st]
ax2.semilogy(deg, [max(float(r["observed"]), 1e-17) for r in st], "o-", label="observed remainder")
ax2.semilogy(deg, [float(r["tailBound"]) for r in st], "s--", label="tail bound")
ax2.set_xlabel("truncation degree")
ax2.set_title("0F0 truncation")
ax2.legend()

fig.tight_layout()
fig.savefig(here / "convergence.png", dpi=150)
print("wrote", here / "convergence.png")
)";

int cmd_plot_convergence(const RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  {
    std::ofstream pw(dir / "postwidder.csv");
    if (!pw) throw std::runtime_error("cannot write into " + out_dir);
    pw << "case,nu,value,target,relError\n";
    const MultiplicityParam p1(1, Rational(0));
    const auto expo = named_function("exp", 1);
    for (int nu : {5, 10, 20, 40, 80}) {
      const auto r = post_widder(expo.f, {1.0}, nu, p1, QuadratureSpec::make(p1, 1e-11));
      const double target = std::exp(-1.0);
      pw << "n=1 exp(-x)," << nu << "," << format_double(r.value.real()) << "," << format_double(target) << ","
         << format_double(rel_error(r.value, target)) << "\n";
    }
    const MultiplicityParam p2(2, Rational(1, 2));
    const auto inv = named_function("inv1plus", 2);
    for (int nu : {5, 10, 20, 40}) {
      const auto r = post_widder(inv.f, {1.0, 2.0}, nu, p2, QuadratureSpec::make(p2, 1e-8));
      pw << "n=2 k=1/2 1/(1+x1+x2)," << nu << "," << format_double(r.value.real()) << ",0.25,"
         << format_double(rel_error(r.value, 0.25)) << "\n";
    }
  }
  {
    std::ofstream st(dir / "series_tail.csv");
    st << "degree,value,observed,tailBound\n";
    SeriesSpec s;
    s.param = MultiplicityParam(2, Rational(1, 2));
    const std::vector<cplx> z{1.0, 0.5}, w{1.0, 1.0};
    const double exact = std::exp(1.5);
    for (int d = 1; d <= 24; ++d) {
      s.truncation = d;
      const auto v = eval_pFq(s, z, w);
      st << d << "," << format_double(v.value.real()) << "," << format_double(std::abs(v.value - exact)) << ","
         << format_double(v.tailBound) << "\n";
    }
  }
  {
    std::ofstream py(dir / "plot_convergence.py");
    py << kPlotScript;
  }
  const std::string fmt = resolve_format(cfg, "json");
  if (fmt == "json") {
    json j;
    j["directory"] = out_dir;
    j["files"] = {"postwidder.csv", "series_tail.csv", "plot_convergence.py"};
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "wrote postwidder.csv, series_tail.csv and plot_convergence.py to " << out_dir
              << "\nrender with: python3 " << (dir / "plot_convergence.py").string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack polynomials, Dunkl operators and Dunkl-Laplace transform identities"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.cache_dir = default_cache_dir();
  app.add_option("--threads", cfg.threads, "Worker threads for quadrature (0 = automatic)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "json", "csv", "pretty"}));
  app.add_flag("--timing", cfg.timing, "Include runtimes in the output (breaks byte reproducibility)");
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling");
  app.add_option("--cache-dir", cfg.cache_dir, "Cache directory (default $JACKDUNKL_CACHE_DIR or ~/.cache/jackdunkl)");
  app.add_flag("--no-cache", cfg.no_cache, "Ignore cached tables");

  std::function<int()> action;

  // jack
  JackArgs ja;
  auto* jack = app.add_subcommand("jack", "Non-symmetric and symmetric Jack polynomials");
  jack->require_subcommand(1);
  auto jack_common = [&](CLI::App* c, bool need_eta) {
    c->add_option("--n", ja.n, "Number of variables (defaults to the length of --eta)");
    c->add_option("--k", ja.k, "Multiplicity k as p/q")->required();
    if (need_eta) c->add_option("--eta", ja.eta, "Composition, e.g. 0,1 (or a partition with --symmetric)")->required();
    c->add_flag("--symmetric", ja.symmetric, "Use the symmetric P_lambda instead of E_eta");
  };
  auto* jexp = jack->add_subcommand("expand", "Print E_eta (or P_lambda) in monomials");
  jack_common(jexp, true);
  jexp->callback([&] { action = [&] { return cmd_jack_expand(cfg, ja); }; });
  auto* jev = jack->add_subcommand("eval", "Evaluate E_eta at a point (exact for rational input)");
  jack_common(jev, true);
  jev->add_option("--x", ja.x, "Point, e.g. 1/2,3")->required();
  jev->callback([&] { action = [&] { return cmd_jack_eval(cfg, ja); }; });
  auto* jtab = jack->add_subcommand("table", "List all E_eta (or P_lambda) up to a weight");
  jack_common(jtab, false);
  jtab->add_option("--weight", ja.weight, "Largest |eta|")->check(CLI::NonNegativeNumber);
  jtab->callback([&] {
    if (ja.n < 1) throw UsageError("jack table needs --n");
    action = [&] { return cmd_jack_table(cfg, ja); };
  });

  // series
  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Jack hypergeometric series");
  series->require_subcommand(1);
  auto* sev = series->add_subcommand("eval", "Evaluate pKq or pFq with a certified tail bound");
  sev->add_option("--type", sa.type, "Series type, e.g. 0F0, 1K0, 2F1")->required();
  sev->add_option("--upper", sa.upper, "Upper parameters mu_1..mu_p");
  sev->add_option("--lower", sa.lower, "Lower parameters nu_1..nu_q");
  sev->add_option("--z", sa.z, "First argument, complex entries like 1.5+0.2i")->required();
  sev->add_option("--w", sa.w, "Second argument (default all ones)");
  sev->add_option("--n", sa.n, "Number of variables (defaults to the length of --z)");
  sev->add_option("--k", sa.k, "Multiplicity k as p/q")->required();
  sev->add_option("--tol", sa.tol, "Absolute tolerance for the truncation tail");
  sev->add_option("--degree", sa.degree, "Fixed truncation degree (0 = adaptive)");
  sev->add_option("--max-degree", sa.max_degree, "Degree cap for adaptive evaluation");
  sev->callback([&] { action = [&] { return cmd_series_eval(cfg, sa); }; });

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Numerical verification of the Laplace transform identities");
  verify->require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--k", va.k, "Multiplicity k as p/q");
    c->add_option("--tol", va.tol, "Pass tolerance on the relative error");
    c->add_option("--rel-tol", va.rel_tol, "Quadrature relative tolerance");
    c->add_option("--convergence", va.convergence, "Write a CSV convergence table to this file");
  };
  auto* vm = verify->add_subcommand("master", "Laplace transform of E_eta Delta^{mu-mu0-1}");
  common(vm);
  vm->add_option("--eta", va.eta, "Composition (a partition with --symmetric)");
  vm->add_option("--mu", va.mu, "Spectral parameter mu");
  vm->add_option("--z", va.z, "Point with positive real parts");
  vm->add_flag("--symmetric", va.symmetric, "Use P_lambda");
  vm->callback([&] { action = [&] { return cmd_verify_master(cfg, va); }; });
  auto* vk = verify->add_subcommand("kadell", "Kadell integral over the unit cube");
  common(vk);
  vk->add_option("--lambda", va.eta, "Partition");
  vk->add_option("--mu", va.mu, "Exponent mu");
  vk->add_option("--nu", va.nu, "Exponent nu");
  vk->callback([&] { action = [&] { return cmd_verify_kadell(cfg, va); }; });
  auto* ve = verify->add_subcommand("euler", "Euler integral of a hypergeometric series");
  common(ve);
  ve->add_option("--n", va.n, "Number of variables (defaults to the length of --w)");
  ve->add_option("--type", va.type, "Series type pFq (default 0F0)");
  ve->add_option("--upper", va.upper, "Upper parameters");
  ve->add_option("--lower", va.lower, "Lower parameters");
  ve->add_option("--mu1", va.mu1, "Exponent mu'");
  ve->add_option("--nu1", va.nu1, "Exponent nu'");
  ve->add_option("--w", va.w, "Series argument");
  ve->callback([&] { action = [&] { return cmd_verify_euler(cfg, va); }; });
  auto* vh = verify->add_subcommand("hyplaplace", "Laplace transform of a hypergeometric series");
  common(vh);
  vh->add_option("--n", va.n, "Number of variables (defaults to the length of --z)");
  vh->add_option("--type", va.type, "Series type pKq or pFq");
  vh->add_option("--upper", va.upper, "Upper parameters");
  vh->add_option("--lower", va.lower, "Lower parameters");
  vh->add_option("--mu1", va.mu1, "Exponent mu'");
  vh->add_option("--mu", va.mu, "Exponent mu for --corollary");
  vh->add_option("--w", va.w, "Series argument");
  vh->add_option("--z", va.z, "Laplace variable");
  vh->add_flag("--corollary", va.corollary, "Check the 1K0 closed form instead");
  vh->callback([&] { action = [&] { return cmd_verify_hyplaplace(cfg, va); }; });
  auto* vc = verify->add_subcommand("cherednik", "Laplace transform of the rational Cherednik kernel");
  common(vc);
  vc->add_option("--eta", va.eta, "Lattice point eta in Z^n");
  vc->add_option("--mu", va.mu, "Exponent mu");
  vc->add_option("--z", va.z, "Laplace variable");
  vc->callback([&] { action = [&] { return cmd_verify_cherednik(cfg, va); }; });
  auto* vp = verify->add_subcommand("postwidder", "Post-Widder inversion sequence");
  common(vp);
  vp->add_option("--xi", va.xi, "Evaluation point with positive entries");
  vp->add_option("--nu", va.nus, "Orders, e.g. --nu 5 10 20 40")->expected(1, -1);
  vp->add_option("--function", va.function, "Test function")->check(CLI::IsMember({"one", "exp", "inv1plus"}));
  vp->callback([&] { action = [&] { return cmd_verify_postwidder(cfg, va); }; });
  auto* va_all = verify->add_subcommand("all", "Run a verification suite");
  va_all->add_option("--suite", va.suite, "Suite name")->check(CLI::IsMember({"desk"}));
  va_all->add_option("--criteria", va.criteria, "Restrict to these criteria")->delimiter(',')->check(CLI::Range(1, 9));
  va_all->callback([&] { action = [&] { return cmd_verify_all(cfg, va); }; });

  // cache
  CacheArgs ca;
  auto* cache = app.add_subcommand("cache", "Jack table cache");
  cache->require_subcommand(1);
  auto* cb = cache->add_subcommand("build", "Compute a table and store it");
  cb->add_option("--n", ca.n, "Number of variables")->required();
  cb->add_option("--k", ca.k, "Multiplicity k as p/q")->required();
  cb->add_option("--weight", ca.weight, "Largest weight (default per-n cap)");
  cb->add_option("--file", ca.file, "Explicit output path");
  cb->callback([&] { action = [&] { return cmd_cache_build(cfg, ca); }; });
  auto* ci = cache->add_subcommand("inspect", "Load, re-verify and summarize a cache file");
  ci->add_option("--n", ca.n, "Number of variables");
  ci->add_option("--k", ca.k, "Multiplicity k as p/q");
  ci->add_option("--file", ca.file, "Explicit cache path");
  ci->callback([&] { action = [&] { return cmd_cache_inspect(cfg, ca); }; });

  // plot
  std::string plot_dir = "convergence";
  auto* plot = app.add_subcommand("plot", "Data files and rendering scripts");
  plot->require_subcommand(1);
  auto* pc = plot->add_subcommand("convergence", "Post-Widder and series truncation convergence");
  pc->add_option("--out", plot_dir, "Output directory");
  pc->callback([&] { action = [&] { return cmd_plot_convergence(cfg, plot_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.threads > 0) set_thread_count(cfg.threads);
    return action ? action() : 2;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and friends are parameter problems
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
