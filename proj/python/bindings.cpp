#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <regex>

#include "jackdunkl/gamma.hpp"
#include "jackdunkl/hyperseries.hpp"
#include "jackdunkl/jack.hpp"
#include "jackdunkl/laplace.hpp"
#include "jackdunkl/suites.hpp"

namespace py = pybind11;
using namespace jackdunkl;

namespace {

MultiplicityParam param(int n, const std::string& k) { return {n, parse_rational(k)}; }

py::list terms(const QPoly& p) {
  py::list out;
  for (const auto& [a, c] : p.terms()) {
    py::tuple e(p.n());
    for (int i = 0; i < p.n(); ++i) e[static_cast<std::size_t>(i)] = a[i];
    out.append(py::make_tuple(e, to_string(c)));
  }
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  py::dict d;
  d["identity"] = r.identity;
  d["params"] = params;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["relError"] = r.relError;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["quadratureError"] = r.quadratureError;
  d["detail"] = r.detail;
  return d;
}

std::pair<SeriesKind, SeriesSpec> series_spec(const std::string& type, std::vector<cplx> upper,
                                              std::vector<cplx> lower, int n, const std::string& k) {
  static const std::regex re(R"(^(\d+)([KF])(\d+)$)");
  std::smatch m;
  if (!std::regex_match(type, m, re)) throw std::invalid_argument("series type must look like 0F0 or 1K0");
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  if (s.p() != std::stoi(m[1]) || s.q() != std::stoi(m[3]))
    throw std::invalid_argument("parameter counts do not match the series type " + type);
  s.param = param(n, k);
  return {m[2] == "K" ? SeriesKind::K : SeriesKind::F, s};
}

}  // namespace

PYBIND11_MODULE(_jackdunkl, m) {
  m.doc() = "Jack polynomials, Jack hypergeometric series and Dunkl-Laplace transform checks";

  py::register_exception<SeriesDomainError>(m, "SeriesDomainError", PyExc_ValueError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);
  py::register_exception<CacheError>(m, "CacheError", PyExc_RuntimeError);

  m.def(
      "jack_E_str", [](const std::vector<int>& eta, const std::string& k) {
        return build_E(eta, param(static_cast<int>(eta.size()), k)).str();
      },
      py::arg("eta"), py::arg("k"), "E_eta as text, e.g. 'x2' for eta = (0, 1).");
  m.def(
      "jack_E_terms", [](const std::vector<int>& eta, const std::string& k) {
        return terms(build_E(eta, param(static_cast<int>(eta.size()), k)));
      },
      py::arg("eta"), py::arg("k"), "List of (exponent, 'p/q') pairs of E_eta.");
  m.def(
      "jack_P_str", [](const std::vector<int>& lam, const std::string& k) {
        return build_P(lam, param(static_cast<int>(lam.size()), k)).str();
      },
      py::arg("lam"), py::arg("k"));
  m.def(
      "jack_P_terms", [](const std::vector<int>& lam, const std::string& k) {
        return terms(build_P(lam, param(static_cast<int>(lam.size()), k)));
      },
      py::arg("lam"), py::arg("k"));
  m.def(
      "eval_E_at_one", [](const std::vector<int>& eta, const std::string& k) {
        return to_string(eval_E_at_one(eta, param(static_cast<int>(eta.size()), k)));
      },
      py::arg("eta"), py::arg("k"));
  m.def(
      "eigenvalues", [](const std::vector<int>& eta, const std::string& k) {
        std::vector<std::string> out;
        for (const auto& v : eta_bar(eta, param(static_cast<int>(eta.size()), k))) out.push_back(to_string(v));
        return out;
      },
      py::arg("eta"), py::arg("k"));

  m.def(
      "eval_series",
      [](const std::string& type, const std::vector<cplx>& z, const std::vector<cplx>& w, const std::string& k,
         std::vector<cplx> upper, std::vector<cplx> lower, double tol, int degree) {
        auto [kind, s] = series_spec(type, std::move(upper), std::move(lower), static_cast<int>(z.size()), k);
        s.tolerance = tol;
        s.truncation = degree;
        const SeriesValue v = eval_series(kind, s, z, w);
        py::dict d;
        d["value"] = v.value;
        d["tailBound"] = v.tailBound;
        d["termsUsed"] = v.termsUsed;
        d["degree"] = v.degree;
        d["converged"] = v.converged;
        return d;
      },
      py::arg("type"), py::arg("z"), py::arg("w"), py::arg("k"), py::arg("upper") = std::vector<cplx>{},
      py::arg("lower") = std::vector<cplx>{}, py::arg("tol") = 1e-12, py::arg("degree") = 0);
  m.def(
      "gamma_n",
      [](const std::vector<cplx>& lambda, const std::string& k) {
        return gamma_n(lambda, param(static_cast<int>(lambda.size()), k));
      },
      py::arg("lam"), py::arg("k"));

  m.def(
      "verify_main1",
      [](const std::vector<int>& eta, const std::string& k) {
        JackTable t(param(static_cast<int>(eta.size()), k));
        return report_dict(verify_main1(eta, t));
      },
      py::arg("eta"), py::arg("k"));
  m.def(
      "verify_master",
      [](const std::vector<int>& eta, cplx mu, const std::vector<cplx>& z, const std::string& k, double tol,
         double rel_tol) {
        const MultiplicityParam p = param(static_cast<int>(eta.size()), k);
        JackTable t(p, 20);
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_master(eta, mu, z, QuadratureSpec::make(p, rel_tol), t, tol);
        }
        return report_dict(r);
      },
      py::arg("eta"), py::arg("mu"), py::arg("z"), py::arg("k"), py::arg("tol") = 1e-5, py::arg("rel_tol") = 1e-8);

  m.def(
      "run_suite",
      [](const std::string& name, const std::vector<int>& criteria, std::uint64_t seed) {
        SuiteOptions opt;
        opt.seed = seed;
        std::vector<CriterionResult> res;
        {
          py::gil_scoped_release release;
          res = run_suite(name, opt, criteria);
        }
        return suite_json(name, res, false, -1);
      },
      py::arg("name") = "desk", py::arg("criteria") = std::vector<int>{}, py::arg("seed") = 1,
      "Runs a verification suite and returns its JSON summary.");
  m.def("set_thread_count", &set_thread_count, py::arg("threads"));
}
