#include "jackdunkl/serialize.hpp"

namespace jackdunkl {

namespace {

nlohmann::ordered_json exp_json(const Exponent& a, int n) { return a.to_vector(n); }

Exponent exp_from(int n, const nlohmann::ordered_json& j) {
  auto v = j.get<std::vector<int>>();
  if (static_cast<int>(v.size()) != n) throw DimensionError("exponent length differs from n");
  return Exponent::from(v);
}

}  // namespace

nlohmann::ordered_json to_json(const QPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [a, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = exp_json(a, p.n());
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

QPoly qpoly_from_json(int n, const nlohmann::ordered_json& j) {
  QPoly p(n);
  for (const auto& t : j) {
    Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    p.add_term(exp_from(n, t.at("exp")), c);
  }
  return p;
}

nlohmann::ordered_json to_json(const MuLaurent& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [a, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = exp_json(a, p.n());
    nlohmann::ordered_json mu = nlohmann::ordered_json::array();
    for (const auto& q : c.coeffs()) mu.push_back(to_string(q));
    t["mu"] = std::move(mu);
    arr.push_back(std::move(t));
  }
  return arr;
}

MuLaurent mulaurent_from_json(int n, const nlohmann::ordered_json& j) {
  MuLaurent p(n);
  for (const auto& t : j) {
    std::vector<Rational> cs;
    for (const auto& s : t.at("mu")) cs.push_back(parse_rational(s.get<std::string>()));
    p.add_term(exp_from(n, t.at("exp")), MuPoly(std::move(cs)));
  }
  return p;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace jackdunkl
