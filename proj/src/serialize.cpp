#include "tlift/serialize.hpp"

#include <string>

namespace tlift {

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

json to_json(const Poly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const RatFun& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const MeroVec& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(to_json(v[i]));
  return a;
}

json to_json(const LaurentSection& s) {
  json o = json::object();
  for (auto& [e, m] : s.terms()) o[std::to_string(e)] = to_json(m);
  return o;
}

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("complex scalar must be [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

Poly poly_from_json(const json& j) {
  std::vector<cplx> c;
  for (auto& e : j) c.push_back(cplx_from_json(e));
  return Poly(std::move(c));
}

RatFun ratfun_from_json(const json& j) {
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(1.0);
  return RatFun(poly_from_json(j.at("num")), den);
}

MeroVec merovec_from_json(const json& j) {
  std::vector<RatFun> c;
  for (auto& e : j) c.push_back(ratfun_from_json(e));
  return MeroVec(std::move(c));
}

LaurentSection laurent_from_json(const json& j) {
  std::map<int, MeroVec> t;
  int n = 0;
  for (auto& [key, val] : j.items()) {
    MeroVec m = merovec_from_json(val);
    n = m.dim();
    t.emplace(std::stoi(key), std::move(m));
  }
  return LaurentSection(n, std::move(t));
}

}  // namespace tlift
