#include "tlift/merovec.hpp"

#include <cmath>

namespace tlift {

MeroVec MeroVec::constant(const Vec& v) {
  std::vector<RatFun> c(v.size());
  for (int i = 0; i < v.size(); ++i) c[i] = RatFun::constant(v[i]);
  return MeroVec(std::move(c));
}

MeroVec MeroVec::poly_curve(const std::vector<Vec>& coeffs) {
  if (coeffs.empty()) return MeroVec();
  int n = static_cast<int>(coeffs.front().size());
  std::vector<RatFun> c(n);
  for (int i = 0; i < n; ++i) {
    std::vector<cplx> p(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) p[k] = coeffs[k][i];
    c[i] = RatFun::from_coeffs(std::move(p));
  }
  return MeroVec(std::move(c));
}

bool MeroVec::is_zero() const {
  for (auto& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

Vec MeroVec::eval(cplx z) const {
  Vec v(dim());
  for (int i = 0; i < dim(); ++i) {
    if (c_[i].is_pole(z)) throw PoleError("pole hit in component", i);
    v[i] = c_[i].eval(z);
  }
  return v;
}

MeroVec MeroVec::derivative(int k) const {
  if (k < 0) throw DomainError("negative derivative order");
  MeroVec d = *this;
  for (int j = 0; j < k; ++j)
    for (auto& f : d.c_) f = f.derivative();
  return d;
}

MeroVec operator+(const MeroVec& a, const MeroVec& b) {
  if (a.dim() != b.dim()) throw DomainError("MeroVec dimension mismatch");
  std::vector<RatFun> c(a.dim());
  for (int i = 0; i < a.dim(); ++i) c[i] = a.c_[i] + b.c_[i];
  return MeroVec(std::move(c));
}

MeroVec operator-(const MeroVec& a, const MeroVec& b) { return a + b * cplx(-1.0); }

MeroVec MeroVec::operator*(const RatFun& f) const {
  std::vector<RatFun> c(c_);
  for (auto& x : c) x = x * f;
  return MeroVec(std::move(c));
}

MeroVec MeroVec::operator*(cplx s) const {
  std::vector<RatFun> c(c_);
  for (auto& x : c) x = x * s;
  return MeroVec(std::move(c));
}

LaurentSection::LaurentSection(int n, std::map<int, MeroVec> terms)
    : n_(n), t_(std::move(terms)) {
  prune();
}

LaurentSection LaurentSection::monomial(int exp, MeroVec v) {
  int n = v.dim();
  std::map<int, MeroVec> t;
  t.emplace(exp, std::move(v));
  return LaurentSection(n, std::move(t));
}

void LaurentSection::prune() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->second.is_zero())
      it = t_.erase(it);
    else {
      if (it->second.dim() != n_) throw DomainError("LaurentSection ambient mismatch");
      if (it->first < kMinLambdaExp || it->first > kMaxLambdaExp)
        throw CapacityError("lambda exponent outside [-16, 16]");
      ++it;
    }
  }
}

bool LaurentSection::is_zero() const { return t_.empty(); }

MeroVec LaurentSection::coeff(int k) const {
  auto it = t_.find(k);
  if (it == t_.end()) return MeroVec::zero(n_);
  return it->second;
}

int LaurentSection::order() const {
  if (t_.empty()) throw DomainError("order of the zero section");
  return t_.begin()->first;
}

int LaurentSection::max_exp() const {
  if (t_.empty()) throw DomainError("max_exp of the zero section");
  return t_.rbegin()->first;
}

Vec LaurentSection::eval(cplx z, cplx lambda) const {
  if (lambda == cplx(0)) throw DomainError("lambda must be nonzero");
  Vec v = Vec::Zero(n_);
  for (auto& [k, m] : t_) v += std::pow(lambda, k) * m.eval(z);
  return v;
}

LaurentSection LaurentSection::derivative() const {
  std::map<int, MeroVec> t;
  for (auto& [k, m] : t_) t.emplace(k, m.derivative());
  return LaurentSection(n_, std::move(t));
}

LaurentSection LaurentSection::shifted(int k) const {
  std::map<int, MeroVec> t;
  for (auto& [e, m] : t_) t.emplace(e + k, m);
  return LaurentSection(n_, std::move(t));
}

LaurentSection LaurentSection::truncated(int lo, int hi) const {
  std::map<int, MeroVec> t;
  for (auto& [e, m] : t_)
    if (e >= lo && e <= hi) t.emplace(e, m);
  return LaurentSection(n_, std::move(t));
}

LaurentSection operator+(const LaurentSection& a, const LaurentSection& b) {
  if (a.n_ != b.n_) throw DomainError("LaurentSection ambient mismatch");
  std::map<int, MeroVec> t = a.t_;
  for (auto& [e, m] : b.t_) {
    auto it = t.find(e);
    if (it == t.end())
      t.emplace(e, m);
    else
      it->second = it->second + m;
  }
  return LaurentSection(a.n_, std::move(t));
}

LaurentSection LaurentSection::operator*(cplx s) const {
  std::map<int, MeroVec> t;
  for (auto& [e, m] : t_) t.emplace(e, m * s);
  return LaurentSection(n_, std::move(t));
}

}  // namespace tlift
