#include "tlift/rational.hpp"

#include <algorithm>
#include <cmath>

namespace tlift {

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(cplx c) {
  if (c == cplx(0)) return Poly();
  return Poly(std::vector<cplx>{c});
}

Poly Poly::variable() { return Poly(std::vector<cplx>{cplx(0), cplx(1)}); }

double Poly::max_abs() const {
  double m = 0;
  for (auto& x : c_) m = std::max(m, std::abs(x));
  return m;
}

void Poly::trim(double rel_tol) {
  double scale = max_abs();
  if (scale == 0) {
    c_.clear();
    return;
  }
  // only strip the high end; interior small coefficients stay
  while (!c_.empty() && std::abs(c_.back()) <= rel_tol * scale) c_.pop_back();
  if (static_cast<int>(c_.size()) - 1 > kMaxPolyDegree)
    throw CapacityError("polynomial degree exceeds cap 64");
}

cplx Poly::eval(cplx z) const {
  cplx acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<cplx> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * cplx(double(k));
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()), cplx(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b * cplx(-1.0); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1, cplx(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator*(cplx s) const {
  if (s == cplx(0)) return Poly();
  std::vector<cplx> c(c_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<cplx> rem = a.c_;
  std::vector<cplx> quo;
  int db = b.degree();
  cplx lead = b.leading();
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - db, cplx(0));
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int dr = static_cast<int>(rem.size()) - 1;
    cplx f = rem.back() / lead;
    quo[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
    rem.pop_back();
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly approx_gcd(Poly a, Poly b, double rel_tol) {
  double scale = std::max(a.max_abs(), b.max_abs());
  if (scale == 0) return Poly::constant(1.0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    // treat the remainder as zero once it drops below the working scale
    if (r.max_abs() <= rel_tol * std::max(1.0, b.max_abs())) {
      r = Poly();
    }
    a = b;
    b = r;
  }
  if (a.is_zero() || a.degree() == 0) return Poly::constant(1.0);
  return a * (cplx(1.0) / a.leading());
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

RatFun RatFun::from_coeffs(std::vector<cplx> num, std::vector<cplx> den) {
  return RatFun(Poly(std::move(num)), Poly(std::move(den)));
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1.0);
    return;
  }
  Poly g = approx_gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  cplx lead = den_.leading();
  num_ = num_ * (cplx(1.0) / lead);
  den_ = den_ * (cplx(1.0) / lead);
}

bool RatFun::is_pole(cplx z) const {
  double d = std::abs(den_.eval(z));
  return d < 1e-12 * std::pow(1.0 + std::abs(z), std::max(0, den_.degree()));
}

cplx RatFun::eval(cplx z) const {
  if (is_pole(z)) throw PoleError("rational function evaluated at a pole");
  return num_.eval(z) / den_.eval(z);
}

RatFun RatFun::derivative() const {
  // (n/d)' = (n'd - nd') / d^2
  Poly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RatFun(n, den_ * den_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("division by the zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator*(cplx s) const { return RatFun(num_ * s, den_); }

RatFun RatFun::operator-() const { return (*this) * cplx(-1.0); }

}  // namespace tlift
