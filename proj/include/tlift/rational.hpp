#pragma once

#include <complex>
#include <vector>

#include "tlift/errors.hpp"

namespace tlift {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients ascending in degree.
/// Kept trimmed: the leading coefficient is nonzero (or the vector is empty,
/// which encodes the zero polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs);
  static Poly constant(cplx c);
  static Poly variable();  // z

  const std::vector<cplx>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  cplx leading() const { return c_.empty() ? cplx(0) : c_.back(); }
  double max_abs() const;

  cplx eval(cplx z) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(cplx s) const;
  bool operator==(const Poly& o) const = default;

  /// Euclidean division; remainder coefficients below rel_tol * scale are dropped.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

  void trim(double rel_tol = 1e-14);

 private:
  std::vector<cplx> c_;
};

inline constexpr int kMaxPolyDegree = 64;
inline constexpr double kGcdRelTol = 1e-10;

/// Rational function of one complex variable.  Canonical form: gcd-reduced
/// (approximate gcd, threshold relative to max coefficient magnitude) and
/// monic denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(Poly::constant(1.0)) {}
  RatFun(Poly num, Poly den);
  static RatFun constant(cplx c) { return RatFun(Poly::constant(c), Poly::constant(1.0)); }
  static RatFun variable() { return RatFun(Poly::variable(), Poly::constant(1.0)); }
  static RatFun from_coeffs(std::vector<cplx> num, std::vector<cplx> den = {cplx(1.0)});

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  cplx eval(cplx z) const;         // throws PoleError at poles
  bool is_pole(cplx z) const;
  RatFun derivative() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);  // DomainError if b == 0
  RatFun operator*(cplx s) const;
  RatFun operator-() const;

 private:
  void reduce();
  Poly num_, den_;
};

/// Approximate monic gcd by the Euclidean algorithm with relative cutoff.
Poly approx_gcd(Poly a, Poly b, double rel_tol = kGcdRelTol);

}  // namespace tlift
