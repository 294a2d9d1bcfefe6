#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "tlift/rational.hpp"

namespace tlift {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// C^n-valued meromorphic map of one complex variable, stored componentwise
/// as rational functions.
class MeroVec {
 public:
  MeroVec() = default;
  explicit MeroVec(std::vector<RatFun> comps) : c_(std::move(comps)) {}
  static MeroVec zero(int n) { return MeroVec(std::vector<RatFun>(n)); }
  static MeroVec constant(const Vec& v);
  /// Polynomial curve sum_k coeffs[k] z^k with vector coefficients.
  static MeroVec poly_curve(const std::vector<Vec>& coeffs);

  int dim() const { return static_cast<int>(c_.size()); }
  const RatFun& operator[](int i) const { return c_[i]; }
  RatFun& operator[](int i) { return c_[i]; }
  bool is_zero() const;

  Vec eval(cplx z) const;  // PoleError carries the component index
  MeroVec derivative(int k = 1) const;

  friend MeroVec operator+(const MeroVec& a, const MeroVec& b);
  friend MeroVec operator-(const MeroVec& a, const MeroVec& b);
  MeroVec operator*(const RatFun& f) const;
  MeroVec operator*(cplx s) const;

 private:
  std::vector<RatFun> c_;
};

inline constexpr int kMinLambdaExp = -16;
inline constexpr int kMaxLambdaExp = 16;

/// Finite lambda-Laurent polynomial with MeroVec coefficients: an element of
/// the algebraic model of L^2(S^1, C^n).
class LaurentSection {
 public:
  LaurentSection() = default;
  LaurentSection(int n, std::map<int, MeroVec> terms);
  static LaurentSection monomial(int exp, MeroVec v);

  int dim() const { return n_; }
  const std::map<int, MeroVec>& terms() const { return t_; }
  bool is_zero() const;

  /// Coefficient lookup P_k; zero MeroVec for absent exponents.
  MeroVec coeff(int k) const;
  /// Least exponent with nonzero coefficient.  DomainError on the zero section.
  int order() const;
  int max_exp() const;

  Vec eval(cplx z, cplx lambda) const;  // lambda must be nonzero
  LaurentSection derivative() const;    // d/dz termwise
  LaurentSection shifted(int k) const;  // multiply by lambda^k
  /// Drop exponents outside [lo, hi].
  LaurentSection truncated(int lo, int hi) const;

  friend LaurentSection operator+(const LaurentSection& a, const LaurentSection& b);
  LaurentSection operator*(cplx s) const;

 private:
  void prune();
  int n_ = 0;
  std::map<int, MeroVec> t_;
};

}  // namespace tlift
