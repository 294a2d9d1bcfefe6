#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tlift/errors.hpp"
#include "tlift/merovec.hpp"

namespace tlift {

inline constexpr double kRankTol = 1e-9;       // relative to sigma_max
inline constexpr double kIntersectTol = 1e-8;  // eigenvalue cutoff

/// Orthonormal frame: columns span a subspace of C^n.  A zero-column matrix
/// encodes the zero subspace.
struct Frame {
  Mat basis;  // n x k, orthonormal columns
  int n() const { return static_cast<int>(basis.rows()); }
  int rank() const { return static_cast<int>(basis.cols()); }
};

/// SVD-based orthonormalization; rank = number of singular values > tol * sigma_max.
Frame orthonormalize(const Mat& columns, double tol = kRankTol);
Frame frame_from_vectors(const std::vector<Vec>& vs, double tol = kRankTol);

/// Hermitian projector onto the span of an orthonormal frame.
Mat projector(const Frame& f);
Mat complement(const Mat& p);
/// Projector directly from a (possibly dependent) spanning matrix.
Mat projector_of_span(const Mat& columns, double tol = kRankTol);

/// Orthogonal complement of F inside E (requires span F within span E).
Frame ominus(const Frame& e, const Frame& f, double tol = 1e-7);

Frame subspace_sum(const Frame& a, const Frame& b, double tol = kRankTol);
Frame subspace_intersect(const Frame& a, const Frame& b, double tol = kIntersectTol);
/// Full orthogonal complement in C^n.
Frame perp(const Frame& a);
/// Kernel and column space of a matrix at the given relative tolerance.
Frame kernel(const Mat& m, double tol = kRankTol);
Frame column_space(const Mat& m, double tol = kRankTol);

/// Complex symmetric bilinear form sum_i v_i w_i (no conjugation).
cplx bilinear(const Vec& v, const Vec& w);
/// Max |bilinear| over a frame-pair grid; a subspace is isotropic iff ~0.
double isotropy_residual(const Frame& a);

/// Operator 2-norm.
double op_norm(const Mat& m);
/// || P_A - P_B ||_2 for two frames.
double projector_distance(const Frame& a, const Frame& b);

/// Conjugate-linear quaternionic structure on C^{2m}:
/// J(a (+) b) = (-conj b) (+) (conj a) in the block split C^m (+) C^m.
struct QuatStructure {
  int m;
  explicit QuatStructure(int half_dim) : m(half_dim) {}
  static QuatStructure for_dim(int n);  // DomainError if n odd
  Vec apply(const Vec& v) const;
  Mat apply_to_columns(const Mat& cols) const;
  /// The constant matrix J0 with J(v) = J0 * conj(v).
  Mat j0() const;
};

}  // namespace tlift
