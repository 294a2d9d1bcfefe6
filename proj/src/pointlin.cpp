#include "tlift/pointlin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace tlift {

Frame orthonormalize(const Mat& columns, double tol) {
  if (columns.cols() == 0) return Frame{Mat(columns.rows(), 0)};
  Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > tol * smax && s[i] > 0) ++r;
  if (smax == 0) r = 0;
  return Frame{svd.matrixU().leftCols(r)};
}

Frame frame_from_vectors(const std::vector<Vec>& vs, double tol) {
  if (vs.empty()) return Frame{Mat(0, 0)};
  Mat m(vs.front().size(), vs.size());
  for (size_t i = 0; i < vs.size(); ++i) m.col(i) = vs[i];
  return orthonormalize(m, tol);
}

Mat projector(const Frame& f) {
  if (f.rank() == 0) return Mat::Zero(f.n(), f.n());
  double res = (f.basis.adjoint() * f.basis - Mat::Identity(f.rank(), f.rank())).norm();
  if (res > 1e-8) throw ContractError("frame is not orthonormal", res);
  return f.basis * f.basis.adjoint();
}

Mat complement(const Mat& p) { return Mat::Identity(p.rows(), p.cols()) - p; }

Mat projector_of_span(const Mat& columns, double tol) {
  return projector(orthonormalize(columns, tol));
}

Frame ominus(const Frame& e, const Frame& f, double tol) {
  if (f.rank() == 0) return e;
  Mat pe = e.basis * e.basis.adjoint();
  double viol = ((Mat::Identity(e.n(), e.n()) - pe) * f.basis).norm();
  if (viol > tol) throw ContractError("ominus: F is not contained in E", viol);
  Mat pf = f.basis * f.basis.adjoint();
  Mat rest = (Mat::Identity(e.n(), e.n()) - pf) * e.basis;
  Frame r = orthonormalize(rest, 1e-7);
  if (r.rank() != e.rank() - f.rank())
    throw ContractError("ominus: rank mismatch", double(r.rank()));
  return r;
}

Frame subspace_sum(const Frame& a, const Frame& b, double tol) {
  Mat m(a.n(), a.rank() + b.rank());
  m << a.basis, b.basis;
  return orthonormalize(m, tol);
}

Frame subspace_intersect(const Frame& a, const Frame& b, double tol) {
  // kernel of (I - P_A) + (I - P_B): symmetric, rank-formula-checkable
  int n = a.n();
  Mat pa = a.basis * a.basis.adjoint();
  Mat pb = b.basis * b.basis.adjoint();
  Mat s = (Mat::Identity(n, n) - pa) + (Mat::Identity(n, n) - pb);
  Eigen::SelfAdjointEigenSolver<Mat> eig(s);
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (eig.eigenvalues()[i] < tol) ++r;
  return Frame{eig.eigenvectors().leftCols(r)};
}

Frame perp(const Frame& a) {
  Mat p = Mat::Identity(a.n(), a.n());
  if (a.rank() > 0) p -= a.basis * a.basis.adjoint();
  return orthonormalize(p, 0.5);  // eigenvalues are ~0 or ~1
}

Frame kernel(const Mat& m, double tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (smax > 0 && s[i] > tol * smax) ++r;
  return Frame{svd.matrixV().rightCols(m.cols() - r)};
}

Frame column_space(const Mat& m, double tol) { return orthonormalize(m, tol); }

cplx bilinear(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw DomainError("bilinear: dimension mismatch");
  return v.transpose() * w;
}

double isotropy_residual(const Frame& a) {
  double r = 0;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j)
      r = std::max(r, std::abs(bilinear(a.basis.col(i), a.basis.col(j))));
  return r;
}

double op_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

double projector_distance(const Frame& a, const Frame& b) {
  Mat pa = a.rank() ? Mat(a.basis * a.basis.adjoint()) : Mat::Zero(a.n(), a.n());
  Mat pb = b.rank() ? Mat(b.basis * b.basis.adjoint()) : Mat::Zero(b.n(), b.n());
  return op_norm(pa - pb);
}

QuatStructure QuatStructure::for_dim(int n) {
  if (n % 2 != 0) throw DomainError("quaternionic structure needs even dimension");
  return QuatStructure(n / 2);
}

Vec QuatStructure::apply(const Vec& v) const {
  if (v.size() != 2 * m) throw DomainError("quat_apply: dimension mismatch");
  Vec out(2 * m);
  out.head(m) = -v.tail(m).conjugate();
  out.tail(m) = v.head(m).conjugate();
  return out;
}

Mat QuatStructure::apply_to_columns(const Mat& cols) const {
  Mat out(cols.rows(), cols.cols());
  for (int j = 0; j < cols.cols(); ++j) out.col(j) = apply(cols.col(j));
  return out;
}

Mat QuatStructure::j0() const {
  Mat j = Mat::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = -Mat::Identity(m, m);
  j.bottomLeftCorner(m, m) = Mat::Identity(m, m);
  return j;
}

}  // namespace tlift
