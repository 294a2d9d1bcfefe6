#include "tlift/subbundle.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <random>

namespace tlift {

cplx GenericSampler::point(int k) const {
  std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (uint64_t)(k + 1));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = std::sqrt(u(rng));
  double th = 2.0 * std::numbers::pi * u(rng);
  return cplx(0.5, 0.3) + r * cplx(std::cos(th), std::sin(th));
}

Mat fd_dz(const std::function<Mat(cplx)>& f, cplx z, double h) {
  Mat dx = (f(z + h) - f(z - h)) / (2 * h);
  Mat dy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2 * h);
  return 0.5 * (dx - cplx(0, 1) * dy);
}

Mat fd_dzbar(const std::function<Mat(cplx)>& f, cplx z, double h) {
  Mat dx = (f(z + h) - f(z - h)) / (2 * h);
  Mat dy = (f(z + cplx(0, h)) - f(z - cplx(0, h))) / (2 * h);
  return 0.5 * (dx + cplx(0, 1) * dy);
}

namespace {

// Exact d/dz of the orthogonal projector onto a holomorphically-spanned
// subspace: prune to independent columns G, then dP = (I - P) G' M^{-1} G^H
// with M = G^H G.  Valid because conj(G) is z-antiholomorphic.
Mat holomorphic_dproj(const Mat& g_all, const Mat& dg_all) {
  int n = static_cast<int>(g_all.rows());
  Eigen::ColPivHouseholderQR<Mat> qr(g_all);
  qr.setThreshold(kRankTol);
  int r = static_cast<int>(qr.rank());
  if (r == 0) return Mat::Zero(n, n);
  Mat g(n, r), dg(n, r);
  for (int i = 0; i < r; ++i) {
    int c = qr.colsPermutation().indices()[i];
    g.col(i) = g_all.col(c);
    dg.col(i) = dg_all.col(c);
  }
  Mat m = g.adjoint() * g;
  Mat minv_gh = m.ldlt().solve(g.adjoint());
  Mat p = g * minv_gh;
  return (Mat::Identity(n, n) - p) * dg * minv_gh;
}

}  // namespace

void MovingSubbundle::stabilize_rank() {
  // generic rank is the max over sample points; require agreement at >= 3 draws
  int best = 0, hits = 0;
  for (int k = 0; k < 16 && hits < 3; ++k) {
    try {
      Frame f = orthonormalize(span_(sampler_.point(k)));
      if (f.rank() > best) {
        best = f.rank();
        hits = 1;
      } else if (f.rank() == best) {
        ++hits;
      }
    } catch (const PoleError&) {
    } catch (const GenericPointError&) {
    }
  }
  rank_ = best;
}

MovingSubbundle MovingSubbundle::from_generators(std::vector<MeroVec> gens,
                                                 GenericSampler s) {
  MovingSubbundle b;
  if (gens.empty()) throw DomainError("from_generators: empty generator list");
  b.n_ = gens.front().dim();
  for (auto& g : gens)
    if (g.dim() != b.n_) throw DomainError("generator ambient mismatch");
  b.gens_ = std::move(gens);
  b.sampler_ = s;
  auto gensp = std::make_shared<std::vector<MeroVec>>(b.gens_);
  std::vector<MeroVec> dgens;
  dgens.reserve(gensp->size());
  for (auto& g : *gensp) dgens.push_back(g.derivative());
  auto dgensp = std::make_shared<std::vector<MeroVec>>(std::move(dgens));
  int n = b.n_;
  b.span_ = [gensp, n](cplx z) {
    Mat m(n, gensp->size());
    for (size_t i = 0; i < gensp->size(); ++i) m.col(i) = (*gensp)[i].eval(z);
    return m;
  };
  b.dproj_ = [gensp, dgensp, n](cplx z) {
    Mat g(n, gensp->size()), dg(n, gensp->size());
    for (size_t i = 0; i < gensp->size(); ++i) {
      g.col(i) = (*gensp)[i].eval(z);
      dg.col(i) = (*dgensp)[i].eval(z);
    }
    return holomorphic_dproj(g, dg);
  };
  b.stabilize_rank();
  return b;
}

MovingSubbundle MovingSubbundle::from_constant(const Mat& columns) {
  MovingSubbundle b;
  b.n_ = static_cast<int>(columns.rows());
  Mat cols = columns;
  b.span_ = [cols](cplx) { return cols; };
  int n = b.n_;
  b.dproj_ = [n](cplx) { return Mat::Zero(n, n); };
  b.stabilize_rank();
  return b;
}

MovingSubbundle MovingSubbundle::from_evaluator(int n, std::function<Mat(cplx)> span,
                                                GenericSampler s) {
  MovingSubbundle b;
  b.n_ = n;
  b.span_ = std::move(span);
  b.sampler_ = s;
  b.stabilize_rank();
  return b;
}

MovingSubbundle MovingSubbundle::from_evaluator_dp(int n, std::function<Mat(cplx)> span,
                                                   std::function<Mat(cplx)> dproj,
                                                   GenericSampler s) {
  MovingSubbundle b;
  b.n_ = n;
  b.span_ = std::move(span);
  b.dproj_ = std::move(dproj);
  b.sampler_ = s;
  b.stabilize_rank();
  return b;
}

MovingSubbundle MovingSubbundle::zero(int n) {
  MovingSubbundle b;
  b.n_ = n;
  b.span_ = [n](cplx) { return Mat::Zero(n, 0); };
  b.dproj_ = [n](cplx) { return Mat::Zero(n, n); };
  b.rank_ = 0;
  return b;
}

MovingSubbundle MovingSubbundle::full(int n) {
  return from_constant(Mat::Identity(n, n));
}

Mat MovingSubbundle::span_at(cplx z) const {
  if (!span_) return Mat::Zero(n_, 0);
  return span_(z);
}

Frame MovingSubbundle::frame_at(cplx z) const {
  Frame f = orthonormalize(span_at(z));
  if (f.rank() < rank_)
    throw GenericPointError("rank drop at sample point");
  if (f.rank() > rank_) {
    // sampled rank beats the cached generic rank: sampling was unlucky
    throw GenericPointError("rank exceeds cached generic rank");
  }
  return f;
}

Mat MovingSubbundle::projector_at(cplx z) const {
  if (rank_ == 0) return Mat::Zero(n_, n_);
  Frame f = frame_at(z);
  return f.basis * f.basis.adjoint();
}

Mat MovingSubbundle::dproj_at(cplx z) const {
  if (dproj_) return dproj_(z);
  auto self = [this](cplx w) { return projector_at(w); };
  return fd_dz(self, z);
}

Mat MovingSubbundle::dbar_proj_at(cplx z) const {
  return dproj_at(z).adjoint();  // P = P* makes dzbar P the adjoint of dz P
}

MovingSubbundle MovingSubbundle::conjugated() const {
  MovingSubbundle b;
  b.n_ = n_;
  b.rank_ = rank_;
  b.sampler_ = sampler_;
  auto sp = span_;
  b.span_ = [sp](cplx z) { return Mat(sp(z).conjugate()); };
  if (dproj_) {
    auto dp = dproj_;
    b.dproj_ = [dp](cplx z) { return Mat(dp(z).transpose()); };
  }
  return b;
}

MovingSubbundle MovingSubbundle::orth_complement() const {
  MovingSubbundle b;
  b.n_ = n_;
  b.rank_ = n_ - rank_;
  b.sampler_ = sampler_;
  MovingSubbundle self = *this;
  b.span_ = [self](cplx z) { return perp(self.frame_at(z)).basis; };
  if (dproj_) {
    auto dp = dproj_;
    b.dproj_ = [dp](cplx z) { return Mat(-dp(z)); };
  }
  return b;
}

MovingSubbundle MovingSubbundle::conj_perp() const {
  return conjugated().orth_complement();
}

MovingSubbundle MovingSubbundle::quat_image() const {
  QuatStructure j = QuatStructure::for_dim(n_);
  Mat j0 = j.j0();
  MovingSubbundle b;
  b.n_ = n_;
  b.rank_ = rank_;
  b.sampler_ = sampler_;
  auto sp = span_;
  b.span_ = [sp, j0](cplx z) { return Mat(j0 * sp(z).conjugate()); };
  if (dproj_) {
    auto dp = dproj_;
    b.dproj_ = [dp, j0](cplx z) { return Mat(j0 * dp(z).transpose() * j0.adjoint()); };
  }
  return b;
}

MovingSubbundle direct_sum(const MovingSubbundle& a, const MovingSubbundle& b) {
  if (a.n() != b.n()) throw DomainError("direct_sum: ambient mismatch");
  int n = a.n();
  MovingSubbundle aa = a, bb = b;
  auto span = [aa, bb, n](cplx z) {
    Mat sa = aa.span_at(z), sb = bb.span_at(z);
    Mat m(n, sa.cols() + sb.cols());
    m << sa, sb;
    return m;
  };
  if (a.has_exact_dproj() && b.has_exact_dproj()) {
    auto dp = [aa, bb](cplx z) { return Mat(aa.dproj_at(z) + bb.dproj_at(z)); };
    return MovingSubbundle::from_evaluator_dp(n, span, dp, a.sampler());
  }
  return MovingSubbundle::from_evaluator(n, span, a.sampler());
}

MovingSubbundle bundle_sum(const MovingSubbundle& a, const MovingSubbundle& b) {
  if (a.n() != b.n()) throw DomainError("bundle_sum: ambient mismatch");
  int n = a.n();
  MovingSubbundle aa = a, bb = b;
  return MovingSubbundle::from_evaluator(
      n,
      [aa, bb, n](cplx z) {
        Mat sa = aa.span_at(z), sb = bb.span_at(z);
        Mat m(n, sa.cols() + sb.cols());
        m << sa, sb;
        return m;
      },
      a.sampler());
}

MovingSubbundle bundle_intersect(const MovingSubbundle& a, const MovingSubbundle& b) {
  if (a.n() != b.n()) throw DomainError("bundle_intersect: ambient mismatch");
  int n = a.n();
  MovingSubbundle aa = a, bb = b;
  return MovingSubbundle::from_evaluator(
      n,
      [aa, bb](cplx z) {
        return subspace_intersect(aa.frame_at(z), bb.frame_at(z)).basis;
      },
      a.sampler());
}

MovingSubbundle bundle_ominus(const MovingSubbundle& e, const MovingSubbundle& f) {
  if (e.n() != f.n()) throw DomainError("bundle_ominus: ambient mismatch");
  int n = e.n();
  MovingSubbundle ee = e, ff = f;
  auto span = [ee, ff](cplx z) { return ominus(ee.frame_at(z), ff.frame_at(z)).basis; };
  if (e.has_exact_dproj() && f.has_exact_dproj()) {
    auto dp = [ee, ff](cplx z) { return Mat(ee.dproj_at(z) - ff.dproj_at(z)); };
    return MovingSubbundle::from_evaluator_dp(n, span, dp, e.sampler());
  }
  return MovingSubbundle::from_evaluator(n, span, e.sampler());
}

MovingSubbundle image_bundle(int n, const std::function<Mat(cplx)>& op,
                             GenericSampler s) {
  return MovingSubbundle::from_evaluator(
      n, [op](cplx z) { return column_space(op(z)).basis; }, s);
}

double bundle_distance(const MovingSubbundle& a, const MovingSubbundle& b,
                       int npoints) {
  if (a.n() != b.n()) throw DomainError("bundle_distance: ambient mismatch");
  GenericSampler s = a.sampler();
  double d = 0;
  for (int k = 0; k < npoints; ++k) {
    double dk = generic_eval(s, [&](cplx z) {
      return op_norm(a.projector_at(z) - b.projector_at(z));
    }, 3 * k);
    d = std::max(d, dk);
  }
  return d;
}

AnalyticMap superconformal_torus() {
  const cplx zeta = std::exp(cplx(0, 2.0 * std::numbers::pi / 3.0));
  auto member = [zeta](int i) {
    auto span = [zeta, i](cplx z) {
      Mat m(3, 1);
      for (int k = 0; k < 3; ++k) {
        cplx zk = std::pow(zeta, k);
        m(k, 0) = std::pow(zeta, (i * k) % 3) * std::exp(zk * z - std::conj(zk * z));
      }
      return m;
    };
    auto dproj = [zeta, span](cplx z) {
      Mat v = span(z);
      Mat p = v * v.adjoint() / 3.0;  // components have unit modulus
      Mat d = Mat::Zero(3, 3);
      for (int k = 0; k < 3; ++k) d(k, k) = std::pow(zeta, k);
      return Mat(d * p - p * d);
    };
    return MovingSubbundle::from_evaluator_dp(3, span, dproj);
  };
  AnalyticMap m;
  m.name = "superconformal-torus-cp2";
  m.bundle = member(0);
  m.sequence_member = member;
  return m;
}

}  // namespace tlift
