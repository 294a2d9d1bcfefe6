#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tlift/pointlin.hpp"

namespace tlift {

inline constexpr double kFdStep = 1e-5;  // central Wirtinger differences
inline constexpr uint64_t kDefaultSeed = 0xC0FFEE;

/// Deterministic generic sample points: seeded pseudo-random draws from the
/// disc |z - (0.5 + 0.3i)| < 1.  Point k is a pure function of (seed, k).
struct GenericSampler {
  uint64_t seed = kDefaultSeed;
  cplx point(int k) const;
};

/// Run `f` at generic points, redrawing (max 8 tries) when a pole or rank
/// drop is hit.  `f` may throw PoleError / GenericPointError to request a redraw.
template <typename F>
auto generic_eval(const GenericSampler& s, F&& f, int offset = 0) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f(s.point(offset + attempt));
    } catch (const PoleError&) {
      if (attempt >= 7) throw;
    } catch (const GenericPointError&) {
      if (attempt >= 7) throw;
    }
  }
}

/// Central Wirtinger finite differences of a matrix-valued map.
Mat fd_dz(const std::function<Mat(cplx)>& f, cplx z, double h = kFdStep);
Mat fd_dzbar(const std::function<Mat(cplx)>& f, cplx z, double h = kFdStep);

/// Rank-k moving subbundle of the trivial bundle C^n, presented by a spanning
/// evaluator.  Meromorphic generators give exact z-derivatives; derived
/// (pointwise) bundles fall back to finite differences of the projector.
class MovingSubbundle {
 public:
  MovingSubbundle() = default;

  static MovingSubbundle from_generators(std::vector<MeroVec> gens,
                                         GenericSampler s = {});
  static MovingSubbundle from_constant(const Mat& columns);
  static MovingSubbundle from_evaluator(int n, std::function<Mat(cplx)> span,
                                        GenericSampler s = {});
  /// Evaluator plus an exact projector-derivative evaluator.
  static MovingSubbundle from_evaluator_dp(int n, std::function<Mat(cplx)> span,
                                           std::function<Mat(cplx)> dproj,
                                           GenericSampler s = {});
  static MovingSubbundle zero(int n);
  static MovingSubbundle full(int n);

  int n() const { return n_; }
  int generic_rank() const { return rank_; }
  bool is_zero() const { return rank_ == 0; }
  const std::vector<MeroVec>& generators() const { return gens_; }
  bool has_exact_dproj() const { return static_cast<bool>(dproj_); }

  Mat span_at(cplx z) const;
  Frame frame_at(cplx z) const;  // GenericPointError on rank drop
  Mat projector_at(cplx z) const;
  Mat dproj_at(cplx z) const;      // exact when available, else FD
  Mat dbar_proj_at(cplx z) const;  // adjoint of dproj (P Hermitian)

  // Derived bundles.  Exact derivative data propagates where a closed rule exists.
  MovingSubbundle conjugated() const;  // pointwise complex conjugate
  MovingSubbundle orth_complement() const;
  MovingSubbundle conj_perp() const;  // conj(X)^perp
  MovingSubbundle quat_image() const; // J X, n even

  GenericSampler sampler() const { return sampler_; }

 private:
  void stabilize_rank();
  int n_ = 0;
  int rank_ = 0;
  std::vector<MeroVec> gens_;
  std::function<Mat(cplx)> span_;
  std::function<Mat(cplx)> dproj_;  // may be empty
  GenericSampler sampler_;
};

/// Orthogonal direct sum (operands assumed pointwise orthogonal).
MovingSubbundle direct_sum(const MovingSubbundle& a, const MovingSubbundle& b);
/// Pointwise span sum and intersection (no exact derivative data).
MovingSubbundle bundle_sum(const MovingSubbundle& a, const MovingSubbundle& b);
MovingSubbundle bundle_intersect(const MovingSubbundle& a, const MovingSubbundle& b);
/// F^perp intersect E, requiring F within E pointwise.
MovingSubbundle bundle_ominus(const MovingSubbundle& e, const MovingSubbundle& f);
/// Image of a pointwise matrix evaluator (zeros filled by rank stabilization).
MovingSubbundle image_bundle(int n, const std::function<Mat(cplx)>& op,
                             GenericSampler s = {});

/// Max over sample points of ||P_A - P_B||_2.
double bundle_distance(const MovingSubbundle& a, const MovingSubbundle& b,
                       int npoints = 5);

/// Named analytic (non-meromorphic) harmonic map fixture, stored as a
/// Grassmannian-valued subbundle with exact derivative data.
struct AnalyticMap {
  std::string name;
  MovingSubbundle bundle;
  /// Index in its harmonic sequence, when the sequence has a closed form.
  std::function<MovingSubbundle(int)> sequence_member;
};

/// The superconformal torus z -> [e^{z-zbar}, e^{zeta z - conj(zeta z)},
/// e^{zeta^2 z - conj(zeta^2 z)}] in CP^2, with its harmonic sequence.
AnalyticMap superconformal_torus();

}  // namespace tlift
