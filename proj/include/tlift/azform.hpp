#pragma once

#include <optional>

#include "tlift/subbundle.hpp"

namespace tlift {

/// Pointwise evaluator for a bundle endomorphism of C^n (A_z, A_zbar, second
/// fundamental forms, ...).
struct BundleEndo {
  int n = 0;
  std::function<Mat(cplx)> eval;
  Mat at(cplx z) const { return eval(z); }
  /// A_zbar = -(A_z)^* for unitary-frame pullbacks.
  Mat bar_at(cplx z) const { return -eval(z).adjoint(); }
};

/// A_z of the Cartan embedding of a Grassmannian-valued subbundle:
/// A_z = P (dP) P_perp - P_perp (dP) P = -(A'_phi (+) A'_{phi_perp}).
BundleEndo az_of_subbundle(const MovingSubbundle& phi);

/// A_z = 1/2 U^{-1} dU for a unitary-valued map (finite differences unless an
/// exact derivative evaluator is supplied).
BundleEndo az_of_unitary(int n, std::function<Mat(cplx)> u,
                         std::function<Mat(cplx)> du = nullptr);

/// partial' second fundamental form A'_{phi,psi}: v -> pi_psi(d_z v) as an n x n
/// matrix supported on phi.  ContractError if phi and psi are not orthogonal.
Mat sff_at(const MovingSubbundle& phi, const MovingSubbundle& psi, cplx z,
           bool antiholomorphic = false);
/// Max of ||A'_{phi,psi}|| over sample points.
double sff_norm(const MovingSubbundle& phi, const MovingSubbundle& psi,
                int npoints = 3, bool antiholomorphic = false);

/// partial'- or partial''-Gauss transform, iterated.  Images are filled out by
/// rank stabilization; known harmonic sequences (osculating curves, analytic
/// fixtures) advance along the sequence after a pointwise cross-check.
MovingSubbundle gauss_transform(const MovingSubbundle& phi, int direction,
                                int iterations = 1);
MovingSubbundle gauss_transform(const AnalyticMap& phi, int direction,
                                int iterations = 1);

/// Holomorphic line (rank-1 meromorphic bundle) whose Gauss transforms follow
/// the osculating flag h_(i) ominus h_(i-1); exact derivatives throughout.
MovingSubbundle osculating_space(const MeroVec& curve, int order);
MovingSubbundle harmonic_sequence_member(const MeroVec& curve, int i);

struct PredicateReport {
  bool is_harmonic = false;
  std::optional<int> nilconformal_r;  // least r with (A_z)^r ~ 0, up to n
  bool is_strongly_conformal = false;
  bool is_holomorphic = false;
  bool is_antiholomorphic = false;
  double harmonic_residual = 0;
  double strong_conf_residual = 0;
  double holo_residual = 0;
  double antiholo_residual = 0;
};

/// Structural predicates evaluated over a sampled grid (poles redrawn).
PredicateReport predicates(const MovingSubbundle& phi, double tol_fd = 1e-6,
                           double tol_span = 1e-8);

/// Residual of the harmonic map equation dbar(A_z) + [A_zbar, A_z] = 0.
double harmonicity_residual(const BundleEndo& az, const GenericSampler& s,
                            int npoints = 4);

/// Uniton test: alpha holomorphic for D^phi_zbar and closed under A_z.
struct UnitonCheck {
  double holo_residual;
  double closure_residual;
  bool pass(double tol = 1e-6) const {
    return holo_residual < tol && closure_residual < tol;
  }
};
UnitonCheck check_uniton(const BundleEndo& az, const MovingSubbundle& alpha,
                         int npoints = 3);

/// Nilpotency order at generic points: least r <= rmax with ||(A_z)^r|| < tol.
std::optional<int> nilpotency_order(const BundleEndo& az, int rmax,
                                    const GenericSampler& s, double tol = 1e-8);

}  // namespace tlift
