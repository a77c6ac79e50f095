/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qqstab/distributions.hpp"
#include "qqstab/funceq.hpp"
#include "qqstab/tnorms.hpp"
#include "qqstab/vec.hpp"

namespace qqstab::hyers {

/// How the three rho-terms of a psi-aggregate (and the two folds of the
/// combined bound) are joined. Literal addition is not closed on [0,1], so
/// the default folds with the ambient t-norm; ClampedSum = min(1, sum) keeps
/// the literal reading available. Reports carry both, side by side.
enum class CombinerMode { TNormFold, ClampedSum };

CombinerMode combiner_from_name(const std::string& name);
const char* combiner_name(CombinerMode mode);

/// The defect-dominating family rho: X x X -> D+.
///  - StepDefect(c):        rho_{x,y} = Step(c), a uniform defect bound
///  - ControlType(theta,p): rho_{x,y} = RationalControl(theta(||x||^p+||y||^p))
/// A degenerate scale of 0 maps to eps0 (RationalControl(0)).
struct PerturbationProfile {
  enum class Family { StepDefect, ControlType };

  Family family = Family::StepDefect;
  double c = 0.0;      ///< StepDefect bound, >= 0
  double theta = 0.0;  ///< ControlType scale, >= 0
  double p = 0.0;      ///< ControlType exponent, >= 0

  static PerturbationProfile step_defect(double c);
  static PerturbationProfile control_type(double theta, double p);

  /// The scale parameter of rho_{x,y}: c, or theta(||x||^p + ||y||^p).
  double scale(const Vector& x, const Vector& y) const;
  dist::DistFn rho(const Vector& x, const Vector& y) const;
};

/// combiner applied to a term list: t-norm fold or min(1, sum).
double combine(CombinerMode mode, tnorms::TNormKind tnorm,
               std::span<const double> terms);

/// Three-term aggregate bounding the one-step defect of the decomposed parts:
/// combiner over [rho_{x,x}(t/4), rho_{x,2x}(t), rho_{0,x}(3t/4)], t > 0.
double psi(const PerturbationProfile& rho, const Vector& x, double t,
           CombinerMode mode, tnorms::TNormKind tnorm);

/// Per-level record of a direct-method run.
struct HyersTrace {
  struct Level {
    std::uint64_t n;
    double value;  ///< rescaled approximant at this level
    double delta;  ///< |value - previous value| (0 at level 0)
  };
  std::vector<Level> levels;
  bool converged = false;        ///< last delta < tol
  bool truncated = false;        ///< stopped early on the overflow guard
  double estimated_ratio = 0.0;  ///< mean quotient of the last 3 deltas
};

struct LimitResult {
  double value = 0.0;  ///< last approximant
  HyersTrace trace;
};

/// Dyadic rescaling limit of the quadratic part: lim g(2^n x)/4^n.
/// Runs all levels n = 0..n_max (no early stop on tol; the trace is the
/// product). Stops only if a level would evaluate beyond the guard range
/// (max coordinate magnitude > guard), marking the trace truncated.
/// Requires n_max >= 2.
LimitResult quadratic_limit(const funceq::Evaluable& g, const Vector& x,
                            std::uint64_t n_max, double tol,
                            double guard = 1e12);

/// Quartic analogue: lim h(2^n x)/16^n.
LimitResult quartic_limit(const funceq::Evaluable& h, const Vector& x,
                          std::uint64_t n_max, double tol, double guard = 1e12);

/// A depth-truncated infinite t-norm fold. Truncation over-estimates the
/// infinite fold (folds are non-increasing in depth), so a verified
/// "lhs >= truncated rhs" implies the limit inequality only in the limit;
/// the last decrement is recorded so reports can show how settled it is.
struct BoundValue {
  double value = 1.0;
  double last_decrement = 0.0;
};

/// Fold over i = 1..depth of the psi-aggregate at geometrically rescaled
/// points: combiner[rho_{2^{i-1}x,2^{i-1}x}(2^i t/4), rho_{2^{i-1}x,2^i x}(2^i t),
/// rho_{0,2^{i-1}x}(3*2^i t/4)]. The fold may stop once the decrement has been
/// exactly zero for 5 consecutive terms (Minimum folds stabilize).
BoundValue bound_rhs_quadratic(const PerturbationProfile& rho, const Vector& x,
                               double t, std::uint64_t depth, CombinerMode mode,
                               tnorms::TNormKind tnorm);

/// Quartic analogue: arguments 2^{3i}t/4, 2^{3i}t, 3*2^{3i}t/4.
BoundValue bound_rhs_quartic(const PerturbationProfile& rho, const Vector& x,
                             double t, std::uint64_t depth, CombinerMode mode,
                             tnorms::TNormKind tnorm);

/// Combined bound: combiner across the two depth-truncated folds with
/// argument schedules (3*2^i t, 12*2^i t, 9*2^i t) and
/// (3*2^{3i} t, 12*2^{3i} t, 9*2^{3i} t).
BoundValue bound_rhs_combined(const PerturbationProfile& rho, const Vector& x,
                              double t, std::uint64_t depth, CombinerMode mode,
                              tnorms::TNormKind tnorm);

/// How the left side mu_{defect}(t) is modeled when verifying bounds.
///  - Step:    mu_v = Step(|v|)            (deterministic-bound reading)
///  - Induced: mu_v = RationalControl(|v|) (induced-space reading)
///  - Auto:    StepDefect profiles -> Step, ControlType -> Induced, keeping
///             the defect model and the dominating family comparable.
enum class MuModel { Auto, Step, Induced };

MuModel mu_model_from_name(const std::string& name);
const char* mu_model_name(MuModel m);

/// Grid-sampled check of the domination hypothesis: every stencil residual
/// must satisfy mu_defect >= rho_{x,y} point-wise, which is decidable exactly
/// per representation (Step(|R|) >= Step(c) iff |R| <= c; induced vs
/// RationalControl(s) iff |R| <= s; mixed representations require |R| = 0).
/// A floating-point slack of 1e-9*max(1, stencil |f| magnitude) is applied.
struct HypothesisCheck {
  bool ok = true;
  double max_excess = 0.0;  ///< max over pairs of |R| - allowed (can be < 0)
  std::uint64_t pairs = 0;
  std::string worst_witness;
};

/// One verified (x,t) cell of a bound sweep.
struct BoundReport {
  std::string bound;  ///< "quadratic" | "quartic" | "combined"
  double x = 0.0;     ///< scalar grid key (the point is x*e1)
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  CombinerMode combiner = CombinerMode::TNormFold;
  std::uint64_t depth = 0;
  double trunc_decrement = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double tol = 1e-6;
  CombinerMode combiner = CombinerMode::TNormFold;  ///< the judged mode
  tnorms::TNormKind tnorm = tnorms::TNormKind::Minimum;
  MuModel mu_model = MuModel::Auto;
  std::size_t dimension = 1;
  double guard = 1e12;
};

/// Outcome of one bound-verification sweep. Reports contain rows for both
/// combiner modes; all_pass judges only the configured one.
struct TheoremRun {
  std::string bound_kind;
  MuModel resolved_model = MuModel::Step;
  HypothesisCheck hypothesis;
  std::vector<BoundReport> reports;  ///< ordered by (x, t, mode)
  /// Least n (<= 64) at which every rescaled rho term on the grid exceeds
  /// 1 - 1e-6 (finite-depth proxy of the vanishing-perturbation conditions);
  /// -1 if not reached. Informational only.
  std::int64_t cond_proxy_n = -1;
  bool any_truncated = false;
  /// Exact-recovery assertion, only evaluated for noiseless inputs in the
  /// combined sweep: |f(x) - Q1(x) - Q2(x)| <= 1e-9 * max(1, |f(x)|).
  bool reconstruction_checked = false;
  bool reconstruction_ok = true;
  double reconstruction_max_dev = 0.0;
  bool all_pass = false;
};

/// Sweep for the quadratic part: lhs = mu of part_g(f)(x) - Q1(x) at t,
/// rhs = bound_rhs_quadratic; pass iff lhs >= rhs - 1e-9.
TheoremRun verify_quadratic_part_bound(const funceq::TestFunction& f,
                                       const PerturbationProfile& rho,
                                       std::span<const double> xgrid,
                                       std::span<const double> tgrid,
                                       std::uint64_t depth, std::uint64_t n_max,
                                       const VerifyOptions& opt = {});

/// Sweep for the quartic part: part_h(f)(x) - Q2(x) against
/// bound_rhs_quartic.
TheoremRun verify_quartic_part_bound(const funceq::TestFunction& f,
                                     const PerturbationProfile& rho,
                                     std::span<const double> xgrid,
                                     std::span<const double> tgrid,
                                     std::uint64_t depth, std::uint64_t n_max,
                                     const VerifyOptions& opt = {});

/// Combined sweep: Q1 = -quadratic_limit(part_g)/12, Q2 = quartic_limit
/// (part_h)/12; f(x) - Q1(x) - Q2(x) against bound_rhs_combined. For
/// noiseless f the reconstruction identity Q1 + Q2 = f is asserted as well.
TheoremRun verify_combined_bound(const funceq::TestFunction& f,
                                 const PerturbationProfile& rho,
                                 std::span<const double> xgrid,
                                 std::span<const double> tgrid,
                                 std::uint64_t depth, std::uint64_t n_max,
                                 const VerifyOptions& opt = {});

/// Empirical uniqueness probe: recovers the limits under each n_max schedule
/// (each both iteratively and by direct jump to the final level) and returns
/// the maximum pairwise deviation across recovered values, for the quadratic
/// and quartic limits combined.
double uniqueness_probe(const funceq::TestFunction& f, const Vector& x,
                        std::span<const std::uint64_t> schedules,
                        double tol = 1e-6, double guard = 1e12);

}  // namespace qqstab::hyers
