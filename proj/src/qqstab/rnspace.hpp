/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qqstab/distributions.hpp"
#include "qqstab/tnorms.hpp"
#include "qqstab/vec.hpp"

namespace qqstab::rn {

/// mu of the induced random normed space: t/(t + ||x||).
/// Throws std::domain_error for t <= 0.
double induced_mu(const Vector& x, double t);

/// A random normed space over real coordinate vectors: a t-norm plus the map
/// x -> mu_x in D+. The axioms are
///   RN1: mu_x = eps0 iff x = 0
///   RN2: mu_{ax}(t) = mu_x(t/|a|) for a != 0
///   RN3: mu_{x+y}(t+s) >= T(mu_x(t), mu_y(s))
struct RnSpace {
  tnorms::TNormKind tnorm = tnorms::TNormKind::Minimum;
  std::function<dist::DistFn(const Vector&)> mu;

  /// The induced space mu_x = RationalControl(||x||); complete over R^d.
  static RnSpace induced(tnorms::TNormKind kind);
  /// Test fixture violating RN2: mu_x ignores the norm (RationalControl(1)
  /// for every x != 0), so rescaling by |a| != 1 is not tracked.
  static RnSpace broken_rn2(tnorms::TNormKind kind);
  /// Test fixture violating RN1: mu_x = eps0 for every x.
  static RnSpace const_eps0(tnorms::TNormKind kind);
};

/// One axiom violation with its witness, serializable as a CSV row
/// "axiom,witness,magnitude" (the witness uses ';' separators internally).
struct AxiomViolation {
  std::string axiom;    ///< "RN1" | "RN2" | "RN3"
  std::string witness;  ///< sample index and the offending tuple
  double magnitude = 0.0;
};

/// Seeded fuzz over (x, y, alpha, t, s) tuples; returns every violation found
/// (empty = pass). Sample i derives its generator state from seed + i, so the
/// result set is independent of evaluation order. Coordinates are uniform in
/// [-10,10], t and s log-uniform in [1e-3,1e3], alpha uniform in [-4,4]\{0}.
/// RN3 uses the space's own t-norm. A deterministic x = 0 probe for RN1 is
/// included once per run.
std::vector<AxiomViolation> check_axioms(const RnSpace& space,
                                         std::size_t sample_count,
                                         std::uint64_t seed,
                                         std::size_t dimension = 1);

/// Indexed vector sequence, n >= 1.
using VectorSequence = std::function<Vector(std::uint64_t)>;

struct ConvergenceReport {
  bool holds = false;
  std::uint64_t first_n = 0;  ///< least N making the tail condition hold
};

/// Probabilistic convergence: true iff some N <= horizon has
/// mu_{x_n - x}(eps) > 1 - lambda for every n in [N, horizon].
ConvergenceReport seq_convergent(const RnSpace& space,
                                 const VectorSequence& seq, const Vector& x,
                                 double eps, double lambda,
                                 std::uint64_t horizon);

/// Probabilistic Cauchy test over pairs n >= m >= N up to the horizon.
ConvergenceReport seq_cauchy(const RnSpace& space, const VectorSequence& seq,
                             double eps, double lambda, std::uint64_t horizon);

/// Continuity diagnostic: max over tgrid of |mu_{x_horizon}(t) - mu_x(t)|.
/// The caller asserts the deviation against its own tolerance.
double mu_continuity_check(const RnSpace& space, const VectorSequence& seq,
                           const Vector& x, std::span<const double> tgrid,
                           std::uint64_t horizon);

}  // namespace qqstab::rn
