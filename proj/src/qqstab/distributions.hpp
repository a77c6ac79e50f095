/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qqstab::dist {

/// The maximal distribution function: 0 for t <= 0, 1 for t > 0.
/// Plays the role of "distance zero with certainty".
double eps0(double t);

/// A distribution function on the extended reals: non-decreasing,
/// left-continuous, F(0) = 0, sup F = 1 for members of D+.
///
/// Three concrete representations:
///  - Step(c):            F(t) = 1 iff t > c (left-continuous jump at c)
///  - RationalControl(c): F(t) = t/(t+c) for t > 0; c = 0 degenerates to eps0
///  - GridSampled:        piecewise-linear through (0,0) and the knots,
///                        clamped to the last value beyond the last knot
class DistFn {
 public:
  enum class Kind { Step, RationalControl, GridSampled };

  /// Step function jumping at c >= 0. step(0) is eps0.
  static DistFn step(double c);
  /// t -> t/(t+c) with scale c >= 0.
  static DistFn rational_control(double c);
  /// Piecewise-linear: abscissas strictly increasing and positive, values in
  /// [0,1] (monotonicity is *not* enforced here; validate_distfn reports it).
  static DistFn grid_sampled(std::vector<double> ts, std::vector<double> vs);
  /// The maximal element, as a DistFn value.
  static DistFn eps0();

  /// Evaluates F(t); defined for all finite t (and +-infinity).
  double operator()(double t) const;

  Kind kind() const { return kind_; }
  /// Step threshold or RationalControl scale; meaningless for GridSampled.
  double param() const { return c_; }
  const std::vector<double>& knots_t() const { return ts_; }
  const std::vector<double>& knots_v() const { return vs_; }

  /// A magnitude for "large t" probes (validation evaluates at 1e9 * scale).
  double scale_hint() const;

 private:
  DistFn(Kind k, double c, std::vector<double> ts, std::vector<double> vs)
      : kind_(k), c_(c), ts_(std::move(ts)), vs_(std::move(vs)) {}

  Kind kind_;
  double c_;
  std::vector<double> ts_, vs_;
};

/// Point-wise order certificate on a sampled grid: true iff F(t) <= G(t)+1e-12
/// at every grid point. A sampled check, not a proof.
bool dist_le(const DistFn& F, const DistFn& G, std::span<const double> grid);

/// Membership diagnostics for Delta+/D+ on a sorted ascending grid:
/// monotonicity, F(0) = 0, and F(1e9 * scale) within 1e-6 of 1.
/// Empty list = no violations found.
std::vector<std::string> validate_distfn(const DistFn& F,
                                         std::span<const double> grid);

/// Default logarithmic probe grid over [1e-6, 1e6].
std::vector<double> default_log_grid();

/// Two-column CSV (header "t,value", strictly increasing t) for GridSampled.
void store_grid_csv(const DistFn& F, std::ostream& out);
DistFn load_grid_csv(std::istream& in);

}  // namespace qqstab::dist
