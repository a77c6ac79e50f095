/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace qqstab::tnorms {

/// Continuous triangular norms on [0,1]: commutative, associative, monotone,
/// with identity 1. These model probabilistic conjunction.
enum class TNormKind { Minimum, Product, Lukasiewicz };

/// Parses "minimum" | "product" | "lukasiewicz" (case-sensitive).
/// Throws std::invalid_argument on anything else.
TNormKind tnorm_from_name(const std::string& name);
const char* tnorm_name(TNormKind kind);

/// Inputs may stray from [0,1] by at most this much (accumulated rounding in
/// Product folds); they are clamped back. Larger excursions are domain errors.
inline constexpr double kUnitSlack = 1e-12;

/// Applies the t-norm: min(a,b) | a*b | max(a+b-1, 0).
/// Throws std::domain_error if an input is outside [0,1] by more than kUnitSlack.
double t_apply(TNormKind kind, double a, double b);

/// Left fold of t_apply over a non-empty sequence; a length-1 fold is x1.
/// The recurrence is fold(x1..xn) = T(fold(x1..x(n-1)), xn).
/// Throws std::invalid_argument on an empty sequence.
double t_fold(TNormKind kind, std::span<const double> xs);

/// Indexed term generator: terms(i) is the i-th element, i >= 1.
using TermGenerator = std::function<double(std::uint64_t)>;

/// Truncated infinite tail fold.
struct TailReport {
  double value = 1.0;           ///< fold over terms(start+1 .. start+depth)
  double last_decrement = 0.0;  ///< fold drop contributed by the final term
  std::uint64_t start = 0;
  std::uint64_t depth = 0;
};

/// Folds terms(start+1), ..., terms(start+depth). Because every t-norm fold is
/// non-increasing in length, the truncated value is an upper bound on the
/// infinite tail; the last decrement supports convergence detection.
/// Requires depth >= 1.
TailReport t_tail(TNormKind kind, const TermGenerator& terms,
                  std::uint64_t start, std::uint64_t depth);

/// Cauchy test for the defect series sum(1-x_i): the Lukasiewicz tail folds
/// converge to 1 (for every shift) iff this series converges.
struct TailConvergenceReport {
  bool converges = false;
  double partial_sum = 0.0;     ///< sum of defects over [1, depth]
  double last_block_sum = 0.0;  ///< sum over (depth/2, depth]
  std::uint64_t depth = 0;
  double threshold = 0.0;
};

/// Declares convergence iff the trailing half-block sum of defects is below
/// `threshold` (the computable Cauchy surrogate at this depth).
/// defects(i) must be the i-th defect 1-x_i, in [0,1].
TailConvergenceReport lukasiewicz_tail_converges(const TermGenerator& defects,
                                                 std::uint64_t depth,
                                                 double threshold = 1e-6);

}  // namespace qqstab::tnorms
