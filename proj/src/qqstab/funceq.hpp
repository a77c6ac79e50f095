/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qqstab/vec.hpp"

namespace qqstab::funceq {

/// Any evaluable map f: R^d -> R.
using Evaluable = std::function<double(const Vector&)>;

/// The exact even-polynomial test family plus deterministic bounded noise:
///   f(x) = a*Q4(x) + b*Q2(x) + delta*eta(x),  Q2(x) = ||x||^2,  Q4 = Q2^2.
/// In dimension 1 this is a*x^4 + b*x^2 (+ noise). With delta = 0, f solves
/// the quadratic-quartic functional equation identically.
///
/// eta(x) in [-1,1) is a pure hash of (seed, coordinates rounded to 12
/// fractional digits), so repeated evaluation at the same point - in
/// particular at the dyadically rescaled points the direct method re-visits -
/// always returns the same value.
struct TestFunction {
  double a = 0.0;           ///< quartic coefficient
  double b = 0.0;           ///< quadratic coefficient
  double delta = 0.0;       ///< noise amplitude, >= 0
  std::uint64_t seed = 1;   ///< noise seed
  std::size_t dimension = 1;

  double exact(const Vector& x) const;
  double eta(const Vector& x) const;
  double operator()(const Vector& x) const;

  /// Serialized record: "a=..;b=..;delta=..;seed=..;dimension=..".
  std::string record() const;
};

Evaluable as_evaluable(const TestFunction& f);

/// Residual of the quadratic-quartic equation
///   f(2x+y) + f(2x-y) = 4[f(x+y) + f(x-y)] + 2[f(2x) - 4f(x)] - 6f(y):
/// returns LHS - RHS; zero exactly on solutions.
double residual_qq(const Evaluable& f, const Vector& x, const Vector& y);

/// Residual of the quadratic equation f(x+y) + f(x-y) = 2f(x) + 2f(y).
double residual_quadratic(const Evaluable& f, const Vector& x, const Vector& y);

/// Residual of the quartic equation
///   f(x+2y) + f(x-2y) = 4[f(x+y) + f(x-y) + 6f(y)] - 6f(x).
double residual_quartic(const Evaluable& f, const Vector& x, const Vector& y);

/// The same quartic law with the roles of x and y interchanged,
///   h(2x+y) + h(2x-y) = 4[h(x+y) + h(x-y) + 6h(x)] - 6h(y),
/// the form in which the quartic part of the decomposition satisfies it.
double residual_quartic_interchanged(const Evaluable& f, const Vector& x,
                                     const Vector& y);

/// The structural decomposition of a solution f:
///   part_g(f)(x) = f(2x) - 16 f(x)   (quadratic part; -12b*x^2 on the family)
///   part_h(f)(x) = f(2x) -  4 f(x)   (quartic part;    12a*x^4 on the family)
Evaluable part_g(Evaluable f);
Evaluable part_h(Evaluable f);

/// Reassembles f from its parts: (h - g)/12. This is an algebraic identity
/// of the two defining expressions, so it holds for arbitrary f and noise.
double reconstruct(double g_val, double h_val);

/// Bi-additive form obtained by polarization: (f(x+y) - f(x-y))/4.
/// For f(x) = x^2 this is the product form B(x,y) = xy with B(x,x) = f(x).
double biadditive_form(const Evaluable& f, const Vector& x, const Vector& y);

/// Doubling law satisfied by solutions: f(4x) - 20 f(2x) + 64 f(x) = 0.
double check_doubling(const Evaluable& f, const Vector& x);

/// Evenness defect f(-x) - f(x); zero for solutions.
double check_even(const Evaluable& f, const Vector& x);

}  // namespace qqstab::funceq
