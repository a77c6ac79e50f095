/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qqstab/funceq.hpp"

namespace qqstab::oracle {

/// Exact rational arithmetic used to cross-check the floating-point path on
/// small cases (dimension 1, few dyadic rescalings). Doubles convert to
/// rationals exactly (the binary value is captured bit for bit), powers of
/// two rescale doubles exactly, and the noise values are dyadic rationals by
/// construction, so both paths evaluate the identical function at the
/// identical points; any deviation is accumulated evaluation rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; throws std::domain_error on NaN/infinity.
Rational to_rational(double v);
double to_double(const Rational& r);

/// Exact value of the test family at the double point x (dimension 1 only):
/// a*x^4 + b*x^2 + delta*eta(x), every factor taken exactly.
Rational eval_exact(const funceq::TestFunction& f, double x);

/// Exact rescaled approximants of the decomposition parts at level n:
/// [f(2^{n+1}x) - 16 f(2^n x)] / 4^n and [f(2^{n+1}x) - 4 f(2^n x)] / 16^n.
Rational quadratic_part_value(const funceq::TestFunction& f, double x,
                              unsigned n);
Rational quartic_part_value(const funceq::TestFunction& f, double x,
                            unsigned n);

/// Exact residual of the quadratic-quartic equation at the stencil the
/// floating path visits (the stencil points themselves are the double
/// values, so the comparison isolates evaluation rounding).
Rational residual_qq_exact(const funceq::TestFunction& f, double x, double y);

/// |exact - floating| for the level-n approximants and the residual; the
/// floating side replicates the library's evaluation path bit for bit.
double cross_check_quadratic(const funceq::TestFunction& f, double x,
                             unsigned n);
double cross_check_quartic(const funceq::TestFunction& f, double x,
                           unsigned n);
double cross_check_residual(const funceq::TestFunction& f, double x, double y);

}  // namespace qqstab::oracle
