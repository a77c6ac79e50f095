/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qqstab::oracle {

namespace {

using boost::multiprecision::cpp_int;

Rational pow2(int bits) {
  Rational r = 1;
  if (bits >= 0)
    return Rational(cpp_int(1) << bits);
  return Rational(1, cpp_int(1) << -bits);
}

void require_dim1(const funceq::TestFunction& f) {
  if (f.dimension != 1)
    throw std::invalid_argument("oracle: only dimension 1 is supported");
}

}  // namespace

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw std::domain_error("to_rational: non-finite");
  return Rational(v);  // exact: captures the binary value
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational eval_exact(const funceq::TestFunction& f, double x) {
  require_dim1(f);
  const Rational rx = to_rational(x);
  const Rational q2 = rx * rx;
  Rational v = to_rational(f.a) * q2 * q2 + to_rational(f.b) * q2;
  if (f.delta != 0.0)
    v += to_rational(f.delta) * to_rational(f.eta(Vector{x}));
  return v;
}

Rational quadratic_part_value(const funceq::TestFunction& f, double x,
                              unsigned n) {
  // 2^k x is an exact double rescaling, so both paths visit the same points.
  const double xn = std::ldexp(x, static_cast<int>(n));
  const double xn1 = std::ldexp(x, static_cast<int>(n) + 1);
  return (eval_exact(f, xn1) - 16 * eval_exact(f, xn)) *
         pow2(-2 * static_cast<int>(n));
}

Rational quartic_part_value(const funceq::TestFunction& f, double x,
                            unsigned n) {
  const double xn = std::ldexp(x, static_cast<int>(n));
  const double xn1 = std::ldexp(x, static_cast<int>(n) + 1);
  return (eval_exact(f, xn1) - 4 * eval_exact(f, xn)) *
         pow2(-4 * static_cast<int>(n));
}

Rational residual_qq_exact(const funceq::TestFunction& f, double x, double y) {
  // The stencil points are the doubles the floating path evaluates.
  return eval_exact(f, 2 * x + y) + eval_exact(f, 2 * x - y) -
         4 * eval_exact(f, x + y) - 4 * eval_exact(f, x - y) -
         2 * eval_exact(f, 2 * x) + 8 * eval_exact(f, x) +
         6 * eval_exact(f, y);
}

namespace {

// The floating-point twin of quadratic/quartic_part_value, replicating the
// library's level evaluation (scaled point, part expression, ldexp rescale).
double float_part_value(const funceq::TestFunction& f, double x, unsigned n,
                        double part_coeff, int bits_per_level) {
  const auto fe = funceq::as_evaluable(f);
  const Vector xn{std::ldexp(x, static_cast<int>(n))};
  const Vector xn1{std::ldexp(x, static_cast<int>(n) + 1)};
  const double part = fe(xn1) - part_coeff * fe(xn);
  return std::ldexp(part, -bits_per_level * static_cast<int>(n));
}

}  // namespace

double cross_check_quadratic(const funceq::TestFunction& f, double x,
                             unsigned n) {
  require_dim1(f);
  const Rational exact = quadratic_part_value(f, x, n);
  const Rational fl = to_rational(float_part_value(f, x, n, 16.0, 2));
  return to_double(abs(exact - fl));
}

double cross_check_quartic(const funceq::TestFunction& f, double x,
                           unsigned n) {
  require_dim1(f);
  const Rational exact = quartic_part_value(f, x, n);
  const Rational fl = to_rational(float_part_value(f, x, n, 4.0, 4));
  return to_double(abs(exact - fl));
}

double cross_check_residual(const funceq::TestFunction& f, double x, double y) {
  require_dim1(f);
  const auto fe = funceq::as_evaluable(f);
  const double fl =
      funceq::residual_qq(fe, Vector{x}, Vector{y});
  return to_double(abs(residual_qq_exact(f, x, y) - to_rational(fl)));
}

}  // namespace qqstab::oracle
