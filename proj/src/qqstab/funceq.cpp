/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/funceq.hpp"

#include <cmath>
#include <cstring>

#include "qqstab/csvio.hpp"
#include "qqstab/rng.hpp"

namespace qqstab::funceq {

double TestFunction::exact(const Vector& x) const {
  double q2 = 0.0;
  for (double c : x) q2 += c * c;
  return a * q2 * q2 + b * q2;
}

double TestFunction::eta(const Vector& x) const {
  std::uint64_t h = rng::mix(seed ^ 0x71c9a1d3b5f7e201ULL);
  for (double c : x) {
    // Round to 12 fractional digits so dyadic rescalings of the same point
    // hash identically across calls; normalize -0 to +0.
    double r = std::nearbyint(c * 1e12) / 1e12;
    if (r == 0.0) r = 0.0;
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof r);
    std::memcpy(&bits, &r, sizeof bits);
    h = rng::mix(h ^ bits);
  }
  return static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

double TestFunction::operator()(const Vector& x) const {
  const double base = exact(x);
  return delta == 0.0 ? base : base + delta * eta(x);
}

std::string TestFunction::record() const {
  return "a=" + csv::fmt(a) + ";b=" + csv::fmt(b) + ";delta=" + csv::fmt(delta) +
         ";seed=" + std::to_string(seed) +
         ";dimension=" + std::to_string(dimension);
}

Evaluable as_evaluable(const TestFunction& f) {
  return [f](const Vector& x) { return f(x); };
}

double residual_qq(const Evaluable& f, const Vector& x, const Vector& y) {
  const Vector x2 = scaled(2.0, x);
  return f(add(x2, y)) + f(sub(x2, y)) - 4.0 * f(add(x, y)) -
         4.0 * f(sub(x, y)) - 2.0 * f(x2) + 8.0 * f(x) + 6.0 * f(y);
}

double residual_quadratic(const Evaluable& f, const Vector& x,
                          const Vector& y) {
  return f(add(x, y)) + f(sub(x, y)) - 2.0 * f(x) - 2.0 * f(y);
}

double residual_quartic(const Evaluable& f, const Vector& x, const Vector& y) {
  const Vector y2 = scaled(2.0, y);
  return f(add(x, y2)) + f(sub(x, y2)) - 4.0 * f(add(x, y)) -
         4.0 * f(sub(x, y)) - 24.0 * f(y) + 6.0 * f(x);
}

double residual_quartic_interchanged(const Evaluable& f, const Vector& x,
                                     const Vector& y) {
  const Vector x2 = scaled(2.0, x);
  return f(add(x2, y)) + f(sub(x2, y)) - 4.0 * f(add(x, y)) -
         4.0 * f(sub(x, y)) - 24.0 * f(x) + 6.0 * f(y);
}

Evaluable part_g(Evaluable f) {
  return [f = std::move(f)](const Vector& x) {
    return f(scaled(2.0, x)) - 16.0 * f(x);
  };
}

Evaluable part_h(Evaluable f) {
  return [f = std::move(f)](const Vector& x) {
    return f(scaled(2.0, x)) - 4.0 * f(x);
  };
}

double reconstruct(double g_val, double h_val) { return (h_val - g_val) / 12.0; }

double biadditive_form(const Evaluable& f, const Vector& x, const Vector& y) {
  return (f(add(x, y)) - f(sub(x, y))) / 4.0;
}

double check_doubling(const Evaluable& f, const Vector& x) {
  return f(scaled(4.0, x)) - 20.0 * f(scaled(2.0, x)) + 64.0 * f(x);
}

double check_even(const Evaluable& f, const Vector& x) {
  return f(scaled(-1.0, x)) - f(x);
}

}  // namespace qqstab::funceq
