/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qqstab {

/// Points of the domain space: real coordinate vectors (dimension >= 1).
using Vector = std::vector<double>;

inline void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimension mismatch");
}

inline Vector add(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scaled(double k, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

/// Euclidean norm.
inline double norm2(const Vector& a) {
  double s = 0.0;
  for (double c : a) s += c * c;
  return std::sqrt(s);
}

inline double max_abs(const Vector& a) {
  double m = 0.0;
  for (double c : a) m = std::max(m, std::fabs(c));
  return m;
}

/// value * e1 in the given dimension (the scalar grids live on the first axis).
inline Vector axis_vector(std::size_t dimension, double value) {
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  Vector r(dimension, 0.0);
  r[0] = value;
  return r;
}

}  // namespace qqstab
