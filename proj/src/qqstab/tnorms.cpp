/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/tnorms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qqstab::tnorms {

TNormKind tnorm_from_name(const std::string& name) {
  if (name == "minimum") return TNormKind::Minimum;
  if (name == "product") return TNormKind::Product;
  if (name == "lukasiewicz") return TNormKind::Lukasiewicz;
  throw std::invalid_argument("unknown t-norm: " + name);
}

const char* tnorm_name(TNormKind kind) {
  switch (kind) {
    case TNormKind::Minimum: return "minimum";
    case TNormKind::Product: return "product";
    case TNormKind::Lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

namespace {

double checked_unit(double v) {
  if (!(v >= -kUnitSlack && v <= 1.0 + kUnitSlack))
    throw std::domain_error("t-norm argument outside [0,1]");
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double t_apply(TNormKind kind, double a, double b) {
  a = checked_unit(a);
  b = checked_unit(b);
  switch (kind) {
    case TNormKind::Minimum: return std::min(a, b);
    case TNormKind::Product: return a * b;
    case TNormKind::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
  }
  throw std::logic_error("unreachable t-norm kind");
}

double t_fold(TNormKind kind, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("t_fold: empty sequence");
  double acc = checked_unit(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) acc = t_apply(kind, acc, xs[i]);
  return acc;
}

TailReport t_tail(TNormKind kind, const TermGenerator& terms,
                  std::uint64_t start, std::uint64_t depth) {
  if (depth < 1) throw std::invalid_argument("t_tail: depth must be >= 1");
  TailReport rep;
  rep.start = start;
  rep.depth = depth;
  double acc = checked_unit(terms(start + 1));
  double dec = 0.0;
  for (std::uint64_t i = 2; i <= depth; ++i) {
    const double next = t_apply(kind, acc, terms(start + i));
    dec = acc - next;
    acc = next;
  }
  rep.value = acc;
  rep.last_decrement = dec;
  return rep;
}

TailConvergenceReport lukasiewicz_tail_converges(const TermGenerator& defects,
                                                 std::uint64_t depth,
                                                 double threshold) {
  if (depth < 1) throw std::invalid_argument("tail test: depth must be >= 1");
  TailConvergenceReport rep;
  rep.depth = depth;
  rep.threshold = threshold;
  const std::uint64_t block_from = depth / 2 + 1;
  for (std::uint64_t i = 1; i <= depth; ++i) {
    const double d = defects(i);
    if (!(d >= -kUnitSlack && d <= 1.0 + kUnitSlack))
      throw std::domain_error("defect outside [0,1]");
    rep.partial_sum += d;
    if (i >= block_from) rep.last_block_sum += d;
  }
  rep.converges = rep.last_block_sum < threshold;
  return rep;
}

}  // namespace qqstab::tnorms
