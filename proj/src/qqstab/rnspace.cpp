/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/rnspace.hpp"

#include <cmath>
#include <stdexcept>

#include "qqstab/csvio.hpp"
#include "qqstab/rng.hpp"

namespace qqstab::rn {

double induced_mu(const Vector& x, double t) {
  if (!(t > 0.0)) throw std::domain_error("induced_mu: t must be positive");
  return t / (t + norm2(x));
}

RnSpace RnSpace::induced(tnorms::TNormKind kind) {
  RnSpace s;
  s.tnorm = kind;
  s.mu = [](const Vector& x) { return dist::DistFn::rational_control(norm2(x)); };
  return s;
}

RnSpace RnSpace::broken_rn2(tnorms::TNormKind kind) {
  RnSpace s;
  s.tnorm = kind;
  s.mu = [](const Vector& x) {
    return norm2(x) == 0.0 ? dist::DistFn::eps0()
                           : dist::DistFn::rational_control(1.0);
  };
  return s;
}

RnSpace RnSpace::const_eps0(tnorms::TNormKind kind) {
  RnSpace s;
  s.tnorm = kind;
  s.mu = [](const Vector&) { return dist::DistFn::eps0(); };
  return s;
}

namespace {

// Positive probe grid used for the "mu_x = eps0?" decision in RN1.
constexpr double kRn1Grid[] = {1e-3, 1.0, 1e3};

bool eps0_like(const dist::DistFn& F) {
  for (double t : kRn1Grid)
    if (F(t) < 1.0 - 1e-12) return false;
  return true;
}

std::string vec_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += csv::fmt(v[i]);
  }
  s += ')';
  return s;
}

double log_uniform(std::uint64_t& state, double lo, double hi) {
  return lo * std::pow(hi / lo, rng::unit01(state));
}

}  // namespace

std::vector<AxiomViolation> check_axioms(const RnSpace& space,
                                         std::size_t sample_count,
                                         std::uint64_t seed,
                                         std::size_t dimension) {
  if (sample_count < 1)
    throw std::invalid_argument("check_axioms: sample_count must be >= 1");
  if (dimension < 1)
    throw std::invalid_argument("check_axioms: dimension must be >= 1");

  std::vector<AxiomViolation> out;

  // Deterministic RN1 probe at the origin: mu_0 must be eps0.
  if (!eps0_like(space.mu(Vector(dimension, 0.0))))
    out.push_back({"RN1", "probe;x=" + vec_str(Vector(dimension, 0.0)), 1.0});

  for (std::size_t i = 0; i < sample_count; ++i) {
    // Sample i is a pure function of seed + i (order-independent fuzzing).
    std::uint64_t state = rng::mix(seed + i);

    Vector x(dimension), y(dimension);
    for (auto& c : x) c = rng::uniform(state, -10.0, 10.0);
    for (auto& c : y) c = rng::uniform(state, -10.0, 10.0);
    double alpha = rng::uniform(state, -4.0, 4.0);
    if (alpha == 0.0) alpha = 1.0;
    const double t = log_uniform(state, 1e-3, 1e3);
    const double s = log_uniform(state, 1e-3, 1e3);

    const std::string tag = "i=" + std::to_string(i);

    // RN1: mu_x = eps0 on the probe grid iff ||x|| = 0.
    const dist::DistFn mu_x = space.mu(x);
    const bool zero = norm2(x) == 0.0;
    if (eps0_like(mu_x) != zero)
      out.push_back({"RN1", tag + ";x=" + vec_str(x), 1.0});

    // RN2: mu_{alpha x}(t) = mu_x(t / |alpha|).
    const double lhs2 = space.mu(scaled(alpha, x))(t);
    const double rhs2 = mu_x(t / std::fabs(alpha));
    const double dev2 = std::fabs(lhs2 - rhs2);
    if (dev2 > 1e-9)
      out.push_back({"RN2",
                     tag + ";x=" + vec_str(x) + ";alpha=" + csv::fmt(alpha) +
                         ";t=" + csv::fmt(t),
                     dev2});

    // RN3: mu_{x+y}(t+s) >= T(mu_x(t), mu_y(s)).
    const double lhs3 = space.mu(add(x, y))(t + s);
    const double rhs3 = tnorms::t_apply(space.tnorm, mu_x(t), space.mu(y)(s));
    if (lhs3 < rhs3 - 1e-12)
      out.push_back({"RN3",
                     tag + ";x=" + vec_str(x) + ";y=" + vec_str(y) +
                         ";t=" + csv::fmt(t) + ";s=" + csv::fmt(s),
                     rhs3 - lhs3});
  }
  return out;
}

ConvergenceReport seq_convergent(const RnSpace& space,
                                 const VectorSequence& seq, const Vector& x,
                                 double eps, double lambda,
                                 std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  std::uint64_t last_fail = 0;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (space.mu(sub(seq(n), x))(eps) <= 1.0 - lambda) last_fail = n;
  }
  if (last_fail == horizon) return {false, 0};
  return {true, last_fail + 1};
}

ConvergenceReport seq_cauchy(const RnSpace& space, const VectorSequence& seq,
                             double eps, double lambda, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (horizon == 1) return {true, 1};  // no pair to test
  // Cache the sequence prefix; the pair sweep is quadratic in the horizon.
  std::vector<Vector> xs;
  xs.reserve(horizon);
  for (std::uint64_t n = 1; n <= horizon; ++n) xs.push_back(seq(n));
  std::uint64_t last_fail_m = 0;
  for (std::uint64_t m = 1; m <= horizon; ++m)
    for (std::uint64_t n = m + 1; n <= horizon; ++n)
      if (space.mu(sub(xs[n - 1], xs[m - 1]))(eps) <= 1.0 - lambda)
        last_fail_m = std::max(last_fail_m, m);
  // Require a window with at least one genuine pair: N = horizon would make
  // the condition vacuously true for any sequence.
  if (last_fail_m >= horizon - 1) return {false, 0};
  return {true, last_fail_m + 1};
}

double mu_continuity_check(const RnSpace& space, const VectorSequence& seq,
                           const Vector& x, std::span<const double> tgrid,
                           std::uint64_t horizon) {
  const dist::DistFn mu_n = space.mu(seq(horizon));
  const dist::DistFn mu_x = space.mu(x);
  double dev = 0.0;
  for (double t : tgrid) dev = std::max(dev, std::fabs(mu_n(t) - mu_x(t)));
  return dev;
}

}  // namespace qqstab::rn
