/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qqstab/funceq.hpp"
#include "qqstab/rng.hpp"
#include "qqstab/vec.hpp"

using namespace qqstab;
using funceq::Evaluable;
using funceq::TestFunction;

namespace {

const std::vector<double> kCoords{-4, -2, -1, -0.5, 0, 0.5, 1, 2, 4};

double scale_at(const Evaluable& f, const Vector& X, const Vector& Y) {
  const Vector X2 = scaled(2.0, X);
  double m = 1.0;
  for (const Vector& p : {add(X2, Y), sub(X2, Y), add(X, Y), sub(X, Y), X2, X,
                          Y, scaled(2.0, Y), scaled(4.0, X)}) {
    m = std::max(m, std::fabs(f(p)));
  }
  return m;
}

}  // namespace

TEST_CASE("the a*q^2 + b*q family solves the equation exactly") {
  const TestFunction f{2.0, -3.0, 0.0, 1, 2};
  const auto fe = funceq::as_evaluable(f);
  for (double xs : kCoords) {
    for (double ys : kCoords) {
      const Vector X{xs, -0.5 * xs};
      const Vector Y{ys, ys};
      const double r = funceq::residual_qq(fe, X, Y);
      CHECK(std::fabs(r) <= 1e-9 * scale_at(fe, X, Y));
    }
  }
}

TEST_CASE("known one-dimensional residual fixtures") {
  const Evaluable cube = [](const Vector& v) { return v[0] * v[0] * v[0]; };
  CHECK(funceq::residual_qq(cube, Vector{1.0}, Vector{1.0}) ==
        doctest::Approx(-6.0));

  const Evaluable quartic = [](const Vector& v) {
    const double u = v[0] * v[0];
    return u * u;
  };
  const Evaluable square = [](const Vector& v) { return v[0] * v[0]; };
  const Evaluable constant = [](const Vector&) { return 5.0; };

  // x^4 fails the quadratic equation by 12 at (1,1); x^2 fails the quartic
  // one by -24; constants fail the quadratic one by -2c.
  CHECK(funceq::residual_quadratic(quartic, Vector{1.0}, Vector{1.0}) ==
        doctest::Approx(12.0));
  CHECK(funceq::residual_quartic(square, Vector{1.0}, Vector{1.0}) ==
        doctest::Approx(-24.0));
  CHECK(funceq::residual_quadratic(constant, Vector{1.0}, Vector{2.0}) ==
        doctest::Approx(-10.0));

  // Both pure powers are genuine solutions of their own equations.
  for (double xs : {0.5, 1.0, 2.0}) {
    for (double ys : {0.5, 1.0, 1.5}) {
      CHECK(funceq::residual_quadratic(square, Vector{xs}, Vector{ys}) ==
            doctest::Approx(0.0).epsilon(1e-12));
      CHECK(funceq::residual_quartic(quartic, Vector{xs}, Vector{ys}) ==
            doctest::Approx(0.0).epsilon(1e-12));
      CHECK(funceq::residual_quartic_interchanged(quartic, Vector{xs},
                                                  Vector{ys}) ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
  }

  CHECK(funceq::check_doubling(cube, Vector{1.0}) == doctest::Approx(-32.0));
}

TEST_CASE("decomposition isolates the quadratic and quartic parts") {
  const double a = 1.25, b = -0.75;
  const TestFunction f{a, b, 0.0, 1, 1};
  const auto fe = funceq::as_evaluable(f);
  const auto g = funceq::part_g(fe);
  const auto h = funceq::part_h(fe);
  for (double xs : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const Vector X{xs};
    const double q2 = xs * xs;
    // part_g(f) = -12 b q, part_h(f) = 12 a q^2 on the solution family.
    CHECK(g(X) == doctest::Approx(-12.0 * b * q2).epsilon(1e-12));
    CHECK(h(X) == doctest::Approx(12.0 * a * q2 * q2).epsilon(1e-12));
    // part_g solves the quadratic equation, part_h the quartic one.
    CHECK(std::fabs(funceq::residual_quadratic(g, X, Vector{1.0})) <= 1e-9);
    CHECK(std::fabs(funceq::residual_quartic(h, X, Vector{1.0})) <=
          1e-7 * std::max(1.0, std::fabs(h(scaled(4.0, X)))));
    // Doubling identities: g(2x) = 4 g(x), h(2x) = 16 h(x).
    CHECK(g(scaled(2.0, X)) == doctest::Approx(4.0 * g(X)));
    CHECK(h(scaled(2.0, X)) == doctest::Approx(16.0 * h(X)));
  }
}

TEST_CASE("reconstruction is exact even under full-amplitude noise") {
  const TestFunction f{2.0, -3.0, 1.0, 9, 1};
  const auto fe = funceq::as_evaluable(f);
  const auto g = funceq::part_g(fe);
  const auto h = funceq::part_h(fe);
  for (double xs : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const Vector X{xs};
    const double rebuilt = funceq::reconstruct(g(X), h(X));
    CHECK(std::fabs(rebuilt - fe(X)) <=
          1e-12 * std::max(1.0, std::fabs(fe(scaled(2.0, X)))));
  }
}

TEST_CASE("the biadditive form of a pure quadratic is the inner product") {
  const Evaluable q = [](const Vector& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return s;
  };
  CHECK(funceq::biadditive_form(q, Vector{1.0, 2.0}, Vector{3.0, 4.0}) ==
        doctest::Approx(11.0));
  CHECK(funceq::biadditive_form(q, Vector{2.0}, Vector{-1.0}) ==
        doctest::Approx(-2.0));
}

TEST_CASE("check_even vanishes for even functions and flags odd ones") {
  const TestFunction f{1.0, 2.0, 0.5, 3, 1};
  // The noiseless part is even; eta is evaluated pointwise so fold in noise.
  const Evaluable exact_only = [&](const Vector& v) { return f.exact(v); };
  CHECK(funceq::check_even(exact_only, Vector{1.7}) == doctest::Approx(0.0));
  const Evaluable cube = [](const Vector& v) { return v[0] * v[0] * v[0]; };
  // f(-x) - f(x) = -8 - 8
  CHECK(funceq::check_even(cube, Vector{2.0}) == doctest::Approx(-16.0));
}

TEST_CASE("the deterministic perturbation is seeded and bounded") {
  const TestFunction f{0.0, 0.0, 0.25, 77, 2};
  const TestFunction g{0.0, 0.0, 0.25, 78, 2};
  const Vector x{0.3, -1.6};
  // Reproducible for a fixed seed.
  CHECK(f.eta(x) == f.eta(x));
  // Sensitive to the seed and to the point.
  CHECK(f.eta(x) != g.eta(x));
  CHECK(f.eta(x) != f.eta(Vector{0.3, -1.6 + 1e-6}));
  // Signed zero does not split the stream.
  CHECK(f.eta(Vector{0.0, 1.0}) == f.eta(Vector{-0.0, 1.0}));
  // Range and amplitude.
  std::uint64_t st = rng::mix(4);
  for (int i = 0; i < 200; ++i) {
    const Vector p{rng::uniform(st, -10.0, 10.0), rng::uniform(st, -10.0, 10.0)};
    const double e = f.eta(p);
    CHECK(e >= -1.0);
    CHECK(e < 1.0);
    CHECK(std::fabs(f(p) - f.exact(p)) <= f.delta);
  }
}

TEST_CASE("noisy functions stay within the residual envelopes") {
  const double delta = 1e-3;
  std::uint64_t st = rng::mix(123);
  for (int k = 0; k < 10; ++k) {
    const TestFunction f{rng::uniform(st, -10.0, 10.0),
                         rng::uniform(st, -10.0, 10.0), delta,
                         static_cast<std::uint64_t>(k + 1), 1};
    const auto fe = funceq::as_evaluable(f);
    const auto g = funceq::part_g(fe);
    const auto h = funceq::part_h(fe);
    for (double xs : {0.5, 1.0, 2.0}) {
      for (double ys : {0.5, 1.0, 2.0}) {
        const Vector X{xs}, Y{ys};
        // Residual coefficient magnitudes sum to 26; the parts multiply the
        // noise by at most 17 (g) and 5 (h), and the part residuals carry
        // coefficient sums 6 and 40 respectively.
        CHECK(std::fabs(funceq::residual_qq(fe, X, Y)) <= 26.5 * delta);
        CHECK(std::fabs(funceq::residual_quadratic(g, X, Y)) <= 110.0 * delta);
        CHECK(std::fabs(funceq::residual_quartic(h, X, Y)) <= 210.0 * delta);
      }
    }
  }
}

TEST_CASE("test functions serialize their parameters") {
  const TestFunction f{1.5, -2.0, 0.01, 11, 3};
  const auto rec = f.record();
  CHECK(rec.find("a=1.5") != std::string::npos);
  CHECK(rec.find("b=-2") != std::string::npos);
  CHECK(rec.find("delta=0.01") != std::string::npos);
  CHECK(rec.find("seed=11") != std::string::npos);
  CHECK(rec.find("dimension=3") != std::string::npos);
}
