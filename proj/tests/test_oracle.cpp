/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "qqstab/funceq.hpp"
#include "qqstab/oracle.hpp"
#include "qqstab/vec.hpp"

using namespace qqstab;
using funceq::TestFunction;

TEST_CASE("doubles round-trip through the rational representation exactly") {
  for (double v : {0.0, -0.0, 1.0, -3.5, 0.1, 1e-300, 6.02214076e23,
                   -0.3333333333333333}) {
    CHECK(oracle::to_double(oracle::to_rational(v)) == v);
  }
  CHECK(oracle::to_rational(0.25) == oracle::Rational(1, 4));
  CHECK(oracle::to_rational(-1.5) == oracle::Rational(-3, 2));
  CHECK_THROWS_AS(oracle::to_rational(std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(
      oracle::to_rational(std::numeric_limits<double>::quiet_NaN()),
      std::domain_error);
}

TEST_CASE("eval_exact matches the floating evaluation to rounding error") {
  const TestFunction f{3.5, -2.25, 0.01, 9, 1};
  for (double x : {0.0, 0.5, -1.0, 2.0, 3.25, -7.5}) {
    const double exact = oracle::to_double(oracle::eval_exact(f, x));
    const double approx = f(Vector{x});
    CHECK(std::fabs(exact - approx) <=
          1e-12 * std::max(1.0, std::fabs(exact)));
  }
}

TEST_CASE("noiseless dyadic inputs give an exactly zero rational residual") {
  const TestFunction f{3.5, -2.25, 0.0, 1, 1};
  for (double x : {0.5, -0.5, 1.0, 2.0}) {
    for (double y : {0.5, -1.0, 2.0}) {
      CHECK(oracle::residual_qq_exact(f, x, y) == 0);
    }
  }
}

TEST_CASE("exact part values reproduce the family coefficients") {
  const TestFunction f{3.5, -2.25, 0.0, 1, 1};
  // part_g/4^n = -12 b x^2 and part_h/16^n = 12 a x^4 at every level.
  CHECK(oracle::to_double(oracle::quadratic_part_value(f, 1.5, 0)) ==
        doctest::Approx(27.0 * 2.25).epsilon(1e-15));
  CHECK(oracle::to_double(oracle::quadratic_part_value(f, 1.5, 6)) ==
        doctest::Approx(27.0 * 2.25).epsilon(1e-15));
  CHECK(oracle::to_double(oracle::quartic_part_value(f, 1.5, 6)) ==
        doctest::Approx(42.0 * 2.25 * 2.25).epsilon(1e-15));
}

TEST_CASE("noiseless dyadic families make the floating path exact") {
  // With delta = 0 and dyadic a, b, x every intermediate stays an integer
  // multiple of a power of two below 2^53, so the floating path agrees with
  // the rational oracle bit for bit.
  const TestFunction f{3.5, -2.25, 0.0, 1, 1};
  for (double x : {0.5, 1.0, 2.0}) {
    for (unsigned n : {0u, 3u, 8u}) {
      CHECK(oracle::cross_check_quadratic(f, x, n) == 0.0);
      CHECK(oracle::cross_check_quartic(f, x, n) == 0.0);
    }
    CHECK(oracle::cross_check_residual(f, x, 0.75) == 0.0);
  }
}

TEST_CASE("noisy part-compatible fixtures stay within 1e-12 of the oracle") {
  // The quadratic rescaling divides by 4^n while a quartic term in f grows
  // like 16^n, so the noise-rounding residue of a mixed family escapes any
  // fixed tolerance as n grows.  The deep-level 1e-12 claim therefore uses
  // fixtures whose dominant term matches the part under test.
  const TestFunction gg{0.0, 27.0, 0.01, 3, 1};  // pure quadratic + noise
  const TestFunction hh{42.0, 0.0, 0.01, 4, 1};  // pure quartic + noise
  for (double x : {0.5, 1.0, 2.0}) {
    for (unsigned n : {0u, 3u, 8u}) {
      CHECK(oracle::cross_check_quadratic(gg, x, n) <= 1e-12);
    }
  }
  for (double x : {0.5, 1.0}) {
    for (unsigned n : {0u, 3u, 8u}) {
      CHECK(oracle::cross_check_quartic(hh, x, n) <= 1e-12);
    }
  }
}

TEST_CASE("mixed noisy families stay within a rescaled rounding envelope") {
  const TestFunction f{3.5, -2.25, 0.01, 9, 1};
  const double eps = std::numeric_limits<double>::epsilon();
  for (double x : {0.5, 1.0, 2.0}) {
    for (unsigned n : {0u, 3u, 8u}) {
      // A handful of roundings at the magnitude of f(2^{n+1} x), divided by
      // the quadratic rescaling 4^n, bounds the float-vs-exact deviation.
      const double mag = std::fabs(
          oracle::to_double(oracle::eval_exact(f, std::ldexp(x, int(n) + 1))));
      const double envelope =
          std::max(1e-12, 8.0 * eps * mag / std::ldexp(1.0, 2 * int(n)));
      CHECK(oracle::cross_check_quadratic(f, x, n) <= envelope);
      // The quartic rescaling 16^n matches the dominant growth, so the
      // fixed tolerance holds even for the mixed family.
      CHECK(oracle::cross_check_quartic(f, x, n) <= 1e-12);
    }
    CHECK(oracle::cross_check_residual(f, x, 0.75) <= 1e-12);
  }
}

TEST_CASE("the oracle is restricted to dimension one") {
  const TestFunction f{1.0, 1.0, 0.0, 1, 2};
  CHECK_THROWS_AS(oracle::eval_exact(f, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::cross_check_quadratic(f, 1.0, 2),
                  std::invalid_argument);
}
