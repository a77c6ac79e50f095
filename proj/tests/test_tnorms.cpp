/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qqstab/tnorms.hpp"

using namespace qqstab::tnorms;

TEST_CASE("t_apply evaluates the three t-norms") {
  CHECK(t_apply(TNormKind::Minimum, 0.3, 0.7) == doctest::Approx(0.3));
  CHECK(t_apply(TNormKind::Product, 0.5, 0.5) == doctest::Approx(0.25));
  CHECK(t_apply(TNormKind::Lukasiewicz, 0.7, 0.5) == doctest::Approx(0.2));
  CHECK(t_apply(TNormKind::Lukasiewicz, 0.3, 0.5) == 0.0);
}

TEST_CASE("t_apply respects the t-norm laws on spot checks") {
  const std::vector<double> pts{0.0, 0.2, 0.5, 0.8, 1.0};
  for (auto kind :
       {TNormKind::Minimum, TNormKind::Product, TNormKind::Lukasiewicz}) {
    for (double a : pts) {
      // identity: T(a, 1) = a
      CHECK(t_apply(kind, a, 1.0) == doctest::Approx(a));
      for (double b : pts) {
        // commutativity
        CHECK(t_apply(kind, a, b) == doctest::Approx(t_apply(kind, b, a)));
        // monotonicity in the first argument
        if (a <= 0.9) {
          CHECK(t_apply(kind, a, b) <= t_apply(kind, a + 0.1, b) + 1e-15);
        }
        for (double c : pts) {
          // associativity
          CHECK(t_apply(kind, t_apply(kind, a, b), c) ==
                doctest::Approx(t_apply(kind, a, t_apply(kind, b, c))));
        }
      }
    }
  }
}

TEST_CASE("t_apply clamps tiny excursions and rejects real ones") {
  CHECK(t_apply(TNormKind::Product, 1.0 + 1e-13, 0.5) == doctest::Approx(0.5));
  CHECK(t_apply(TNormKind::Minimum, -1e-13, 0.5) == 0.0);
  CHECK_THROWS_AS(t_apply(TNormKind::Minimum, 1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(t_apply(TNormKind::Product, 0.5, -0.2), std::domain_error);
}

TEST_CASE("t_fold folds left over the whole list") {
  const std::vector<double> xs{0.9, 0.8, 0.7};
  CHECK(t_fold(TNormKind::Minimum, xs) == doctest::Approx(0.7));
  CHECK(t_fold(TNormKind::Product, xs) == doctest::Approx(0.504));
  // L(L(0.9, 0.8), 0.7) = L(0.7, 0.7) = 0.4
  CHECK(t_fold(TNormKind::Lukasiewicz, xs) == doctest::Approx(0.4));

  const std::vector<double> one{0.42};
  for (auto kind :
       {TNormKind::Minimum, TNormKind::Product, TNormKind::Lukasiewicz}) {
    CHECK(t_fold(kind, one) == doctest::Approx(0.42));
  }
  CHECK_THROWS_AS(t_fold(TNormKind::Minimum, std::vector<double>{}),
                  std::invalid_argument);
}

namespace {
double geometric_term(std::uint64_t i) {
  return 1.0 - std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(i, 1074)));
}
double geometric_defect(std::uint64_t i) {
  return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(i, 1074)));
}
}  // namespace

TEST_CASE("t_tail matches the closed form for geometric Lukasiewicz tails") {
  // Tail from start n folds 1 - sum_{i=n+1}^{n+depth} 2^-i
  //                       = 1 - 2^-n + 2^-(n+depth).
  for (std::uint64_t start : {0, 1, 3, 5}) {
    const auto rep = t_tail(TNormKind::Lukasiewicz, geometric_term, start, 50);
    const double expect = 1.0 - std::ldexp(1.0, -static_cast<int>(start)) +
                          std::ldexp(1.0, -static_cast<int>(start + 50));
    CHECK(rep.value == doctest::Approx(expect).epsilon(1e-9));
    CHECK(rep.start == start);
    CHECK(rep.depth == 50);
    // Final term contributes a 2^-(start+50) drop.
    CHECK(rep.last_decrement ==
          doctest::Approx(std::ldexp(1.0, -static_cast<int>(start + 50)))
              .epsilon(1e-6));
  }
}

TEST_CASE("t_tail with Minimum keeps the smallest tail term") {
  const auto rep = t_tail(TNormKind::Minimum, geometric_term, 2, 10);
  // Smallest term is the first one of the tail: 1 - 2^-3.
  CHECK(rep.value == doctest::Approx(1.0 - 0.125));
}

TEST_CASE("t_tail rejects zero depth") {
  CHECK_THROWS_AS(t_tail(TNormKind::Minimum, geometric_term, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("lukasiewicz_tail_converges separates geometric from harmonic") {
  const auto geo = lukasiewicz_tail_converges(geometric_defect, 100000);
  CHECK(geo.converges);
  CHECK(geo.partial_sum == doctest::Approx(1.0));
  CHECK(geo.last_block_sum < 1e-6);

  const auto harm = lukasiewicz_tail_converges(
      [](std::uint64_t i) { return 1.0 / static_cast<double>(i); }, 100000);
  CHECK_FALSE(harm.converges);
  // Trailing half-block of the harmonic series sums to about ln 2.
  CHECK(harm.last_block_sum == doctest::Approx(std::log(2.0)).epsilon(1e-3));

  const auto ones = lukasiewicz_tail_converges(
      [](std::uint64_t) { return 0.0; }, 1000);
  CHECK(ones.converges);
  CHECK(ones.partial_sum == 0.0);
}

TEST_CASE("t-norm names round-trip") {
  for (auto kind :
       {TNormKind::Minimum, TNormKind::Product, TNormKind::Lukasiewicz}) {
    CHECK(tnorm_from_name(tnorm_name(kind)) == kind);
  }
  CHECK_THROWS_AS(tnorm_from_name("drastic"), std::invalid_argument);
}
