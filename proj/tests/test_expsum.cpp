#include <cmath>

#include "doctest.h"
#include "eisen/arith.hpp"
#include "eisen/error.hpp"
#include "eisen/expsum.hpp"
#include "eisen/factor.hpp"
#include "eisen/parallel.hpp"

using namespace eisen;

namespace {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) a = std::exchange(b, a % b);
  return a;
}

// Mean of |S(n, A)| over n <= x by direct summation over the circles.
double direct_mean(std::uint64_t x, std::int64_t A) {
  double s = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) s += std::abs(exp_sum(n, A).value);
  return s / static_cast<double>(x);
}

}  // namespace

TEST_CASE("vanishing for A not divisible by 6") {
  for (std::uint64_t n : {1ull, 7ull, 10ull, 49ull, 441ull, 7983607ull}) {
    for (std::int64_t A : {1, 2, 3, 4, 5, 7, -1, 13}) {
      CHECK(std::abs(exp_sum(n, A).value) < 1e-9 * (1.0 + r_q(n)));
      CHECK(exp_sum_product(n, A).value == std::complex<double>(0.0, 0.0));
    }
  }
}

TEST_CASE("small circles") {
  auto v = exp_sum(3, 6).value;
  CHECK(v.real() == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-12);
  v = exp_sum(4, 6).value;
  CHECK(v.real() == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(exp_sum_product(3, 6).value.real() == -6.0);
  CHECK(exp_sum_product(4, 6).value.real() == 6.0);
  CHECK(exp_sum(2, 6).value == std::complex<double>(0.0, 0.0));
}

TEST_CASE("direct and product paths agree") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    for (std::int64_t A : {6, 12, 18, -6, 30}) {
      const auto d = exp_sum(n, A).value;
      const auto p = exp_sum_product(n, A).value;
      CHECK(p.imag() == 0.0);
      CHECK(std::abs(d - p) < 1e-9 * (1.0 + r_q(n)));
      CHECK(std::abs(d) <= r_q(n) + 1e-9);
    }
  }
}

TEST_CASE("conjugation under A -> -A") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (std::int64_t A : {1, 5, 6, 12, 17}) {
      CHECK(std::abs(exp_sum(n, -A).value - std::conj(exp_sum(n, A).value)) < 1e-10);
    }
  }
}

TEST_CASE("f_A at prime powers") {
  for (std::int64_t a : {1, 2, 3}) {
    for (int e = 1; e <= 6; ++e) CHECK(f_A(static_cast<std::uint64_t>(std::pow(3, e)), 6 * a) == doctest::Approx(1.0));
    CHECK(f_A(2, 6 * a) == 0.0);
    CHECK(f_A(125, 6 * a) == 0.0);
    CHECK(f_A(25, 6 * a) == doctest::Approx(1.0));
    for (std::uint64_t p : {7ull, 13ull, 157ull, 211ull}) {
      const double th = split_prime_generator(p).theta_p;
      CHECK(f_A(p, 6 * a) == doctest::Approx(2.0 * std::abs(std::cos(6.0 * a * th))).epsilon(1e-12));
    }
  }
  for (auto p : arith::primes_up_to(200)) {
    std::uint64_t q = 1;
    for (int e = 1; q <= 1'000'000'000'000ull / p; ++e) {
      q *= p;
      for (std::int64_t A : {6, 12, 42}) {
        const double v = f_A(q, A);
        CHECK(v >= 0.0);
        CHECK(v <= e + 1 + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(f_A(7, 5), PreconditionError);
}

TEST_CASE("multiplicativity") {
  for (std::uint64_t m = 1; m <= 120; ++m) {
    for (std::uint64_t n = 1; n <= 120; ++n) {
      if (gcd(m, n) != 1) continue;
      for (std::int64_t A : {6, 12}) CHECK(std::abs(f_A(m * n, A) - f_A(m, A) * f_A(n, A)) < 1e-9);
    }
  }
}

TEST_CASE("local factor") {
  CHECK(split_local_factor(0.1, 0, 6) == 1.0);
  CHECK(split_local_factor(0.0, 3, 6) == doctest::Approx(4.0));
  CHECK(split_local_factor(0.2, 1, 6) == doctest::Approx(2.0 * std::abs(std::cos(1.2))));
}

TEST_CASE("average decay against direct summation") {
  const auto rep = avg_exp_sum(10000, 6, {1000, 10000, 100}, 2);
  REQUIRE(rep.checkpoints.size() == 3);
  CHECK(rep.checkpoints[0].x == 100);
  CHECK(rep.checkpoints[0].mean == doctest::Approx(direct_mean(100, 6)).epsilon(1e-12));
  CHECK(rep.checkpoints[1].mean == doctest::Approx(direct_mean(1000, 6)).epsilon(1e-12));
  CHECK(rep.checkpoints[2].mean == doctest::Approx(direct_mean(10000, 6)).epsilon(1e-12));
  CHECK(rep.fitted_exponent.has_value());

  const auto three = avg_exp_sum(100000, 6, {1000, 10000, 100000});
  CHECK(three.checkpoints[0].mean > three.checkpoints[1].mean);
  CHECK(three.checkpoints[1].mean > three.checkpoints[2].mean);
  for (const auto& c : three.checkpoints) CHECK(c.mean >= 0.0);

  const auto zero = avg_exp_sum(10000, 1, {100, 10000});
  for (const auto& c : zero.checkpoints) CHECK(c.mean < 1e-9);
  CHECK_FALSE(zero.fitted_exponent.has_value());

  CHECK_FALSE(avg_exp_sum(500, 6, {500}).fitted_exponent.has_value());
  CHECK_THROWS_AS(avg_exp_sum(100, 6, {}), PreconditionError);
  CHECK_THROWS_AS(avg_exp_sum(100, 6, {200}), PreconditionError);
  CHECK_THROWS_AS(avg_exp_sum(kMaxSurveyX + 1, 6, {10}), PreconditionError);
}

TEST_CASE("average is independent of the worker count") {
  const auto a = avg_exp_sum(200000, 12, {1000, 200000}, 1);
  const auto b = avg_exp_sum(200000, 12, {1000, 200000}, 3);
  CHECK(a.checkpoints[1].mean == b.checkpoints[1].mean);
  CHECK(*a.fitted_exponent == *b.fitted_exponent);
}

TEST_CASE("Katai diagnostic") {
  const auto d3 = katai_bound_diag(1000, 6);
  CHECK(d3.lhs > 0.0);
  CHECK(d3.rhs > 0.0);
  CHECK(d3.ratio == doctest::Approx(d3.lhs / d3.rhs));
  const auto d4 = katai_bound_diag(10000, 6);
  CHECK(d4.ratio <= 1.5 * d3.ratio);
  const auto d12 = katai_bound_diag(1000, 12);
  CHECK(std::isfinite(d12.lhs));
  CHECK(std::isfinite(d12.rhs));
  // lhs is the plain sum of f_A.
  double s = 0.0;
  for (std::uint64_t n = 1; n <= 1000; ++n) s += f_A(n, 6);
  CHECK(d3.lhs == doctest::Approx(s).epsilon(1e-12));
}
