#include <cmath>
#include <random>

#include "doctest.h"
#include "eisen/core.hpp"
#include "eisen/error.hpp"

using namespace eisen;

namespace {

// Reference product straight from the defining relation w^2 = w - 1.
EisensteinInt naive_mul(EisensteinInt x, EisensteinInt y) {
  const std::int64_t c0 = x.a * y.a, c1 = x.a * y.b + x.b * y.a, c2 = x.b * y.b;
  return {c0 - c2, c1 + c2};
}

}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(eis_mul({1, 0}, {5, -3}) == EisensteinInt{5, -3});
  CHECK(eis_mul({0, 1}, {0, 1}) == EisensteinInt{-1, 1});
  const auto p = eis_mul({1, 1}, {2, -1});
  CHECK(eis_norm(p) == 9);
  CHECK(eis_norm({1, 1}) * eis_norm({2, -1}) == 9);
}

TEST_CASE("conjugation examples") {
  CHECK(eis_conj({0, 1}) == EisensteinInt{1, -1});
  CHECK(eis_conj({3, -1}) == EisensteinInt{2, 1});
  CHECK(eis_mul({3, -1}, eis_conj({3, -1})) == EisensteinInt{7, 0});
  CHECK(eis_conj({42, 0}) == EisensteinInt{42, 0});
}

TEST_CASE("norm examples") {
  CHECK(eis_norm({12, 1}) == 157);
  CHECK(eis_norm({0, 0}) == 0);
  CHECK(eis_norm({2, 1}) == 7);
}

TEST_CASE("units") {
  const EisensteinInt expected[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  for (int k = 0; k < 6; ++k) {
    CHECK(unit(k) == expected[k]);
    CHECK(eis_norm(unit(k)) == 1);
    EisensteinInt p{1, 0};
    for (int j = 0; j < 6; ++j) p = eis_mul(p, unit(k));
    CHECK(p == EisensteinInt{1, 0});
  }
  CHECK(unit(-1) == unit(5));
  CHECK(unit(13) == unit(1));
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const EisensteinInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
    CHECK(eis_mul(x, y) == naive_mul(x, y));
    CHECK(eis_mul(x, y) == eis_mul(y, x));
    CHECK(eis_norm(eis_mul(x, y)) == eis_norm(x) * eis_norm(y));
    CHECK(eis_norm(eis_conj(x)) == eis_norm(x));
    CHECK(eis_conj(eis_conj(x)) == x);
    const auto xx = eis_mul(x, eis_conj(x));
    CHECK(xx == EisensteinInt{static_cast<std::int64_t>(eis_norm(x)), 0});
    const auto z = to_complex(x);
    CHECK(std::norm(z) == doctest::Approx(static_cast<double>(eis_norm(x))).epsilon(1e-13));
    if (x != EisensteinInt{}) {
      CHECK(eis_norm(x) > 0);
      const double ref = std::atan2(x.b * kSqrt3 / 2.0, x.a + x.b / 2.0);
      // Same direction; atan2 returns +pi where the reduced angle is -pi.
      CHECK(std::abs(std::remainder(eis_arg(x).radians() - ref, 2 * kPi)) < 1e-15);
    }
  }
}

TEST_CASE("norm zero only at the origin") {
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) CHECK((eis_norm({a, b}) == 0) == (a == 0 && b == 0));
}

TEST_CASE("overflow is reported") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(eis_mul({big, 0}, {4, 0}), OverflowError);
  CHECK_THROWS_AS(eis_norm({big, big}), OverflowError);
  CHECK_THROWS_AS(eis_conj({INT64_MAX, 1}), OverflowError);
  CHECK_THROWS_AS(eis_arg({0, 0}), PreconditionError);
}

TEST_CASE("exact sector tests agree with floating angles") {
  for (std::int64_t a = -30; a <= 30; ++a) {
    for (std::int64_t b = -30; b <= 30; ++b) {
      if (a == 0 && b == 0) continue;
      const double t = eis_arg({a, b}).radians();
      // Boundary directions are decided exactly; skip them in the float comparison.
      const bool on_edge = std::abs(std::abs(t) - kPi / 6) < 1e-12 || std::abs(t) < 1e-12;
      if (on_edge) continue;
      CHECK(in_half_open_sector({a, b}) == (t >= -kPi / 6 && t < kPi / 6));
      CHECK(in_closed_first_sector({a, b}) == (t >= 0 && t <= kPi / 6));
    }
  }
  CHECK(in_half_open_sector({2, -1}));
  CHECK_FALSE(in_half_open_sector({1, 1}));
  CHECK(in_closed_first_sector({1, 1}));
  CHECK(in_closed_first_sector({5, 0}));
}

TEST_CASE("canonical associate") {
  auto c = canonical_associate({1, 0});
  CHECK(c.value == EisensteinInt{1, 0});
  CHECK(c.unit_index == 0);
  c = canonical_associate({1, 1});
  CHECK(c.value == EisensteinInt{2, -1});
  CHECK(eis_arg(c.value).radians() == doctest::Approx(-kPi / 6).epsilon(1e-15));
  c = canonical_associate({0, 1});
  CHECK(c.value == EisensteinInt{1, 0});
  for (std::int64_t a = -15; a <= 15; ++a) {
    for (std::int64_t b = -15; b <= 15; ++b) {
      if (a == 0 && b == 0) continue;
      const auto r = canonical_associate({a, b});
      CHECK(in_half_open_sector(r.value));
      CHECK(eis_mul(unit(r.unit_index), {a, b}) == r.value);
      // Every associate has the same representative.
      CHECK(canonical_associate(eis_mul(unit(3), {a, b})).value == r.value);
    }
  }
}

TEST_CASE("angle reduction") {
  CHECK(Angle(3 * kPi).radians() == doctest::Approx(-kPi));
  CHECK(Angle(-kPi).radians() == doctest::Approx(-kPi));
  CHECK(Angle(-0.5).positive() == doctest::Approx(2 * kPi - 0.5));
  CHECK(Angle(-1e-300).positive() < 2 * kPi);
  CHECK(Angle(0.25).positive() == 0.25);
}
