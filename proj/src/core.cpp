#include "eisen/core.hpp"

#include <cmath>
#include <limits>

#include "eisen/error.hpp"

namespace eisen {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* op) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError(std::string(op) + ": result exceeds 64-bit coordinates");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Angle::Angle(double radians) {
  double r = std::remainder(radians, 2.0 * kPi);  // [-pi, pi]
  if (r >= kPi) r -= 2.0 * kPi;
  radians_ = r;
}

double Angle::positive() const {
  if (radians_ >= 0.0) return radians_;
  double r = radians_ + 2.0 * kPi;
  // Tiny negative angles can round up to exactly 2*pi.
  if (r >= 2.0 * kPi) r = std::nextafter(2.0 * kPi, 0.0);
  return r;
}

EisensteinInt eis_mul(EisensteinInt x, EisensteinInt y) {
  const i128 ac = i128(x.a) * y.a;
  const i128 bd = i128(x.b) * y.b;
  const i128 ad = i128(x.a) * y.b;
  const i128 bc = i128(x.b) * y.a;
  return {narrow(ac - bd, "eis_mul"), narrow(ad + bc + bd, "eis_mul")};
}

EisensteinInt eis_conj(EisensteinInt x) {
  return {narrow(i128(x.a) + x.b, "eis_conj"), narrow(-i128(x.b), "eis_conj")};
}

std::uint64_t eis_norm(EisensteinInt x) {
  // a^2 + ab + b^2 = ((2a+b)^2 + 3b^2) / 4 is nonnegative, so compute in
  // unsigned 128-bit to stay exact for |coords| <= 2^62.
  const i128 v = i128(x.a) * x.a + i128(x.a) * x.b + i128(x.b) * x.b;
  if (v > static_cast<i128>(std::numeric_limits<std::uint64_t>::max())) {
    throw OverflowError("eis_norm: norm exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

EisensteinInt unit(int k) {
  static constexpr EisensteinInt units[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return units[((k % 6) + 6) % 6];
}

std::complex<double> to_complex(EisensteinInt x) {
  const double a = static_cast<double>(x.a);
  const double b = static_cast<double>(x.b);
  return {a + 0.5 * b, 0.5 * kSqrt3 * b};
}

Angle eis_arg(EisensteinInt x) {
  require(x.a != 0 || x.b != 0, "eis_arg: argument of zero is undefined");
  // atan2(b*sqrt3/2, a + b/2) scaled by 2 in both slots.
  const double y = kSqrt3 * static_cast<double>(x.b);
  const double r = 2.0 * static_cast<double>(x.a) + static_cast<double>(x.b);
  return Angle(std::atan2(y, r));
}

bool in_half_open_sector(EisensteinInt x) {
  // With X = 2a + b > 0 the sector is -X <= 3b < X, i.e. b < a and a + 2b >= 0.
  return x.b < x.a && i128(x.a) + 2 * i128(x.b) >= 0;
}

bool in_closed_first_sector(EisensteinInt x) {
  return (x.a != 0 || x.b != 0) && x.b >= 0 && x.b <= x.a;
}

CanonicalAssociate canonical_associate(EisensteinInt x) {
  require(x.a != 0 || x.b != 0, "canonical_associate: zero has no associates");
  EisensteinInt y = x;
  for (int k = 0; k < 6; ++k) {
    if (in_half_open_sector(y)) return {y, k};
    y = eis_mul(unit(1), y);
  }
  throw ComputationError("canonical_associate: no associate in [-pi/6, pi/6)");
}

}  // namespace eisen
