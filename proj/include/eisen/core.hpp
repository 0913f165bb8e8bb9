#pragma once

// Exact arithmetic in Z[w], w = exp(i*pi/3). An element a + b*w is stored
// by its integer coordinates; w^2 = w - 1 fixes the ring law.

#include <compare>
#include <complex>
#include <cstdint>
#include <numbers>

namespace eisen {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

struct EisensteinInt {
  std::int64_t a = 0;  // coefficient of 1
  std::int64_t b = 0;  // coefficient of w

  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
  friend constexpr auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;
};

/// An angle in radians, reduced to [-pi, pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  constexpr double radians() const { return radians_; }
  /// The same direction expressed in [0, 2*pi).
  double positive() const;

 private:
  double radians_ = 0.0;
};

EisensteinInt eis_mul(EisensteinInt x, EisensteinInt y);
EisensteinInt eis_conj(EisensteinInt x);
std::uint64_t eis_norm(EisensteinInt x);

inline EisensteinInt operator*(EisensteinInt x, EisensteinInt y) { return eis_mul(x, y); }

/// w^k for any integer k; the six units cycle with period 6.
EisensteinInt unit(int k);

/// Embedding into C: a + b/2 + i*b*sqrt(3)/2.
std::complex<double> to_complex(EisensteinInt x);

/// arg x for x != 0.
Angle eis_arg(EisensteinInt x);

/// True iff arg x lies in [-pi/6, pi/6). Exact integer test.
bool in_half_open_sector(EisensteinInt x);

/// True iff arg x lies in [0, pi/6]. Exact integer test.
bool in_closed_first_sector(EisensteinInt x);

struct CanonicalAssociate {
  EisensteinInt value;
  int unit_index = 0;  // value == w^unit_index * x
};

/// The unique associate of x with argument in [-pi/6, pi/6).
CanonicalAssociate canonical_associate(EisensteinInt x);

}  // namespace eisen
