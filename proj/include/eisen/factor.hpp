#pragma once

// Prime splitting in Z[w], factorization of rational integers over Z[w],
// and enumeration of the lattice points on the circle |mu|^2 = n.

#include <cstdint>
#include <optional>
#include <vector>

#include "eisen/core.hpp"

namespace eisen {

enum class PrimeClass { Split, Inert, Ramified };

const char* to_string(PrimeClass c);

struct PrimeSplitRecord {
  std::uint64_t p = 0;
  PrimeClass cls = PrimeClass::Inert;
  std::optional<EisensteinInt> pi;  // generator; absent for inert primes
  double theta_p = 0.0;             // argument of pi, in [0, pi/6]
  double theta_ideal = 0.0;         // canonical argument of (pi), in [-pi/6, pi/6)
};

struct SplitFactor {
  PrimeSplitRecord prime;
  int exp_pi = 0;
  int exp_conj = 0;
};

struct InertFactor {
  std::uint64_t q = 0;
  int exponent = 0;
};

/// n = w^unit_power * (1+w)^alpha3 * prod pi^e * conj(pi)^e * prod q^f.
struct EisFactorization {
  int unit_power = 0;
  int alpha3 = 0;
  std::vector<SplitFactor> split_factors;
  std::vector<InertFactor> inert_factors;
};

struct CirclePointSet {
  std::uint64_t n = 0;
  std::vector<EisensteinInt> points;  // sorted by angle in [-pi, pi), then by a
  std::uint64_t count = 0;
};

/// The generator of the ramified prime ideal above 3.
inline constexpr EisensteinInt kPi3{1, 1};

PrimeClass classify_prime(std::uint64_t p);

/// Generator of norm p with argument in [0, pi/6], for p = 1 (mod 3).
PrimeSplitRecord split_prime_generator(std::uint64_t p);

/// Splitting record for any rational prime (generator (1,1) for p = 3).
PrimeSplitRecord prime_record(std::uint64_t p);

EisFactorization factor_eisenstein(std::uint64_t n);

/// Product of all factors and the unit, which must equal (n, 0).
EisensteinInt recompose(const EisFactorization& f);

std::uint64_t r_q(std::uint64_t n);

std::vector<EisensteinInt> sorted_by_angle(std::vector<EisensteinInt> points);

CirclePointSet circle_points(std::uint64_t n);

/// Independent oracle: solves a^2 + ab + b^2 = n for every admissible b.
/// Limited to n <= 10^8.
CirclePointSet circle_points_bruteforce(std::uint64_t n);

}  // namespace eisen
