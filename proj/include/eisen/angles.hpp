#pragma once

// Angles of prime ideals of Z[w]: sector counts against the prime ideal
// density, sums of the Hecke characters chi^{6a} over prime ideals,
// equidistribution statistics and the construction of badly distributed
// circles.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "eisen/factor.hpp"

namespace eisen {

struct PrimeIdeal {
  std::uint64_t norm = 0;
  std::uint64_t p = 0;  // rational prime below
  double theta = 0.0;   // canonical argument in [-pi/6, pi/6)
};

inline constexpr double kMaxIdealNorm = 1e8;

/// All prime ideals of norm <= x ordered by norm; the two ideals above a
/// split prime appear as +theta_p then -theta_p.
std::vector<PrimeIdeal> prime_ideals_up_to(double x, int threads = 0);

struct SectorQuery {
  double x = 2.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

struct SectorCount {
  std::uint64_t observed = 0;
  double expected = 0.0;  // (3/pi)(phi2 - phi1) Li(x)
};

/// Closed-interval membership phi1 <= theta <= phi2, widened by 1e-12.
SectorCount sector_count(const SectorQuery& q, int threads = 0);

struct CharacterSumValue {
  double x = 0.0;
  std::int64_t a = 0;
  std::complex<double> value;
};

inline constexpr double kSectorTolerance = 1e-12;

/// sum over prime ideals of norm <= x of exp(6 i a theta).
CharacterSumValue chi_prime_sum(double x, std::int64_t a, int threads = 0);

/// The same sum assembled from rational primes:
/// sum_{p = 1 (3)} 2 cos(6 a theta_p) + #{q = 2 (3): q^2 <= x} + (-1)^a [3 <= x].
double chi_prime_sum_decomposed(double x, std::int64_t a, int threads = 0);

/// Kolmogorov-Smirnov distance between the empirical law of the samples
/// and the uniform law on [lo, hi).
double ks_uniform_statistic(std::span<const double> samples, double lo, double hi);

/// KS distance of the prime ideal angles of norm <= x from U[-pi/6, pi/6).
double theta_equidistribution_stat(double x, int threads = 0);

struct BadCircle {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> primes;
  int m = 0;
  double epsilon = 0.0;
  CirclePointSet points;
  double max_deviation = 0.0;  // max distance of a point angle to a multiple of pi/3
};

inline constexpr std::uint64_t kBadCircleSearchBound = 100'000'000;

/// Circle with at least k points all within epsilon of the six directions
/// k*pi/3, built from the m smallest split primes with theta_p in (0, epsilon/m].
BadCircle bad_circle(double epsilon, std::uint64_t k);

/// Distance from an angle to the nearest multiple of pi/3.
double distance_to_hexagonal_direction(double angle);

}  // namespace eisen
