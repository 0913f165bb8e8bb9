#include "eisen/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eisen/analytic.hpp"
#include "eisen/arith.hpp"
#include "eisen/error.hpp"
#include "eisen/parallel.hpp"
#include "eisen/tables.hpp"

namespace eisen {

namespace {

constexpr double kSixth = kPi / 6.0;

void check_x(double x, const char* op) {
  require(std::isfinite(x) && x <= kMaxIdealNorm, std::string(op) + ": x must be finite and <= 10^8");
}

std::uint64_t floor_x(double x) { return x < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(x)); }

}  // namespace

std::vector<PrimeIdeal> prime_ideals_up_to(double x, int threads) {
  check_x(x, "prime_ideals_up_to");
  const std::uint64_t limit = floor_x(x);
  std::vector<PrimeIdeal> ideals;
  if (limit < 2) return ideals;
  const auto table_ptr = PrimeAngleTable::shared(limit, threads);
  const auto primes = table_ptr->primes_through(limit);
  const auto split = table_ptr->split_through(limit);
  const double ramified = eis_arg(canonical_associate(kPi3).value).radians();
  std::size_t next_split = 0;
  // Inert ideals have norm q^2; merge them into the norm order.
  std::vector<std::uint64_t> inert;
  for (std::uint32_t q : primes) {
    if (q % 3 == 2 && std::uint64_t(q) * q <= limit) inert.push_back(std::uint64_t(q) * q);
  }
  std::size_t next_inert = 0;
  auto flush_inert_below = [&](std::uint64_t bound) {
    while (next_inert < inert.size() && inert[next_inert] < bound) {
      ideals.push_back({inert[next_inert], arith::isqrt(inert[next_inert]), 0.0});
      ++next_inert;
    }
  };
  for (std::uint32_t p : primes) {
    flush_inert_below(p);
    if (p == 3) {
      ideals.push_back({3, 3, ramified});
    } else if (p % 3 == 1) {
      const double t = split[next_split++].theta;
      ideals.push_back({p, p, t});
      ideals.push_back({p, p, -t});
    }
  }
  flush_inert_below(std::numeric_limits<std::uint64_t>::max());
  return ideals;
}

SectorCount sector_count(const SectorQuery& q, int threads) {
  require(std::isfinite(q.phi1) && std::isfinite(q.phi2), "sector_count: bounds must be finite");
  require(q.phi1 < q.phi2, "sector_count: require phi1 < phi2");
  require(q.phi1 >= -kSixth - kSectorTolerance && q.phi2 < kSixth,
          "sector_count: require -pi/6 <= phi1 < phi2 < pi/6");
  require(q.x >= 2.0, "sector_count: x must be >= 2");
  const auto ideals = prime_ideals_up_to(q.x, threads);
  SectorCount c;
  for (const auto& id : ideals) {
    if (id.theta >= q.phi1 - kSectorTolerance && id.theta <= q.phi2 + kSectorTolerance) ++c.observed;
  }
  c.expected = 3.0 / kPi * (q.phi2 - q.phi1) * li(q.x);
  return c;
}

CharacterSumValue chi_prime_sum(double x, std::int64_t a, int threads) {
  require(a != 0, "chi_prime_sum: a must be nonzero (a = 0 counts prime ideals)");
  CharacterSumValue v{x, a, 0.0};
  CompensatedSum re, im;
  for (const auto& id : prime_ideals_up_to(x, threads)) {
    const double phase = 6.0 * static_cast<double>(a) * id.theta;
    re.add(std::cos(phase));
    im.add(std::sin(phase));
  }
  v.value = {re.value(), im.value()};
  return v;
}

double chi_prime_sum_decomposed(double x, std::int64_t a, int threads) {
  require(a != 0, "chi_prime_sum_decomposed: a must be nonzero");
  check_x(x, "chi_prime_sum_decomposed");
  const std::uint64_t limit = floor_x(x);
  if (limit < 2) return 0.0;
  const auto table = PrimeAngleTable::shared(limit, threads);
  CompensatedSum s;
  for (const auto& sp : table->split_through(limit)) s.add(2.0 * std::cos(6.0 * static_cast<double>(a) * sp.theta));
  for (std::uint32_t q : table->primes_through(limit)) {
    if (q % 3 == 2 && std::uint64_t(q) * q <= limit) s.add(1.0);
  }
  if (limit >= 3) s.add(a % 2 == 0 ? 1.0 : -1.0);
  return s.value();
}

double ks_uniform_statistic(std::span<const double> samples, double lo, double hi) {
  require(!samples.empty(), "ks_uniform_statistic: no samples");
  require(lo < hi, "ks_uniform_statistic: empty support");
  std::vector<double> v(samples.begin(), samples.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double cdf = std::clamp((v[i] - lo) / (hi - lo), 0.0, 1.0);
    d = std::max({d, (i + 1) / n - cdf, cdf - i / n});
  }
  return d;
}

double theta_equidistribution_stat(double x, int threads) {
  require(x >= 100.0, "theta_equidistribution_stat: x must be >= 100");
  const auto ideals = prime_ideals_up_to(x, threads);
  require(ideals.size() >= 10, "theta_equidistribution_stat: fewer than 10 prime ideals");
  std::vector<double> angles;
  angles.reserve(ideals.size());
  for (const auto& id : ideals) angles.push_back(id.theta);
  return ks_uniform_statistic(angles, -kSixth, kSixth);
}

double distance_to_hexagonal_direction(double angle) {
  const double step = kPi / 3.0;
  const double r = angle - step * std::round(angle / step);
  return std::abs(r);
}

BadCircle bad_circle(double epsilon, std::uint64_t k) {
  require(std::isfinite(epsilon) && epsilon > 0.0 && epsilon < kSixth, "bad_circle: epsilon must lie in (0, pi/6)");
  require(k >= 1, "bad_circle: k must be positive");
  BadCircle bc;
  bc.epsilon = epsilon;
  const double needed = (std::log(static_cast<double>(k)) - std::log(6.0)) / std::log(2.0);
  bc.m = needed <= 0.0 ? 0 : static_cast<int>(std::ceil(needed - 1e-12));
  const double cap = bc.m > 0 ? epsilon / bc.m : 0.0;

  // Generators with argument in (0, cap] have b small relative to a; sieve
  // upward in doubling windows until m primes qualify.
  std::uint64_t lo = 2;
  std::uint64_t hi = 1 << 12;
  while (static_cast<int>(bc.primes.size()) < bc.m) {
    hi = std::min(hi, kBadCircleSearchBound);
    for (std::uint32_t p : arith::primes_up_to(hi)) {
      if (p < lo || p % 3 != 1) continue;
      const double t = split_prime_generator(p).theta_p;
      if (t > 0.0 && t <= cap) {
        bc.primes.push_back(p);
        if (static_cast<int>(bc.primes.size()) == bc.m) break;
      }
    }
    if (static_cast<int>(bc.primes.size()) == bc.m) break;
    if (hi == kBadCircleSearchBound) {
      throw ComputationError("bad_circle: fewer than " + std::to_string(bc.m) +
                             " split primes with theta_p <= epsilon/m below 10^8");
    }
    lo = hi + 1;
    hi *= 2;
  }

  std::uint64_t n = 1;
  for (std::uint64_t p : bc.primes) {
    if (__builtin_mul_overflow(n, p, &n) || n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw OverflowError("bad_circle: product of the selected primes exceeds 2^63");
    }
  }
  bc.n = n;
  bc.points = circle_points(n);
  for (const auto& mu : bc.points.points) {
    bc.max_deviation = std::max(bc.max_deviation, distance_to_hexagonal_direction(eis_arg(mu).radians()));
  }
  const std::uint64_t expected = std::uint64_t(6) << bc.m;
  if (bc.points.count != expected || bc.max_deviation > epsilon + kSectorTolerance) {
    throw ComputationError("bad_circle: verification of the constructed circle failed");
  }
  return bc;
}

}  // namespace eisen
