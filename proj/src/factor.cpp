#include "eisen/factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eisen/arith.hpp"
#include "eisen/error.hpp"

namespace eisen {

namespace {

constexpr std::uint64_t kMaxCircleNorm = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
constexpr std::uint64_t kBruteForceLimit = 100'000'000;
constexpr std::uint64_t kScanFallbackLimit = 10'000'000;

EisensteinInt power(EisensteinInt x, int e) {
  EisensteinInt result{1, 0};
  for (int i = 0; i < e; ++i) result = eis_mul(result, x);
  return result;
}

EisensteinInt real(std::uint64_t v) { return {static_cast<std::int64_t>(v), 0}; }

// u^2 + 3v^2 = p via Cornacchia, then a + bw = (u - v) + 2v*w.
std::optional<EisensteinInt> cornacchia(std::uint64_t p) {
  std::uint64_t r = arith::sqrt_mod_prime(p - 3, p);
  if (r == 0) return std::nullopt;
  std::uint64_t x = p;
  std::uint64_t y = r;
  while (static_cast<unsigned __int128>(y) * y > p) {
    const std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  const std::uint64_t u = y;
  const std::uint64_t rest = p - u * u;
  if (rest % 3) return std::nullopt;
  std::uint64_t v = 0;
  if (!arith::is_square(rest / 3, &v)) return std::nullopt;
  const auto ui = static_cast<std::int64_t>(u);
  const auto vi = static_cast<std::int64_t>(v);
  return EisensteinInt{ui - vi, 2 * vi};
}

// Direct scan b = 1..floor(sqrt(4p/3)) solving the quadratic in a.
std::optional<EisensteinInt> scan_generator(std::uint64_t p) {
  const std::uint64_t bmax = arith::isqrt(4 * p / 3);
  for (std::uint64_t b = 1; b <= bmax; ++b) {
    const std::uint64_t d = 4 * p - 3 * b * b;
    std::uint64_t s = 0;
    if (!arith::is_square(d, &s) || s < b || (s - b) % 2 != 0) continue;
    return EisensteinInt{static_cast<std::int64_t>((s - b) / 2), static_cast<std::int64_t>(b)};
  }
  return std::nullopt;
}

// The unique element among the 12 associates of x and conj(x) with
// argument in [0, pi/6].
EisensteinInt first_sector_representative(EisensteinInt x) {
  for (EisensteinInt y : {x, eis_conj(x)}) {
    for (int k = 0; k < 6; ++k) {
      const EisensteinInt z = eis_mul(unit(k), y);
      if (in_closed_first_sector(z)) return z;
    }
  }
  throw ComputationError("split_prime_generator: no associate in [0, pi/6]");
}

}  // namespace

const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::Split:
      return "split";
    case PrimeClass::Inert:
      return "inert";
    case PrimeClass::Ramified:
      return "ramified";
  }
  return "?";
}

PrimeClass classify_prime(std::uint64_t p) {
  require(arith::is_prime(p), "classify_prime: " + std::to_string(p) + " is not prime");
  if (p == 3) return PrimeClass::Ramified;
  if (p % 3 == 1) return PrimeClass::Split;
  return PrimeClass::Inert;
}

PrimeSplitRecord split_prime_generator(std::uint64_t p) {
  require(classify_prime(p) == PrimeClass::Split,
          "split_prime_generator: " + std::to_string(p) + " is not 1 mod 3");
  std::optional<EisensteinInt> g = cornacchia(p);
  if (!g && p < kScanFallbackLimit) g = scan_generator(p);
  if (!g || eis_norm(*g) != p) {
    throw ComputationError("split_prime_generator: no generator found for " + std::to_string(p));
  }
  const EisensteinInt pi = first_sector_representative(*g);
  PrimeSplitRecord rec;
  rec.p = p;
  rec.cls = PrimeClass::Split;
  rec.pi = pi;
  rec.theta_p = eis_arg(pi).radians();
  rec.theta_ideal = rec.theta_p;  // (0, pi/6) is inside [-pi/6, pi/6)
  return rec;
}

PrimeSplitRecord prime_record(std::uint64_t p) {
  switch (classify_prime(p)) {
    case PrimeClass::Split:
      return split_prime_generator(p);
    case PrimeClass::Ramified: {
      PrimeSplitRecord rec;
      rec.p = 3;
      rec.cls = PrimeClass::Ramified;
      rec.pi = kPi3;
      rec.theta_p = kPi / 6.0;
      rec.theta_ideal = eis_arg(canonical_associate(kPi3).value).radians();
      return rec;
    }
    case PrimeClass::Inert:
      break;
  }
  PrimeSplitRecord rec;
  rec.p = p;
  rec.cls = PrimeClass::Inert;
  return rec;
}

EisFactorization factor_eisenstein(std::uint64_t n) {
  require(n >= 1, "factor_eisenstein: n must be positive");
  require(n <= kMaxCircleNorm, "factor_eisenstein: n exceeds 2^63 - 1");
  EisFactorization f;
  for (const auto& [p, e] : arith::factor(n)) {
    switch (classify_prime(p)) {
      case PrimeClass::Ramified:
        f.alpha3 = 2 * e;  // 3 = w^5 (1+w)^2
        break;
      case PrimeClass::Split:
        f.split_factors.push_back({split_prime_generator(p), e, e});
        break;
      case PrimeClass::Inert:
        f.inert_factors.push_back({p, e});
        break;
    }
  }
  f.unit_power = 0;
  const EisensteinInt without_unit = recompose(f);
  for (int k = 0; k < 6; ++k) {
    if (eis_mul(unit(k), without_unit) == real(n)) {
      f.unit_power = k;
      return f;
    }
  }
  throw ComputationError("factor_eisenstein: recomposition failed for " + std::to_string(n));
}

EisensteinInt recompose(const EisFactorization& f) {
  // Rational parts first keep every partial product's norm <= n.
  EisensteinInt r{1, 0};
  for (const auto& q : f.inert_factors) r = eis_mul(r, power(real(q.q), q.exponent));
  for (const auto& s : f.split_factors) {
    const EisensteinInt pi = *s.prime.pi;
    r = eis_mul(r, eis_mul(power(pi, s.exp_pi), power(eis_conj(pi), s.exp_conj)));
  }
  r = eis_mul(r, power(kPi3, f.alpha3));
  return eis_mul(unit(f.unit_power), r);
}

std::uint64_t r_q(std::uint64_t n) {
  require(n >= 1, "r_q: n must be positive");
  std::uint64_t count = 6;
  for (const auto& [p, e] : arith::factor(n)) {
    if (p == 3) continue;
    if (p % 3 == 2) {
      if (e % 2) return 0;
    } else {
      count *= static_cast<std::uint64_t>(e + 1);
    }
  }
  return count;
}

std::vector<EisensteinInt> sorted_by_angle(std::vector<EisensteinInt> points) {
  std::vector<std::pair<double, EisensteinInt>> keyed;
  keyed.reserve(points.size());
  for (const auto& p : points) keyed.emplace_back(eis_arg(p).radians(), p);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.a < y.second.a;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) points[i] = keyed[i].second;
  return points;
}

CirclePointSet circle_points(std::uint64_t n) {
  const EisFactorization f = factor_eisenstein(n);
  CirclePointSet set;
  set.n = n;
  for (const auto& q : f.inert_factors) {
    if (q.exponent % 2) return set;
  }
  EisensteinInt base{1, 0};
  for (const auto& q : f.inert_factors) base = eis_mul(base, power(real(q.q), q.exponent / 2));
  base = eis_mul(base, power(kPi3, f.alpha3 / 2));

  std::vector<EisensteinInt> partial{base};
  for (const auto& s : f.split_factors) {
    const EisensteinInt pi = *s.prime.pi;
    const EisensteinInt pic = eis_conj(pi);
    const int alpha = s.exp_pi;
    std::vector<EisensteinInt> choices;
    for (int m = 0; m <= alpha; ++m) choices.push_back(eis_mul(power(pi, m), power(pic, alpha - m)));
    std::vector<EisensteinInt> next;
    next.reserve(partial.size() * choices.size());
    for (const auto& x : partial) {
      for (const auto& c : choices) next.push_back(eis_mul(x, c));
    }
    partial = std::move(next);
  }
  set.points.reserve(6 * partial.size());
  for (const auto& x : partial) {
    for (int k = 0; k < 6; ++k) set.points.push_back(eis_mul(unit(k), x));
  }
  set.points = sorted_by_angle(std::move(set.points));
  set.count = set.points.size();
  return set;
}

CirclePointSet circle_points_bruteforce(std::uint64_t n) {
  require(n >= 1, "circle_points_bruteforce: n must be positive");
  require(n <= kBruteForceLimit, "circle_points_bruteforce: n exceeds 10^8");
  CirclePointSet set;
  set.n = n;
  const auto bmax = static_cast<std::int64_t>(arith::isqrt(4 * n / 3));
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    const std::int64_t d = 4 * static_cast<std::int64_t>(n) - 3 * b * b;
    if (d < 0) continue;
    std::uint64_t s = 0;
    if (!arith::is_square(static_cast<std::uint64_t>(d), &s)) continue;
    const auto si = static_cast<std::int64_t>(s);
    for (std::int64_t root : {si, -si}) {
      if ((root - b) % 2 != 0) continue;
      set.points.push_back({(root - b) / 2, b});
      if (si == 0) break;
    }
  }
  set.points = sorted_by_angle(std::move(set.points));
  set.count = set.points.size();
  return set;
}

}  // namespace eisen
