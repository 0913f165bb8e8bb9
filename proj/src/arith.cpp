#include "eisen/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eisen/error.hpp"

namespace eisen::arith {

namespace {

using u128 = unsigned __int128;

constexpr std::uint32_t kTrialLimit = 1u << 12;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Pollard-Brent for an odd composite n; returns a nontrivial divisor.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(std::uint64_t n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  std::uint64_t root = 0;
  if (is_square(n, &root)) {
    factor_large(root, out);
    factor_large(root, out);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n, std::uint64_t* root) {
  const std::uint64_t r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  require(limit <= 0xFFFFFFFFull, "primes_up_to: limit exceeds 32 bits");
  // Odd-only sieve: index i stands for 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  primes.reserve(static_cast<std::size_t>(1.1 * limit / std::log(static_cast<double>(limit))) + 16);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return primes;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  require(n >= 1, "factor: n must be positive");
  std::vector<PrimePower> out;
  static const std::vector<std::uint32_t> small = primes_up_to(kTrialLimit);
  for (std::uint32_t p : small) {
    if (static_cast<u128>(p) * p > n) break;
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n == 1) return out;
  std::vector<PrimePower> large;
  factor_large(n, large);
  std::sort(large.begin(), large.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.p < y.p; });
  for (const auto& pp : large) {
    if (!out.empty() && out.back().p == pp.p) {
      out.back().exponent += pp.exponent;
    } else {
      out.push_back(pp);
    }
  }
  return out;
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (p == 2 || a == 0) return a;
  require(powmod(a, (p - 1) / 2, p) == 1, "sqrt_mod_prime: not a quadratic residue");
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

SmallestPrimeFactor::SmallestPrimeFactor(std::uint32_t limit) : limit_(limit), spf_(std::size_t(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i]) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (!spf_[j]) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

void SmallestPrimeFactor::factor(std::uint32_t n, std::vector<PrimePower>& out) const {
  out.clear();
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
}

}  // namespace eisen::arith
