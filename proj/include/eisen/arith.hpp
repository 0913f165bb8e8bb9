#pragma once

// Rational-integer plumbing: sieves, deterministic primality, integer
// factorization and modular square roots.

#include <cstdint>
#include <utility>
#include <vector>

namespace eisen::arith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n, std::uint64_t* root = nullptr);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// All primes <= limit in increasing order.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

struct PrimePower {
  std::uint64_t p;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 1 in increasing prime order. Trial division
/// by small primes, Miller-Rabin on the cofactor and Pollard-Brent for any
/// composite cofactor that remains.
std::vector<PrimePower> factor(std::uint64_t n);

/// A square root of a modulo the odd prime p, when a is a quadratic residue.
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0).
class SmallestPrimeFactor {
 public:
  explicit SmallestPrimeFactor(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t operator[](std::uint32_t n) const { return spf_[n]; }

  /// Factorization of 1 <= n <= limit, increasing primes.
  void factor(std::uint32_t n, std::vector<PrimePower>& out) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace eisen::arith
