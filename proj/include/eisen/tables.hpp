#pragma once

// Precomputed rational primes up to a limit together with the argument
// theta_p in (0, pi/6) of every split prime. Built once, then read-only.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace eisen {

struct SplitPrimeAngle {
  std::uint32_t p;
  double theta;  // in (0, pi/6)
};

class PrimeAngleTable {
 public:
  explicit PrimeAngleTable(std::uint64_t limit, int threads = 0);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  const std::vector<SplitPrimeAngle>& split() const { return split_; }

  /// Prefixes holding the entries with p <= bound.
  std::span<const std::uint32_t> primes_through(std::uint64_t bound) const;
  std::span<const SplitPrimeAngle> split_through(std::uint64_t bound) const;

  /// theta_p of a split prime p <= limit.
  double theta(std::uint32_t p) const;

  /// A table covering at least `limit`, reused across calls while it is large
  /// enough; a larger request replaces it.
  static std::shared_ptr<const PrimeAngleTable> shared(std::uint64_t limit, int threads = 0);

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
  std::vector<SplitPrimeAngle> split_;
};

}  // namespace eisen
