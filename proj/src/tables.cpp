#include "eisen/tables.hpp"

#include <algorithm>
#include <mutex>

#include "eisen/arith.hpp"
#include "eisen/error.hpp"
#include "eisen/factor.hpp"
#include "eisen/parallel.hpp"

namespace eisen {

PrimeAngleTable::PrimeAngleTable(std::uint64_t limit, int threads)
    : limit_(limit), primes_(arith::primes_up_to(limit)) {
  for (std::uint32_t p : primes_) {
    if (p % 3 == 1) split_.push_back({p, 0.0});
  }
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (split_.size() + kBlock - 1) / kBlock;
  for_each_block(blocks, threads, [&](std::size_t blk) {
    const std::size_t end = std::min(split_.size(), (blk + 1) * kBlock);
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      split_[i].theta = split_prime_generator(split_[i].p).theta_p;
    }
  });
}

std::span<const std::uint32_t> PrimeAngleTable::primes_through(std::uint64_t bound) const {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound,
                                    [](std::uint64_t v, std::uint32_t p) { return v < p; });
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::span<const SplitPrimeAngle> PrimeAngleTable::split_through(std::uint64_t bound) const {
  const auto end = std::upper_bound(split_.begin(), split_.end(), bound,
                                    [](std::uint64_t v, const SplitPrimeAngle& s) { return v < s.p; });
  return {split_.data(), static_cast<std::size_t>(end - split_.begin())};
}

std::shared_ptr<const PrimeAngleTable> PrimeAngleTable::shared(std::uint64_t limit, int threads) {
  static std::mutex mu;
  static std::shared_ptr<const PrimeAngleTable> cached;
  std::lock_guard lock(mu);
  if (!cached || cached->limit() < limit) cached = std::make_shared<const PrimeAngleTable>(limit, threads);
  return cached;
}

double PrimeAngleTable::theta(std::uint32_t p) const {
  auto it = std::lower_bound(split_.begin(), split_.end(), p,
                             [](const SplitPrimeAngle& s, std::uint32_t v) { return s.p < v; });
  require(it != split_.end() && it->p == p, "PrimeAngleTable: " + std::to_string(p) + " is not a tabulated split prime");
  return it->theta;
}

}  // namespace eisen
