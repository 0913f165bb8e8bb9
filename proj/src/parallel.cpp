#include "eisen/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eisen {

namespace {

std::atomic<int> g_default_threads{0};

int env_threads() {
  if (const char* s = std::getenv("EISEN_THREADS")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 0;
}

}  // namespace

int default_threads() {
  if (const int v = g_default_threads.load(); v > 0) return v;
  if (const int v = env_threads(); v > 0) return v;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(int threads) { g_default_threads.store(threads > 0 ? threads : 0); }

int resolve_threads(int requested) { return requested > 0 ? requested : default_threads(); }

void for_each_block(std::size_t blocks, int threads, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, resolve_threads(threads)));
  if (workers == 1 || blocks <= 1) {
    for (std::size_t i = 0; i < blocks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= blocks) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(std::min(workers, blocks));
  for (std::size_t t = 0; t < std::min(workers, blocks); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

void CompensatedSum::add(const CompensatedSum& other) {
  add(other.sum_);
  add(other.compensation_);
}

}  // namespace eisen
