#pragma once

// Deterministic block parallelism. Work is cut into blocks whose boundaries
// do not depend on the worker count; callers reduce per-block results in
// block order, so outputs are bit-identical for any number of threads.

#include <cstddef>
#include <functional>

namespace eisen {

/// Worker count used when an operation is called with threads <= 0:
/// the last value passed to set_default_threads, else $EISEN_THREADS,
/// else the hardware concurrency.
int default_threads();
void set_default_threads(int threads);
int resolve_threads(int requested);

void for_each_block(std::size_t blocks, int threads, const std::function<void(std::size_t)>& body);

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x);
  void add(const CompensatedSum& other);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace eisen
