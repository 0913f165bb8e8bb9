#pragma once

// Exponential sums S(n, A) = sum over |mu|^2 = n of exp(i A arg mu), the
// multiplicative normalisation f_A(n) = |S(n, A)| / 6, and the averaged
// decay of |S(n, A)| over n <= x.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace eisen {

struct ExpSumValue {
  std::uint64_t n = 0;
  std::int64_t A = 0;
  std::complex<double> value;
};

/// Direct summation of exp(i A arg mu) over circle_points(n).
ExpSumValue exp_sum(std::uint64_t n, std::int64_t A);

/// The same sum evaluated from the factorization of n. Exactly zero when
/// 6 does not divide A; otherwise real.
ExpSumValue exp_sum_product(std::uint64_t n, std::int64_t A);

/// |sum_{j=0}^{alpha} exp(i A (alpha - 2j) theta)|, the local factor of a
/// split prime power p^alpha with argument theta.
double split_local_factor(double theta, int alpha, std::int64_t A);

/// f_A(n) = |S(n, A)| / 6 via the factorization product; requires 6 | A.
double f_A(std::uint64_t n, std::int64_t A);

struct DecayCheckpoint {
  std::uint64_t x = 0;
  double mean = 0.0;  // (1/x) sum_{n <= x} |S(n, A)|
};

struct AverageDecayReport {
  std::int64_t A = 0;
  std::vector<DecayCheckpoint> checkpoints;
  /// Least-squares slope of log(mean) against log(log x) over checkpoints
  /// with x >= 1000 and mean > 0; empty when fewer than two qualify.
  std::optional<double> fitted_exponent;
};

inline constexpr std::uint64_t kMaxSurveyX = 10'000'000;

AverageDecayReport avg_exp_sum(std::uint64_t x, std::int64_t A, std::vector<std::uint64_t> checkpoints,
                               int threads = 0);

struct KataiDiagnostic {
  std::uint64_t x = 0;
  std::int64_t A = 0;
  double lhs = 0.0;  // sum_{n <= x} f_A(n)
  double rhs = 0.0;  // (x / log x) exp(sum_{p <= x} f_A(p) / p)
  double ratio = 0.0;
};

KataiDiagnostic katai_bound_diag(std::uint64_t x, std::int64_t A, int threads = 0);

}  // namespace eisen
