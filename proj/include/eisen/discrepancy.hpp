#pragma once

// Angular discrepancy of the lattice points on |mu|^2 = n over arcs
// [alpha, beta) with 0 <= alpha < beta <= 2 pi (no wrap-around), the
// Erdos-Turan upper bound, and surveys over representable n.

#include <cstdint>
#include <span>
#include <vector>

#include "eisen/core.hpp"

namespace eisen {

struct Arc {
  double alpha = 0.0;
  double beta = 0.0;
};

struct DiscrepancyResult {
  std::uint64_t n = 0;
  std::uint64_t count = 0;  // r_Q(n)
  double delta = 0.0;
  Arc witness;  // [alpha, beta) attaining delta to within one ulp of arc length
};

/// Point angles mapped into [0, 2 pi), sorted.
std::vector<double> positive_angles(std::span<const EisensteinInt> points);

/// Exact sup over arcs for sorted angles in [0, 2 pi).
DiscrepancyResult discrepancy_of_angles(std::span<const double> sorted_angles);

inline constexpr std::uint64_t kMaxDiscrepancyPoints = 10'000;

DiscrepancyResult discrepancy_exact(std::uint64_t n);

/// |count in [alpha, beta) / N - (beta - alpha) / 2 pi| for one arc.
double arc_deviation(std::span<const double> sorted_angles, Arc arc);

/// Largest deviation over `samples` uniformly random arcs; never exceeds the
/// exact discrepancy.
double random_arc_lower_bound(std::span<const double> sorted_angles, std::size_t samples, std::uint64_t seed);

inline constexpr double kErdosTuranConstant = 4.0;

/// C (1/T + sum_{k=1}^T |Z_k| / k), Z_k = (1/N) sum_j exp(i k phi_j).
double erdos_turan_bound(std::uint64_t n, std::uint64_t T, double C = kErdosTuranConstant);

/// #{n <= x : r_Q(n) > 0}.
std::uint64_t b_q(std::uint64_t x);

/// Indicator table of representable n in [0, x].
std::vector<bool> representable_up_to(std::uint64_t x);

/// log(pi) / log(2) - 1, the supremum of admissible gamma.
double gamma_threshold();

struct SurveyReport {
  std::uint64_t x = 0;
  double gamma = 0.0;
  std::uint64_t b_q = 0;
  std::uint64_t m_gamma = 0;  // #{n <= x representable : Delta(n) > r_Q(n)^{-gamma}}
  double fraction = 0.0;
};

inline constexpr std::uint64_t kMaxSurveyDiscrepancyX = 1'000'000;

SurveyReport discrepancy_survey(std::uint64_t x, double gamma, int threads = 0);

}  // namespace eisen
