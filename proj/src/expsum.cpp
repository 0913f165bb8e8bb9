#include "eisen/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eisen/arith.hpp"
#include "eisen/core.hpp"
#include "eisen/error.hpp"
#include "eisen/factor.hpp"
#include "eisen/parallel.hpp"
#include "eisen/tables.hpp"

namespace eisen {

namespace {

constexpr std::uint64_t kBlock = 1u << 15;
constexpr std::uint64_t kFitMinX = 1000;

// f_A(n) for one n from its rational factorization, A = 6a.
double f_from_factors(const std::vector<arith::PrimePower>& factors, const PrimeAngleTable& table,
                      std::int64_t A) {
  double f = 1.0;
  for (const auto& [p, e] : factors) {
    if (p == 3) continue;
    if (p % 3 == 2) {
      if (e % 2) return 0.0;
      continue;
    }
    f *= split_local_factor(table.theta(static_cast<std::uint32_t>(p)), e, A);
  }
  return f;
}

// Sums of f_A(n) over the segments (cut_{k-1}, cut_k], reduced in fixed
// block order.
std::vector<CompensatedSum> segment_sums(std::uint64_t x, std::int64_t A, const std::vector<std::uint64_t>& cuts,
                                         int threads) {
  const PrimeAngleTable table(x, threads);
  const arith::SmallestPrimeFactor spf(static_cast<std::uint32_t>(x));
  const std::size_t blocks = (x + kBlock - 1) / kBlock;
  std::vector<std::vector<CompensatedSum>> partial(blocks, std::vector<CompensatedSum>(cuts.size()));
  for_each_block(blocks, threads, [&](std::size_t blk) {
    std::vector<arith::PrimePower> factors;
    const std::uint64_t lo = blk * kBlock + 1;
    const std::uint64_t hi = std::min(x, (blk + 1) * kBlock);
    std::size_t seg = std::lower_bound(cuts.begin(), cuts.end(), lo) - cuts.begin();
    for (std::uint64_t n = lo; n <= hi; ++n) {
      while (seg < cuts.size() && cuts[seg] < n) ++seg;
      if (seg == cuts.size()) break;
      spf.factor(static_cast<std::uint32_t>(n), factors);
      partial[blk][seg].add(f_from_factors(factors, table, A));
    }
  });
  std::vector<CompensatedSum> sums(cuts.size());
  for (const auto& blk : partial) {
    for (std::size_t k = 0; k < cuts.size(); ++k) sums[k].add(blk[k]);
  }
  return sums;
}

}  // namespace

ExpSumValue exp_sum(std::uint64_t n, std::int64_t A) {
  require(A != 0, "exp_sum: A must be nonzero (S(n, 0) is r_Q(n))");
  const CirclePointSet set = circle_points(n);
  std::complex<double> s = 0.0;
  for (const auto& mu : set.points) {
    s += std::polar(1.0, static_cast<double>(A) * eis_arg(mu).radians());
  }
  return {n, A, s};
}

double split_local_factor(double theta, int alpha, std::int64_t A) {
  double s = 0.0;
  for (int j = 0; j <= alpha; ++j) s += std::cos(static_cast<double>(A) * (alpha - 2 * j) * theta);
  return std::abs(s);
}

ExpSumValue exp_sum_product(std::uint64_t n, std::int64_t A) {
  require(A != 0, "exp_sum_product: A must be nonzero");
  if (A % 6 != 0) return {n, A, 0.0};
  const EisFactorization f = factor_eisenstein(n);
  for (const auto& q : f.inert_factors) {
    if (q.exponent % 2) return {n, A, 0.0};
  }
  // The six units contribute 6; each point carries (1+w)^(alpha3/2), which contributes (-1)^(a*alpha3/2).
  const std::int64_t a = A / 6;
  double value = ((a % 2 != 0) && ((f.alpha3 / 2) % 2 != 0)) ? -6.0 : 6.0;
  for (const auto& s : f.split_factors) {
    double local = 0.0;
    for (int j = 0; j <= s.exp_pi; ++j) {
      local += std::cos(static_cast<double>(A) * (s.exp_pi - 2 * j) * s.prime.theta_p);
    }
    value *= local;
  }
  return {n, A, value};
}

double f_A(std::uint64_t n, std::int64_t A) {
  require(A != 0 && A % 6 == 0, "f_A: A must be a nonzero multiple of 6");
  return std::abs(exp_sum_product(n, A).value.real()) / 6.0;
}

AverageDecayReport avg_exp_sum(std::uint64_t x, std::int64_t A, std::vector<std::uint64_t> checkpoints,
                               int threads) {
  require(A != 0, "avg_exp_sum: A must be nonzero");
  require(!checkpoints.empty(), "avg_exp_sum: checkpoint list is empty");
  require(x >= 1 && x <= kMaxSurveyX, "avg_exp_sum: x must lie in [1, 10^7]");
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  require(checkpoints.front() >= 1 && checkpoints.back() <= x, "avg_exp_sum: checkpoints must lie in [1, x]");

  AverageDecayReport report;
  report.A = A;
  if (A % 6 != 0) {
    for (auto c : checkpoints) report.checkpoints.push_back({c, 0.0});
    return report;
  }
  const auto sums = segment_sums(checkpoints.back(), A, checkpoints, threads);
  CompensatedSum running;
  for (std::size_t k = 0; k < checkpoints.size(); ++k) {
    running.add(sums[k]);
    report.checkpoints.push_back({checkpoints[k], 6.0 * running.value() / static_cast<double>(checkpoints[k])});
  }

  std::vector<std::pair<double, double>> pts;
  for (const auto& c : report.checkpoints) {
    if (c.x >= kFitMinX && c.mean > 0.0) {
      pts.emplace_back(std::log(std::log(static_cast<double>(c.x))), std::log(c.mean));
    }
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0;
    for (auto [u, v] : pts) {
      sx += u;
      sy += v;
    }
    const double mx = sx / pts.size(), my = sy / pts.size();
    double sxx = 0, sxy = 0;
    for (auto [u, v] : pts) {
      sxx += (u - mx) * (u - mx);
      sxy += (u - mx) * (v - my);
    }
    report.fitted_exponent = sxy / sxx;
  }
  return report;
}

KataiDiagnostic katai_bound_diag(std::uint64_t x, std::int64_t A, int threads) {
  require(x >= 16 && x <= kMaxSurveyX, "katai_bound_diag: x must lie in [16, 10^7]");
  require(A != 0 && A % 6 == 0, "katai_bound_diag: A must be a nonzero multiple of 6");
  KataiDiagnostic d;
  d.x = x;
  d.A = A;
  d.lhs = segment_sums(x, A, {x}, threads)[0].value();

  const PrimeAngleTable table(x, threads);
  CompensatedSum prime_sum;
  prime_sum.add(1.0 / 3.0);  // f_A(3) = 1; f_A(2) = 0 and every inert f_A(q) = 0
  for (const auto& s : table.split()) prime_sum.add(split_local_factor(s.theta, 1, A) / s.p);
  const double xd = static_cast<double>(x);
  d.rhs = xd / std::log(xd) * std::exp(prime_sum.value());
  d.ratio = d.lhs / d.rhs;
  return d;
}

}  // namespace eisen
