#include "eisen/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "eisen/arith.hpp"
#include "eisen/error.hpp"
#include "eisen/factor.hpp"
#include "eisen/parallel.hpp"

namespace eisen {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr std::uint64_t kSurveyBlock = 4096;

double above(double v) { return std::nextafter(v, kTwoPi + 1.0); }

}  // namespace

std::vector<double> positive_angles(std::span<const EisensteinInt> points) {
  std::vector<double> angles;
  angles.reserve(points.size());
  for (const auto& mu : points) {
    // Positive real axis exactly, so that these points sit at 0 and not 2 pi.
    angles.push_back(mu.b == 0 && mu.a > 0 ? 0.0 : eis_arg(mu).positive());
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

DiscrepancyResult discrepancy_of_angles(std::span<const double> phi) {
  require(!phi.empty(), "discrepancy: empty point set");
  const std::size_t n = phi.size();
  const double nd = static_cast<double>(n);
  DiscrepancyResult best;
  best.count = n;
  best.delta = -1.0;

  // Excess: [phi_i, phi_j^+) holds points i..j, length phi_j - phi_i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = static_cast<double>(j - i + 1) / nd - (phi[j] - phi[i]) / kTwoPi;
      if (v > best.delta) {
        best.delta = v;
        best.witness = {phi[i], above(phi[j])};
      }
    }
  }
  // Deficit: alpha is 0 or just above phi_s, beta is phi_e or 2 pi; the arc
  // holds the points strictly between indices s and e.
  for (std::ptrdiff_t s = -1; s < static_cast<std::ptrdiff_t>(n); ++s) {
    const double alpha = s < 0 ? 0.0 : above(phi[s]);
    for (std::size_t e = s < 0 ? 0 : s + 1; e <= n; ++e) {
      const double beta = e == n ? kTwoPi : phi[e];
      if (!(alpha < beta)) continue;
      const double inside = static_cast<double>(static_cast<std::ptrdiff_t>(e) - s - 1);
      const double v = (beta - alpha) / kTwoPi - inside / nd;
      if (v > best.delta) {
        best.delta = v;
        best.witness = {alpha, beta};
      }
    }
  }
  best.delta = std::max(best.delta, 0.0);
  return best;
}

DiscrepancyResult discrepancy_exact(std::uint64_t n) {
  const CirclePointSet set = circle_points(n);
  require(set.count > 0, "discrepancy_exact: no lattice points on |mu|^2 = " + std::to_string(n));
  require(set.count <= kMaxDiscrepancyPoints, "discrepancy_exact: more than 10^4 points");
  const auto angles = positive_angles(set.points);
  DiscrepancyResult r = discrepancy_of_angles(angles);
  r.n = n;
  return r;
}

double arc_deviation(std::span<const double> phi, Arc arc) {
  const auto lo = std::lower_bound(phi.begin(), phi.end(), arc.alpha);
  const auto hi = std::lower_bound(phi.begin(), phi.end(), arc.beta);
  const double inside = static_cast<double>(hi - lo);
  return std::abs(inside / static_cast<double>(phi.size()) - (arc.beta - arc.alpha) / kTwoPi);
}

double random_arc_lower_bound(std::span<const double> phi, std::size_t samples, std::uint64_t seed) {
  require(!phi.empty(), "random_arc_lower_bound: empty point set");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    double x = u(rng), y = u(rng);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    best = std::max(best, arc_deviation(phi, {x, y}));
  }
  return best;
}

double erdos_turan_bound(std::uint64_t n, std::uint64_t T, double C) {
  require(T >= 1, "erdos_turan_bound: T must be positive");
  const CirclePointSet set = circle_points(n);
  require(set.count > 0, "erdos_turan_bound: no lattice points on |mu|^2 = " + std::to_string(n));
  std::vector<double> phi;
  phi.reserve(set.points.size());
  for (const auto& mu : set.points) phi.push_back(eis_arg(mu).radians());
  double sum = 1.0 / static_cast<double>(T);
  for (std::uint64_t k = 1; k <= T; ++k) {
    std::complex<double> z = 0.0;
    for (double p : phi) z += std::polar(1.0, static_cast<double>(k) * p);
    sum += std::abs(z) / static_cast<double>(phi.size()) / static_cast<double>(k);
  }
  return C * sum;
}

std::vector<bool> representable_up_to(std::uint64_t x) {
  require(x <= 100'000'000, "representable_up_to: x exceeds 10^8");
  std::vector<bool> ok(x + 1, true);
  ok[0] = false;
  for (std::uint32_t q : arith::primes_up_to(x)) {
    if (q % 3 != 2) continue;
    // Multiples of q^(2j+1) that are not multiples of q^(2j+2).
    for (std::uint64_t pk = q; pk <= x; pk *= std::uint64_t(q) * q) {
      const std::uint64_t next = pk * q;
      for (std::uint64_t m = pk; m <= x; m += pk) {
        if (m % next != 0) ok[m] = false;
      }
      if (next > x / q) break;
    }
  }
  return ok;
}

std::uint64_t b_q(std::uint64_t x) {
  require(x >= 1 && x <= 10'000'000, "b_q: x must lie in [1, 10^7]");
  const auto ok = representable_up_to(x);
  return static_cast<std::uint64_t>(std::count(ok.begin(), ok.end(), true));
}

double gamma_threshold() { return std::log(kPi) / std::log(2.0) - 1.0; }

SurveyReport discrepancy_survey(std::uint64_t x, double gamma, int threads) {
  require(x >= 1 && x <= kMaxSurveyDiscrepancyX, "discrepancy_survey: x must lie in [1, 10^6]");
  require(std::isfinite(gamma) && gamma > 0.0 && gamma < gamma_threshold(),
          "discrepancy_survey: gamma must lie in (0, log(pi)/log(2) - 1) = (0, " +
              std::to_string(gamma_threshold()) + ")");
  const auto ok = representable_up_to(x);
  const std::size_t blocks = (x + kSurveyBlock - 1) / kSurveyBlock;
  std::vector<std::uint64_t> exceptions(blocks, 0), represented(blocks, 0);
  for_each_block(blocks, threads, [&](std::size_t blk) {
    const std::uint64_t lo = blk * kSurveyBlock + 1;
    const std::uint64_t hi = std::min(x, (blk + 1) * kSurveyBlock);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (!ok[n]) continue;
      ++represented[blk];
      const DiscrepancyResult d = discrepancy_exact(n);
      if (d.delta > std::pow(static_cast<double>(d.count), -gamma)) ++exceptions[blk];
    }
  });
  SurveyReport r;
  r.x = x;
  r.gamma = gamma;
  for (std::size_t b = 0; b < blocks; ++b) {
    r.b_q += represented[b];
    r.m_gamma += exceptions[b];
  }
  r.fraction = r.b_q ? static_cast<double>(r.m_gamma) / static_cast<double>(r.b_q) : 0.0;
  return r;
}

}  // namespace eisen
