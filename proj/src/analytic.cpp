#include "eisen/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "eisen/core.hpp"
#include "eisen/error.hpp"
#include "eisen/parallel.hpp"
#include "eisen/quadrature.hpp"

namespace eisen {

namespace {

constexpr std::uint64_t kMaxShells = 1'000'000;
constexpr std::uint64_t kMinLRadius = 1000;
constexpr std::uint64_t kMaxLRadius = 20'000'000;
// Ideals of norm <= x number about rho * x with rho = pi / (3 sqrt 3).
constexpr double kIdealDensity = kPi / (3.0 * kSqrt3);

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoefficients[9] = {
    0.99999999999980993,     676.5203681218851,       -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,     12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,   1.5056327351493116e-7};

// chi^{6a}(mu) summed over each shell |mu|^2 = N, N = 1..radius (index N).
// Walks one associate per ideal (the sector [-pi/6, pi/6)) and weights by 6.
std::vector<Complex> shell_coefficients(std::int64_t a, std::uint64_t radius) {
  std::vector<Complex> c(radius + 1, 0.0);
  const auto amax = static_cast<std::int64_t>(std::sqrt(4.0 * radius / 3.0)) + 1;
  for (std::int64_t x = 1; x <= amax; ++x) {
    for (std::int64_t y = -(x / 2); y < x; ++y) {
      const EisensteinInt mu{x, y};
      if (!in_half_open_sector(mu)) continue;
      const std::uint64_t n = eis_norm(mu);
      if (n > radius) break;
      c[n] += a == 0 ? Complex(6.0, 0.0) : 6.0 * std::polar(1.0, 6.0 * static_cast<double>(a) * eis_arg(mu).radians());
    }
  }
  return c;
}

// Theta from shell coefficients; a = 0 adds the mu = 0 term.
Complex theta_from_shells(const std::vector<Complex>& c, double t, std::int64_t a) {
  Complex sum = a == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  const double k = 3.0 * static_cast<double>(a);
  // Largest shells first so that small terms are not swamped.
  for (std::size_t n = c.size(); n-- > 1;) {
    if (c[n] == Complex(0.0, 0.0)) continue;
    const double nd = static_cast<double>(n);
    sum += c[n] * std::exp(k * std::log(nd) - kThetaRate * t * nd);
  }
  return sum;
}

void check_theta_params(const ThetaParams& p) {
  require(std::isfinite(p.t) && p.t > 0.0, "theta: t must be positive");
  require(p.a >= 0 && p.a <= kMaxCharacterIndex, "theta: a must lie in [0, 8]");
  require(std::isfinite(p.tol) && p.tol > 0.0, "theta: tol must be positive");
}

}  // namespace

Complex checked(Complex s, const char* what) {
  require(std::isfinite(s.real()) && std::isfinite(s.imag()), std::string(what) + ": argument must be finite");
  return s;
}

double li(double x) {
  require(std::isfinite(x) && x >= 2.0, "li: x must be >= 2");
  if (x == 2.0) return 0.0;
  // u = e^w turns the integrand into e^w / w on [log 2, log x].
  const double lo = std::log(2.0);
  const double hi = std::log(x);
  const auto pieces = static_cast<std::size_t>(std::ceil(hi - lo));
  auto f = [](double w) { return std::exp(w) / w; };
  const auto r = integrate<double>(f, lo, hi, 1e-14, 1e-15, pieces);
  if (!r.converged && r.error_estimate > 1e-9 * std::max(1.0, std::abs(r.value))) {
    throw ComputationError("li: quadrature did not converge");
  }
  return r.value;
}

Complex complex_gamma(Complex s) {
  checked(s, "complex_gamma");
  require(!(s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())),
          "complex_gamma: pole at a nonpositive integer");
  if (s.real() < 0.5) {
    return kPi / (std::sin(kPi * s) * complex_gamma(1.0 - s));
  }
  const Complex z = s - 1.0;
  Complex series = kLanczosCoefficients[0];
  for (int i = 1; i < 9; ++i) series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

std::uint64_t theta_radius(const ThetaParams& p) {
  check_theta_params(p);
  // Shell N carries at most 12N points of weight N^{3a} e^{-c t N}; bound
  // the tail beyond R by a geometric series once terms decrease.
  const double k = 3.0 * static_cast<double>(p.a) + 1.0;
  const double rate = kThetaRate * p.t;
  const double log_tol = std::log(p.tol);
  auto log_term = [&](double n) { return std::log(12.0) + k * std::log(n) - rate * n; };
  std::uint64_t r = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(k / rate)));
  for (; r <= kMaxShells; ++r) {
    const double n = static_cast<double>(r + 1);
    const double log_ratio = k * std::log1p(1.0 / n) - rate;
    if (log_ratio >= 0.0) continue;
    const double log_tail = log_term(n) - std::log(-std::expm1(log_ratio));
    if (log_tail < log_tol) return r;
  }
  throw ComputationError("theta: truncation radius exceeds 10^6 shells (t too small for tol)");
}

Complex theta(const ThetaParams& p) {
  const std::uint64_t r = theta_radius(p);
  return theta_from_shells(shell_coefficients(p.a, r), p.t, p.a);
}

double theta_transform_residual(double t, std::int64_t a, double tol) {
  const Complex lhs = theta({t, a, tol});
  const Complex rhs = std::pow(t, -1.0 - 6.0 * static_cast<double>(a)) * theta({1.0 / t, a, tol});
  return std::abs(lhs - rhs) / (std::abs(lhs) + tol);
}

LValue l_dirichlet(Complex s, std::int64_t a, double tol) {
  checked(s, "l_dirichlet");
  const double sigma = s.real();
  require(sigma >= 1.1, "l_dirichlet: Re s must be >= 1.1 (use xi_integral below that)");
  require(std::abs(a) <= kMaxCharacterIndex, "l_dirichlet: |a| must be <= 8");
  require(std::isfinite(tol) && tol > 0.0, "l_dirichlet: tol must be positive");

  // Partial sums of chi over ideals of norm <= x deviate from their mean by
  // O(x^{1/2}); summation by parts bounds the remainder past R by
  // coeff * R^{1/2 - sigma}.
  const double coeff = (2.0 / 3.0) * (1.0 + std::abs(s) / (sigma - 0.5));
  const double wanted = std::pow(tol / coeff, 1.0 / (0.5 - sigma));
  const auto radius = static_cast<std::uint64_t>(
      std::clamp(std::ceil(wanted), static_cast<double>(kMinLRadius), static_cast<double>(kMaxLRadius)));

  CompensatedSum re, im;
  const auto xmax = static_cast<std::int64_t>(std::sqrt(4.0 * radius / 3.0)) + 1;
  for (std::int64_t x = 1; x <= xmax; ++x) {
    for (std::int64_t y = -(x / 2); y < x; ++y) {
      const EisensteinInt mu{x, y};
      if (!in_half_open_sector(mu)) continue;
      const std::uint64_t n = eis_norm(mu);
      if (n > radius) break;
      Complex term = std::exp(-s * std::log(static_cast<double>(n)));
      if (a != 0) term *= std::polar(1.0, 6.0 * static_cast<double>(a) * eis_arg(mu).radians());
      re.add(term.real());
      im.add(term.imag());
    }
  }
  LValue out;
  out.value = {re.value(), im.value()};
  if (a == 0) {
    const double r_eff = static_cast<double>(radius) + 0.5;
    out.value += kIdealDensity * std::exp((1.0 - s) * std::log(r_eff)) / (s - 1.0);
  }
  out.error_estimate = coeff * std::pow(static_cast<double>(radius), 0.5 - sigma);
  out.radius = radius;
  return out;
}

XiValue xi_integral(Complex s, std::int64_t a, double tol) {
  checked(s, "xi_integral");
  require(a >= 1 && a <= kMaxCharacterIndex, "xi_integral: a must lie in [1, 8]");
  require(std::abs(s) <= 50.0, "xi_integral: |s| must be <= 50");
  require(std::isfinite(tol) && tol > 0.0, "xi_integral: tol must be positive");

  const double k = 3.0 * static_cast<double>(a);
  // Truncate where e^{-cV} V^{|Re s| + 3a + 1} < tol.
  const double growth = std::abs(s.real()) + k + 1.0;
  double upper = 2.0;
  while (-kThetaRate * upper + growth * std::log(upper) >= std::log(tol)) upper += 0.5;

  const auto shells = shell_coefficients(a, theta_radius({1.0, a, tol * 1e-3}));
  const Complex e1 = s + k - 1.0;
  const Complex e2 = -s + k;
  auto integrand = [&](double v) {
    const double lv = std::log(v);
    return theta_from_shells(shells, v, a) * (std::exp(e1 * lv) + std::exp(e2 * lv));
  };
  auto magnitude = [&](double v) {
    const double lv = std::log(v);
    return std::abs(theta_from_shells(shells, v, a)) * (std::exp(e1.real() * lv) + std::exp(e2.real() * lv));
  };
  const auto pieces = static_cast<std::size_t>(std::ceil(upper - 1.0));
  const auto scale = integrate<double>(magnitude, 1.0, upper, 0.0, 1e-3, pieces);
  const auto r = integrate<Complex>(integrand, 1.0, upper, tol * scale.value, tol, pieces, 20000);

  const double prefactor = std::pow(kSqrt3 / (2.0 * kPi), -k) / 6.0;
  XiValue out;
  out.value = prefactor * r.value;
  out.error_estimate = prefactor * (r.error_estimate + tol * scale.value);
  out.converged = r.converged;
  out.upper_limit = upper;
  if (!r.converged) {
    throw ComputationError("xi_integral: quadrature did not converge; partial value " +
                           std::to_string(out.value.real()) + (out.value.imag() < 0 ? "" : "+") +
                           std::to_string(out.value.imag()) + "i, error estimate " +
                           std::to_string(out.error_estimate));
  }
  return out;
}

Complex xi_from_l(Complex s, std::int64_t a, double tol) {
  const LValue l = l_dirichlet(s, a, tol);
  const double k = 3.0 * static_cast<double>(std::abs(a));
  return std::exp(s * std::log(kSqrt3 / (2.0 * kPi))) * complex_gamma(s + k) * l.value;
}

double functional_eq_residual(Complex s, std::int64_t a, double tol) {
  const Complex lhs = xi_integral(s, a, tol).value;
  const Complex rhs = xi_integral(1.0 - s, a, tol).value;
  return std::abs(lhs - rhs) / (std::abs(lhs) + 1e-30);
}

}  // namespace eisen
