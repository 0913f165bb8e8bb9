#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "eisen/analytic.hpp"
#include "eisen/angles.hpp"
#include "eisen/error.hpp"

using namespace eisen;

namespace {

double li_oracle(double x) { return boost::math::expint(std::log(x)) - boost::math::expint(std::log(2.0)); }

// L(2, chi_{-3}) = (psi'(1/3) - psi'(2/3)) / 9.
double l2_chi3() { return (boost::math::trigamma(1.0 / 3) - boost::math::trigamma(2.0 / 3)) / 9.0; }

}  // namespace

TEST_CASE("logarithmic integral") {
  CHECK(li(2.0) == 0.0);
  CHECK(li(10.0) == doctest::Approx(li_oracle(10.0)).epsilon(1e-12));
  CHECK(li(10.0) == doctest::Approx(5.12044).epsilon(1e-5));
  for (double x : {3.0, 100.0, 12345.0, 1e6, 1e8}) CHECK(li(x) == doctest::Approx(li_oracle(x)).epsilon(1e-11));
  CHECK(li(1e6) > 1e6 / std::log(1e6));
  CHECK_THROWS_AS(li(1.5), PreconditionError);
  CHECK_THROWS_AS(li(std::nan("")), PreconditionError);
}

TEST_CASE("complex gamma") {
  CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(complex_gamma(5.0) - 24.0) < 1e-12);
  CHECK(std::abs(complex_gamma(0.5) - std::sqrt(std::numbers::pi)) < 1e-14);
  for (double x : {0.1, 0.7, 2.5, 7.3, 15.0, -0.5, -2.3})
    CHECK(complex_gamma(x).real() == doctest::Approx(boost::math::tgamma(x)).epsilon(1e-13));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-4.0, 10.0), im(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const Complex s{re(rng), im(rng)};
    const Complex lhs = complex_gamma(s + 1.0), rhs = s * complex_gamma(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    CHECK(std::abs(complex_gamma(std::conj(s)) - std::conj(complex_gamma(s))) <= 1e-14 * std::abs(lhs / s));
  }
  CHECK_THROWS_AS(complex_gamma(0.0), PreconditionError);
  CHECK_THROWS_AS(complex_gamma(-3.0), PreconditionError);
}

TEST_CASE("theta function") {
  // At t = 10 only mu = 0 and the six units matter.
  const Complex t10 = theta({10.0, 0, 1e-15});
  CHECK(std::abs(t10 - (1.0 + 6.0 * std::exp(-10.0 * kThetaRate))) < 1e-15);
  CHECK(std::abs(t10.real() - 1.0) < 2e-15);

  const Complex t3 = theta({3.0, 1, 1e-20});
  const double first = 6.0 * std::exp(-3.0 * kThetaRate);
  const double second = -6.0 * 27.0 * std::exp(-9.0 * kThetaRate);
  CHECK(t3.real() == doctest::Approx(first).epsilon(1e-7));
  CHECK(t3.real() == doctest::Approx(first + second).epsilon(1e-12));

  for (double t : {0.3, 0.8, 1.0, 2.0})
    for (std::int64_t a : {0, 1, 2, 5}) CHECK(std::abs(theta({t, a, 1e-15}).imag()) <= 1e-12 * (1 + std::abs(theta({t, a, 1e-15}))));
  CHECK(theta_radius({1.0, 1, 1e-15}) < theta_radius({0.5, 1, 1e-15}));
  CHECK_THROWS_AS(theta({0.0, 1, 1e-15}), PreconditionError);
  CHECK_THROWS_AS(theta({1.0, -1, 1e-15}), PreconditionError);
  CHECK_THROWS_AS(theta({1.0, 1, 0.0}), PreconditionError);
}

TEST_CASE("theta transformation law") {
  CHECK(theta_transform_residual(1.0, 1) < 1e-15);
  CHECK(theta_transform_residual(1.5, 1) < 1e-10);
  CHECK(theta_transform_residual(0.5, 2) < 1e-8);
  for (double t : {0.5, 1.0, 1.5, 3.0})
    for (std::int64_t a : {1, 2, 3}) CHECK(theta_transform_residual(t, a) < 1e-8);
  CHECK(theta_transform_residual(1.3, 0) < 1e-12);
}

TEST_CASE("Dedekind zeta at 2") {
  const double zeta_k = boost::math::zeta(2.0) * l2_chi3();
  const auto l = l_dirichlet(2.0, 0);
  CHECK(std::abs(l.value.real() - zeta_k) < 1e-8);
  CHECK(std::abs(l.value.imag()) == 0.0);
  CHECK(l.error_estimate > 0.0);
  CHECK(l.error_estimate <= 1e-10);
}

TEST_CASE("L-function symmetries and bounds") {
  for (double sigma : {1.5, 2.0, 3.5}) {
    const double tol = sigma < 2 ? 1e-5 : 1e-10;
    const double zk = l_dirichlet(sigma, 0, tol).value.real();
    for (std::int64_t a : {1, 2, 4}) {
      CHECK(std::abs(l_dirichlet(sigma, a, tol).value.imag()) < 1e-12);
      for (double t : {0.0, 1.0, 7.0}) CHECK(std::abs(l_dirichlet({sigma, t}, a, tol).value) <= zk + 2 * tol);
    }
  }
  // a and -a give the same function because the lattice is closed under conjugation.
  CHECK(std::abs(l_dirichlet({2.0, 1.0}, 2).value - l_dirichlet({2.0, 1.0}, -2).value) < 1e-10);
  CHECK_THROWS_AS(l_dirichlet(1.05, 1), PreconditionError);
  CHECK_THROWS_AS(l_dirichlet(2.0, 9), PreconditionError);
}

TEST_CASE("Euler product at s = 3") {
  const auto ideals = prime_ideals_up_to(10000);
  for (std::int64_t a : {0, 1, 2}) {
    Complex prod = 1.0;
    for (const auto& p : ideals) {
      const Complex chi = std::polar(1.0, 6.0 * a * p.theta);
      prod /= 1.0 - chi * std::pow(static_cast<double>(p.norm), -3.0);
    }
    CHECK(std::abs(l_dirichlet(3.0, a).value - prod) < 1e-6);
  }
}

TEST_CASE("logarithmic derivative at sigma = 3") {
  const auto ideals = prime_ideals_up_to(10000);
  for (std::int64_t a : {0, 1, 3}) {
    double ref = 0.0;
    for (const auto& p : ideals) {
      const double N = static_cast<double>(p.norm), lg = std::log(N);
      for (int m = 1; m < 60; ++m) {
        const double term = lg * std::pow(N, -3.0 * m);
        if (term < 1e-20) break;
        ref -= std::cos(6.0 * a * m * p.theta) * term;
      }
    }
    const double h = 1e-4;
    const double up = std::log(l_dirichlet(3.0 + h, a, 1e-14).value.real());
    const double dn = std::log(l_dirichlet(3.0 - h, a, 1e-14).value.real());
    CHECK(std::abs((up - dn) / (2 * h) - ref) < 1e-5);
  }
}

TEST_CASE("completed function") {
  const Complex direct = xi_from_l(2.0, 1);
  const auto integral = xi_integral(2.0, 1);
  CHECK(integral.converged);
  CHECK(std::abs(integral.value - direct) < 1e-6 * std::abs(direct));
  CHECK(std::abs(xi_integral(0.5, 1).value.imag()) < 1e-10);
  CHECK(std::abs(xi_integral(0.25, 1).value - xi_integral(0.75, 1).value) < 1e-8);
  CHECK(functional_eq_residual({0.5, 3.0}, 1) < 1e-8);
  CHECK(functional_eq_residual({0.3, 0.7}, 2) < 1e-8);
  CHECK(functional_eq_residual(0.5, 1) < 1e-14);
  CHECK(std::abs(xi_integral({1.7, 2.0}, 3).value - xi_from_l({1.7, 2.0}, 3)) <
        1e-6 * std::abs(xi_from_l({1.7, 2.0}, 3)));
  CHECK_THROWS_AS(xi_integral(2.0, 0), PreconditionError);
  CHECK_THROWS_AS(xi_integral({60.0, 0.0}, 1), PreconditionError);
  CHECK_THROWS_AS(xi_integral({std::nan(""), 0.0}, 1), PreconditionError);
}
