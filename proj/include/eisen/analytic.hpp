#pragma once

// Analytic side: the logarithmic integral, the complex Gamma function, the
// lattice theta function theta(t, a) = sum mu^{6a} exp(-(2 pi/sqrt3) t |mu|^2),
// the Hecke L-functions L(s, chi^{6a}) for Re s > 1 and the completed
// function xi(s, chi^{6a}) through its theta-integral representation.

#include <complex>
#include <cstdint>

namespace eisen {

using Complex = std::complex<double>;

/// Gaussian decay rate 2 pi / sqrt(3) of the theta function.
inline constexpr double kThetaRate = 2.0 * 3.14159265358979323846 / 1.73205080756887729353;

/// Rejects NaN or infinite components.
Complex checked(Complex s, const char* what);

/// Li(x) = integral from 2 to x of du / log u.
double li(double x);

/// Gamma(s) by the Lanczos approximation (g = 7, 9 terms) with reflection
/// for Re s < 1/2.
Complex complex_gamma(Complex s);

struct ThetaParams {
  double t = 1.0;
  std::int64_t a = 0;
  double tol = 1e-15;
};

/// Largest norm kept when evaluating theta(t, a) to absolute tail < tol.
std::uint64_t theta_radius(const ThetaParams& p);

Complex theta(const ThetaParams& p);

/// |theta(t,a) - t^{-1-6a} theta(1/t,a)| / (|theta(t,a)| + tol).
double theta_transform_residual(double t, std::int64_t a, double tol = 1e-15);

struct LValue {
  Complex value;
  double error_estimate = 0.0;
  std::uint64_t radius = 0;  // ideals of norm <= radius summed exactly
};

inline constexpr std::int64_t kMaxCharacterIndex = 8;

/// L(s, chi^{6a}) = sum over ideals chi^{6a}(A) N(A)^{-s}, Re s >= 1.1.
/// For a = 0 this is the Dedekind zeta function and the main term of the
/// tail beyond the radius is added analytically.
LValue l_dirichlet(Complex s, std::int64_t a, double tol = 1e-10);

struct XiValue {
  Complex value;
  double error_estimate = 0.0;
  bool converged = false;
  double upper_limit = 0.0;  // truncation point V of the integral
};

/// xi(s, chi^{6a}) = (1/6)(sqrt3/2pi)^{-3a} int_1^inf theta(v,a)(v^{s+3a-1} + v^{-s+3a}) dv,
/// valid for every s; 1 <= a <= 8, |s| <= 50.
XiValue xi_integral(Complex s, std::int64_t a, double tol = 1e-12);

/// xi through its definition (sqrt3/2pi)^s Gamma(s+3|a|) L(s, chi^{6a}), Re s >= 1.1.
Complex xi_from_l(Complex s, std::int64_t a, double tol = 1e-10);

/// |xi(s) - xi(1-s)| / (|xi(s)| + 1e-30).
double functional_eq_residual(Complex s, std::int64_t a, double tol = 1e-12);

}  // namespace eisen
