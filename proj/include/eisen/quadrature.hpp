#pragma once

// Globally adaptive Gauss-Kronrod (7, 15) quadrature for smooth real or
// complex integrands on finite intervals.

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <tuple>
#include <vector>

namespace eisen {

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  bool converged = false;
  std::size_t intervals = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at Kronrod nodes 1, 3, 5 and 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
  double a, b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gauss_kronrod_15(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const T fc = f(mid);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T pair = f(mid - dx) + f(mid + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over [a, b], splitting the initial range into `pieces`
/// equal parts. Stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |value|) or `max_intervals` is reached.
template <class T, class F>
QuadratureResult<T> integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                              std::size_t pieces = 1, std::size_t max_intervals = 4000) {
  std::priority_queue<detail::Segment<T>> heap;
  const double step = (b - a) / static_cast<double>(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + step * i;
    const double hi = (i + 1 == pieces) ? b : a + step * (i + 1);
    heap.push(detail::gauss_kronrod_15<T>(f, lo, hi));
  }
  auto totals = [&heap] {
    // Fixed summation order over a copy keeps results reproducible.
    auto copy = heap;
    std::vector<detail::Segment<T>> segs;
    while (!copy.empty()) {
      segs.push_back(copy.top());
      copy.pop();
    }
    T v{};
    double e = 0.0;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
      v += it->value;
      e += it->error;
    }
    return std::pair<T, double>(v, e);
  };
  auto [value, error] = totals();
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) && heap.size() < max_intervals) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;
    heap.pop();
    const auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    heap.push(left);
    heap.push(right);
  }
  std::tie(value, error) = totals();
  QuadratureResult<T> r;
  r.value = value;
  r.error_estimate = error;
  r.converged = error <= std::max(abs_tol, rel_tol * std::abs(value));
  r.intervals = heap.size();
  return r;
}

}  // namespace eisen
