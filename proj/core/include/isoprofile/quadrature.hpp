#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "isoprofile/constants.hpp"

namespace isoprofile {

struct QuadratureOptions {
  double relative_tolerance = 1e-9;
  int max_levels = 10;
  // Abscissae run over |t| <= t_max in the tanh-sinh variable. At 4.5 the
  // nodes sit ~1e-61 from the endpoints, which is what inverse square root
  // singularities need for double precision.
  double t_max = 4.5;
};

template <std::size_t N>
struct QuadratureResult {
  std::array<double, N> value{};
  double relative_error = 0.0;  // max over components of the last level change
  int levels = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Double-exponential (tanh-sinh) quadrature of a vector-valued integrand on
/// [a, b].
///
/// The integrand is called as f(x, from_a, to_b) where from_a = x - a and
/// to_b = b - x are computed without cancellation, so integrands with
/// integrable endpoint singularities can be evaluated accurately at nodes
/// extremely close to an endpoint. Endpoints themselves are never evaluated.
///
/// Each level halves the step and reuses the previous sum. Convergence is
/// declared when every component changes by less than the relative tolerance
/// between two consecutive levels (after at least three levels).
template <std::size_t N, class F>
QuadratureResult<N> tanh_sinh(F&& f, double a, double b, const QuadratureOptions& options = {}) {
  QuadratureResult<N> result;
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);

  // Adds w * f at the pair of nodes +-t (or the single node at t = 0).
  auto accumulate = [&](double t, std::array<double, N>& sum) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double cosh_u = std::cosh(u);
    const double weight = 0.5 * kPi * std::cosh(t) / (cosh_u * cosh_u);
    // 1 - tanh(u) = 2 / (1 + e^{2u}), exact for large u.
    const double complement = 2.0 / (1.0 + std::exp(2.0 * u));
    const double offset = half * complement;  // distance from the nearer endpoint
    if (!(offset > 0.0) || weight == 0.0) return;
    if (t == 0.0) {
      const auto v = f(center, half, half);
      for (std::size_t i = 0; i < N; ++i) sum[i] += weight * v[i];
      ++result.evaluations;
      return;
    }
    const double far = 2.0 * half - offset;
    const auto right = f(b - offset, far, offset);
    const auto left = f(a + offset, offset, far);
    for (std::size_t i = 0; i < N; ++i) sum[i] += weight * (right[i] + left[i]);
    result.evaluations += 2;
  };

  double step = 1.0;
  std::array<double, N> sum{};
  for (double t = 0.0; t <= options.t_max; t += step) accumulate(t, sum);
  std::array<double, N> estimate{};
  for (std::size_t i = 0; i < N; ++i) estimate[i] = half * step * sum[i];

  for (int level = 1; level <= options.max_levels; ++level) {
    step *= 0.5;
    for (double t = step; t <= options.t_max; t += 2.0 * step) accumulate(t, sum);
    std::array<double, N> next{};
    double change = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      next[i] = half * step * sum[i];
      const double scale = std::max(std::abs(next[i]), std::numeric_limits<double>::min());
      change = std::max(change, std::abs(next[i] - estimate[i]) / scale);
    }
    estimate = next;
    result.levels = level;
    result.relative_error = change;
    if (level >= 3 && change <= options.relative_tolerance) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  return result;
}

/// Scalar convenience wrapper around tanh_sinh.
template <class F>
QuadratureResult<1> tanh_sinh_scalar(F&& f, double a, double b, const QuadratureOptions& options = {}) {
  return tanh_sinh<1>(
      [&](double x, double from_a, double to_b) { return std::array<double, 1>{f(x, from_a, to_b)}; },
      a, b, options);
}

}  // namespace isoprofile
