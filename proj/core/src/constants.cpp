#include "isoprofile/constants.hpp"

#include <cmath>
#include <string>

#include "isoprofile/error.hpp"

namespace isoprofile {
namespace {

// Full integral int_0^pi sin^k = B((k+1)/2, 1/2).
double full_sine_power_integral(int k) {
  return std::sqrt(kPi) * std::tgamma(0.5 * (k + 1)) / std::tgamma(0.5 * k + 1.0);
}

// Series for 0 <= y <= pi/4:
//   int_0^y sin^k = 1/2 B_x(a, 1/2),  x = sin^2 y,  a = (k+1)/2
//                 = 1/2 x^a sum_j c_j x^j / (a + j),  c_j = (1/2)_j / j!
// The x^a prefactor is left to the caller so the ratio form can reuse it.
double incomplete_beta_series(int k, double x) {
  const double a = 0.5 * (k + 1);
  double c = 1.0;
  double power = 1.0;
  double sum = 1.0 / a;
  for (int j = 1; j < 400; ++j) {
    c *= (j - 0.5) / j;
    power *= x;
    const double term = c * power / (a + j);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 0.5 * sum;
}

// Reduction recurrence; exact up to rounding and free of cancellation once
// sin and cos are both O(1).
double recurrence(int k, double y) {
  const double s = std::sin(y);
  const double c = std::cos(y);
  double value = (k % 2 == 0) ? y : 1.0 - c;
  int j = (k % 2 == 0) ? 2 : 3;
  for (; j <= k; j += 2) {
    value = -std::pow(s, j - 1) * c / j + (j - 1.0) / j * value;
  }
  return value;
}

void check_sine_power_args(int k, double y) {
  if (k < 0) throw DomainError("sine power exponent must be >= 0, got " + std::to_string(k));
  if (!(y >= 0.0 && y <= kPi)) {
    throw DomainError("sine power integral upper limit must lie in [0, pi], got " +
                      std::to_string(y));
  }
}

}  // namespace

double sphere_volume(int m) {
  if (m < 0) throw DomainError("sphere dimension must be >= 0, got " + std::to_string(m));
  return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

double unit_ball_volume(int m) {
  if (m < 1) throw DomainError("ball dimension must be >= 1, got " + std::to_string(m));
  return std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double euclidean_constant(int n) {
  if (n < 2) {
    throw DomainError("Euclidean isoperimetric constant needs n >= 2, got " + std::to_string(n));
  }
  return sphere_volume(n - 1) / std::pow(unit_ball_volume(n), (n - 1.0) / n);
}

double sine_power_integral(int k, double y) {
  check_sine_power_args(k, y);
  if (k == 0) return y;
  if (k == 1) return 2.0 * std::pow(std::sin(0.5 * y), 2);
  if (y <= 0.25 * kPi) {
    const double x = std::pow(std::sin(y), 2);
    return std::pow(x, 0.5 * (k + 1)) * incomplete_beta_series(k, x);
  }
  if (y >= 0.75 * kPi) {
    const double x = std::pow(std::sin(kPi - y), 2);
    return full_sine_power_integral(k) - std::pow(x, 0.5 * (k + 1)) * incomplete_beta_series(k, x);
  }
  return recurrence(k, y);
}

double sine_power_ratio(int k, double y) {
  check_sine_power_args(k, y);
  if (y == 0.0) return 0.0;
  if (k == 0) return y;
  if (y <= 0.25 * kPi) {
    // x^a / sin^k(y) = sin(y), so the series carries the whole ratio.
    const double s = std::sin(y);
    return s * incomplete_beta_series(k, s * s);
  }
  return sine_power_integral(k, y) / std::pow(std::sin(y), k);
}

}  // namespace isoprofile
