#pragma once

namespace isoprofile {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Volume V_m of the unit round m-sphere, 2 pi^{(m+1)/2} / Gamma((m+1)/2).
/// Defined for m >= 0 (V_0 = 2 counts the two points of S^0).
double sphere_volume(int m);

/// Volume of the unit ball in R^m, pi^{m/2} / Gamma(m/2 + 1).
double unit_ball_volume(int m);

/// Euclidean isoperimetric constant gamma_n = V_{n-1} / Vol(D^n)^{(n-1)/n}.
/// Throws DomainError for n < 2.
double euclidean_constant(int n);

/// int_0^y sin^k(s) ds for integer k >= 0 and y in [0, pi].
///
/// Evaluated in closed form: for y <= pi/4 through the hypergeometric series
/// of the incomplete beta function (full relative accuracy as y -> 0), and
/// through the reduction recurrence
///   I_k = -sin^{k-1} cos / k + (k-1)/k I_{k-2}
/// elsewhere, where no cancellation occurs.
double sine_power_integral(int k, double y);

/// int_0^y sin^k / sin^k(y), the ratio that appears in the mean curvature of
/// geodesic spheres. Stays accurate for tiny y, where both factors underflow.
double sine_power_ratio(int k, double y);

}  // namespace isoprofile
