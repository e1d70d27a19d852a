#pragma once

#include "isoprofile/profile.hpp"

namespace isoprofile {

/// The round sphere (S^m, mu g_0).
struct SphereGeometry {
  int dim = 2;
  double scale = 1.0;

  SphereGeometry(int dim, double scale = 1.0);

  /// mu^{m/2} V_m.
  double total_volume() const;
};

struct BallMeasure {
  double volume;
  double area;
};

/// Metric ball of geodesic radius r (measured in the unit-scale sphere,
/// r in [0, pi]) in (S^m, mu g_0):
///   area   = mu^{(m-1)/2} V_{m-1} sin^{m-1}(r)
///   volume = mu^{m/2}     V_{m-1} int_0^r sin^{m-1}
BallMeasure sphere_ball(const SphereGeometry& geom, double r);

/// Isoperimetric profile of (S^m, mu g_0), m >= 2. Balls are isoperimetric, so
/// the profile inverts the ball volume by bisection in r and returns the
/// boundary area. Symmetric about half the total volume.
ProfileFn sphere_profile(const SphereGeometry& geom);

}  // namespace isoprofile
