#include "isoprofile/sphere.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"

namespace isoprofile {

SphereGeometry::SphereGeometry(int dim_, double scale_) : dim(dim_), scale(scale_) {
  if (dim < 1) throw DomainError("sphere dimension must be >= 1, got " + std::to_string(dim));
  if (!(scale > 0.0)) throw DomainError("sphere metric scale must be > 0");
}

double SphereGeometry::total_volume() const { return std::pow(scale, 0.5 * dim) * sphere_volume(dim); }

BallMeasure sphere_ball(const SphereGeometry& geom, double r) {
  if (!(r >= 0.0 && r <= kPi)) {
    throw DomainError("ball radius must lie in [0, pi], got " + std::to_string(r));
  }
  const int k = geom.dim - 1;
  const double boundary = sphere_volume(k);
  // sin(pi) is ~1e-16, not 0; the full sphere has no boundary.
  const double sine = r == kPi ? 0.0 : std::sin(r);
  return {
      .volume = std::pow(geom.scale, 0.5 * geom.dim) * boundary * sine_power_integral(k, r),
      .area = std::pow(geom.scale, 0.5 * k) * boundary * std::pow(sine, k),
  };
}

ProfileFn sphere_profile(const SphereGeometry& geom) {
  if (geom.dim < 2) throw DomainError("sphere profile needs dimension >= 2");
  const int m = geom.dim;
  const int k = m - 1;
  const double boundary = sphere_volume(k);
  const double total = sphere_volume(m);

  auto unit = [k, boundary, total](double v) {
    // Fold onto the smaller half: the complement of a ball is a ball.
    const double w = std::min(v, total - v);
    double lo = 0.0;
    double hi = 0.5 * kPi;
    if (w >= 0.5 * total) {
      lo = hi;
    } else {
      // Bisection on the strictly increasing map r -> V_{m-1} int_0^r sin^{m-1}.
      while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi) {
        const double mid = 0.5 * (lo + hi);
        if (boundary * sine_power_integral(k, mid) < w) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    return boundary * std::pow(std::sin(0.5 * (lo + hi)), k);
  };

  ProfileFn base("S^" + std::to_string(m), m, total, unit,
                 {.monotone_nondecreasing = false, .renormalized_concave = true});
  if (geom.scale == 1.0) return base;
  std::ostringstream name;
  name << "S^" << m << "(" << geom.scale << " g0)";
  ProfileFn scaled = scale_profile(base, m, geom.scale);
  return ProfileFn(name.str(), m, scaled.domain_max(),
                   [scaled](double v) { return scaled(v); }, scaled.flags());
}

}  // namespace isoprofile
