#pragma once

#include <memory>
#include <span>
#include <vector>

#include "isoprofile/profile.hpp"
#include "isoprofile/quadrature.hpp"

namespace isoprofile {

struct CylinderOptions {
  /// Number of tabulated eta values on the ball branch.
  int eta_grid = 512;
  /// Relative tolerance of each Pedrosa integral.
  double quadrature_tolerance = 1e-9;
  /// Relative tolerance in volume when inverting volume -> eta.
  double volume_tolerance = 1e-10;
};

/// One ball-type region Omega_h of S^m x R (unit metric).
struct CylinderSample {
  double eta;
  double volume;
  double area;
};

/// Tabulated one-parameter family of ball-type regions of (S^m x R, g_0 + dt^2)
/// together with the slab branch S^m x (a, b) of constant area 2 V_m.
///
/// For eta in (0, pi) Pedrosa's rotationally symmetric CMC regions have
///   area   = 2 V_{m-1} int_0^eta sin^{m-1}(y) / sqrt(1 - u^2) dy
///   volume = 2 V_{m-1} int_0^eta S(y) u / sqrt(1 - u^2) dy
/// with S(y) = int_0^y sin^{m-1}, h(y) = sin^{m-1}(y) / S(y) and
/// u = h(eta) / h(y). The volume rises from 0 to a maximum at eta* and then
/// falls back to 0 as eta -> pi; only (0, eta*] is tabulated since that is the
/// branch that can be isoperimetric. Immutable after construction.
class CylinderBallFamily {
 public:
  CylinderBallFamily(int m, const CylinderOptions& options);

  int dim() const noexcept { return dim_; }
  const CylinderOptions& options() const noexcept { return options_; }
  std::span<const CylinderSample> samples() const noexcept { return samples_; }

  /// 2 V_m.
  double slab_area() const noexcept { return slab_area_; }
  /// eta* and the largest volume enclosed by a ball-type region.
  double branch_end_eta() const noexcept { return branch_end_.eta; }
  double max_ball_volume() const noexcept { return branch_end_.volume; }
  /// Volume past which the slab beats every ball-type region.
  double crossing_volume() const noexcept { return crossing_.volume; }
  double crossing_eta() const noexcept { return crossing_.eta; }

  /// Fresh quadrature of both integrals at eta in (0, pi).
  CylinderSample ball(double eta) const;

  /// Ball-type region enclosing volume w in (0, max_ball_volume()].
  CylinderSample ball_at_volume(double w) const;

  /// min(ball area, 2 V_m) at volume w > 0.
  double profile(double w) const;

 private:
  // Illinois regula falsi for value(eta) = target on [lo, hi], value increasing.
  template <class Value>
  CylinderSample solve(CylinderSample lo, CylinderSample hi, double target, Value value,
                       double tolerance) const;

  int dim_;
  CylinderOptions options_;
  QuadratureOptions quadrature_;
  double boundary_volume_;  // V_{m-1}
  double slab_area_;
  std::vector<CylinderSample> samples_;
  CylinderSample branch_end_{};
  CylinderSample crossing_{};
};

/// Builds the ball family of S^m x R. Requires m >= 2 and eta_grid >= 64.
std::shared_ptr<const CylinderBallFamily> cylinder_family(int m, const CylinderOptions& options = {});

/// Profile of (S^m x R, mu (g_0 + dt^2)): mu^{m/2} I_base(mu^{-(m+1)/2} v) where
/// I_base = min(ball branch, slab). Ambient dimension m + 1.
ProfileFn cylinder_profile(std::shared_ptr<const CylinderBallFamily> family, double mu);
ProfileFn cylinder_profile(int m, double mu, const CylinderOptions& options = {});

}  // namespace isoprofile
