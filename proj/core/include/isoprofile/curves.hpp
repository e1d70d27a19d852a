#pragma once

#include <map>
#include <memory>
#include <string>

#include "isoprofile/cylinder.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

enum class CurveKind { Euclidean, Sphere, Cylinder, PowerLaw };

/// Declarative description of a comparison curve.
///   Euclidean: factor * I_{R^dim}
///   Sphere:    factor * I_{(S^dim, scale g_0)}
///   Cylinder:  factor * I_{(S^dim x R, scale (g_0 + dt^2))}
///   PowerLaw:  factor * v^exponent, ambient dimension dim
struct CurveSpec {
  CurveKind kind = CurveKind::Euclidean;
  int dim = 2;
  double scale = 1.0;
  double factor = 1.0;
  double exponent = 0.0;
};

std::string describe(const CurveSpec& spec);

/// Builds profiles from CurveSpecs, sharing one ball family per sphere
/// dimension. Not thread-safe; each caller owns its factory.
class ProfileFactory {
 public:
  explicit ProfileFactory(CylinderOptions options = {});

  const CylinderOptions& options() const noexcept { return options_; }
  std::shared_ptr<const CylinderBallFamily> family(int m);
  ProfileFn make(const CurveSpec& spec);

 private:
  CylinderOptions options_;
  std::map<int, std::shared_ptr<const CylinderBallFamily>> families_;
};

}  // namespace isoprofile
