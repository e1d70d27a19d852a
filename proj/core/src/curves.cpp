#include "isoprofile/curves.hpp"

#include <sstream>

#include "isoprofile/error.hpp"
#include "isoprofile/sphere.hpp"

namespace isoprofile {

std::string describe(const CurveSpec& spec) {
  std::ostringstream out;
  if (spec.factor != 1.0 && spec.kind != CurveKind::PowerLaw) out << spec.factor << " ";
  switch (spec.kind) {
    case CurveKind::Euclidean:
      out << "I_R^" << spec.dim;
      break;
    case CurveKind::Sphere:
      out << "I_(S^" << spec.dim << ", " << spec.scale << " g0)";
      break;
    case CurveKind::Cylinder:
      out << "I_(S^" << spec.dim << "xR, " << spec.scale << " (g0+dt^2))";
      break;
    case CurveKind::PowerLaw:
      out << spec.factor << " v^" << spec.exponent;
      break;
  }
  return out.str();
}

ProfileFactory::ProfileFactory(CylinderOptions options) : options_(options) {}

std::shared_ptr<const CylinderBallFamily> ProfileFactory::family(int m) {
  auto it = families_.find(m);
  if (it == families_.end()) it = families_.emplace(m, cylinder_family(m, options_)).first;
  return it->second;
}

ProfileFn ProfileFactory::make(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::PowerLaw:
      return power_law(spec.factor, spec.exponent, spec.dim, describe(spec));
    case CurveKind::Euclidean: {
      ProfileFn p = euclidean_profile(spec.dim);
      return spec.factor == 1.0 ? p : multiply(p, spec.factor);
    }
    case CurveKind::Sphere: {
      ProfileFn p = sphere_profile(SphereGeometry(spec.dim, spec.scale));
      return spec.factor == 1.0 ? p : multiply(p, spec.factor);
    }
    case CurveKind::Cylinder: {
      ProfileFn p = cylinder_profile(family(spec.dim), spec.scale);
      return spec.factor == 1.0 ? p : multiply(p, spec.factor);
    }
  }
  throw DomainError("unknown curve kind");
}

}  // namespace isoprofile
