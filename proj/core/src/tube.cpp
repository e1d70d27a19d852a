#include "isoprofile/tube.hpp"

#include <cmath>
#include <string>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"

namespace isoprofile {

double TubeFunction::operator()(double v) const {
  if (!(v >= 0.0)) throw DomainError("tube volume must be >= 0");
  return coefficient * std::pow(v, (n - 1.0) / n);
}

ProfileFn TubeFunction::as_profile(int ambient_dim) const {
  return power_law(coefficient, (n - 1.0) / n, ambient_dim,
                   "tube F(v) = " + std::to_string(coefficient) + " v^{(n-1)/n}");
}

TubeFunction tube_function(double vol_m, int n) {
  if (!(vol_m > 0.0)) throw DomainError("compact factor volume must be > 0");
  return {.vol_m = vol_m, .n = n, .coefficient = std::pow(vol_m, 1.0 / n) * euclidean_constant(n)};
}

}  // namespace isoprofile
