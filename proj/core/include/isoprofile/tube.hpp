#pragma once

#include "isoprofile/profile.hpp"

namespace isoprofile {

/// Boundary area of the tube M x D^n_R as a function of its volume:
///   F(v) = C v^{(n-1)/n},  C = Vol(M)^{1/n} gamma_n.
/// An upper bound for the profile of M x R^n, attained for large volumes.
struct TubeFunction {
  double vol_m;
  int n;
  double coefficient;

  double operator()(double v) const;
  ProfileFn as_profile(int ambient_dim) const;
};

TubeFunction tube_function(double vol_m, int n);

}  // namespace isoprofile
