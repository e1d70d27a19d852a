#pragma once

#include <string>
#include <vector>

#include "isoprofile/bounds.hpp"

namespace isoprofile {

/// Y(S^d) = d (d-1) V_d^{2/d}. Requires d >= 3.
double yamabe_sphere(int d);

/// Lower bound on Y(M^m x R^n) relative to Y(S^{m+n}), given that the profile
/// of the product is nondecreasing and at least lambda I_{(S^{m+n}, mu g0)}.
struct YamabeEstimate {
  int m;
  int n;
  double mu;
  double lambda;
  double curvature_term = 0.0;  // mu m (m-1) / ((m+n)(m+n-1))
  double profile_term = 0.0;    // lambda^2
  double ratio = 0.0;     // min of the two terms
  double absolute = 0.0;  // ratio * Y(S^{m+n})
};

/// Refuses (DomainError) unless nondecreasing_profile is asserted; the scalar
/// curvature bound s_g >= m(m-1) on the compact factor is the caller's claim.
YamabeEstimate product_yamabe_ratio(int m, int n, double mu, double lambda,
                                    bool nondecreasing_profile);

/// The estimate for one of the three named products.
YamabeEstimate product_estimate(ProductId id);

struct YamabeReport {
  std::string name;
  ProductId product = ProductId::Generic;  // Generic for non-product entries
  double ratio;     // fraction of Y(S^d)
  double absolute;  // ratio * Y(S^d)
  int sphere_dim;
  double quoted;    // stated value (ratio or absolute, see quoted_is_absolute)
  bool quoted_is_absolute;
  std::string source;
  bool recomputed;  // false for echoed external constants
  std::string note;
};

/// Product corollaries, surgery constants and the dimension-5 range, in a
/// fixed order.
std::vector<YamabeReport> corollary_reports();

}  // namespace isoprofile
