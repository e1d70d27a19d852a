#pragma once

#include <functional>
#include <limits>
#include <string>

namespace isoprofile {

struct ShapeFlags {
  bool monotone_nondecreasing = false;
  /// I^{d/(d-1)} is concave, d the ambient dimension.
  bool renormalized_concave = false;
};

/// A named isoperimetric-type function v -> area on (0, domain_max].
///
/// domain_max is the total volume of a compact space, or +infinity. The
/// evaluator only ever sees volumes in the open domain; the wrapper owns the
/// domain checks and the continuous extension by zero at v = 0 and at
/// v = domain_max (reported by is_boundary).
class ProfileFn {
 public:
  using Evaluator = std::function<double(double)>;

  ProfileFn(std::string name, int ambient_dim, double domain_max, Evaluator evaluator,
            ShapeFlags flags);

  double operator()(double volume) const;
  double evaluate(double volume) const { return (*this)(volume); }

  bool is_boundary(double volume) const noexcept;
  bool is_compact() const noexcept { return domain_max_ < std::numeric_limits<double>::infinity(); }

  const std::string& name() const noexcept { return name_; }
  int ambient_dim() const noexcept { return ambient_dim_; }
  double domain_max() const noexcept { return domain_max_; }
  ShapeFlags flags() const noexcept { return flags_; }
  bool monotone_nondecreasing() const noexcept { return flags_.monotone_nondecreasing; }
  bool renormalized_concave() const noexcept { return flags_.renormalized_concave; }

 private:
  std::string name_;
  int ambient_dim_;
  double domain_max_;
  Evaluator evaluator_;
  ShapeFlags flags_;
};

/// Profile of (R^n, g_E): gamma_n v^{(n-1)/n}.
ProfileFn euclidean_profile(int n);

/// Profile of the same space with metric mu * g:
///   I_mu(v) = mu^{(d-1)/2} I(mu^{-d/2} v),
/// domain scaled by mu^{d/2}. ambient_dim must match the profile's.
ProfileFn scale_profile(const ProfileFn& profile, int ambient_dim, double mu);
ProfileFn scale_profile(const ProfileFn& profile, double mu);

/// factor * profile(v); used for comparison curves such as 0.886 I_{S^4}.
ProfileFn multiply(const ProfileFn& profile, double factor);

/// coefficient * v^exponent on (0, inf), tagged with the given ambient dimension.
ProfileFn power_law(double coefficient, double exponent, int ambient_dim, std::string name = {});

}  // namespace isoprofile
