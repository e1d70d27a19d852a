#include "isoprofile/profile.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"

namespace isoprofile {
namespace {

std::string format_number(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace

ProfileFn::ProfileFn(std::string name, int ambient_dim, double domain_max, Evaluator evaluator,
                     ShapeFlags flags)
    : name_(std::move(name)),
      ambient_dim_(ambient_dim),
      domain_max_(domain_max),
      evaluator_(std::move(evaluator)),
      flags_(flags) {
  if (ambient_dim_ < 2) throw DomainError("profile ambient dimension must be >= 2");
  if (!(domain_max_ > 0.0)) throw DomainError("profile domain must be non-empty");
}

double ProfileFn::operator()(double volume) const {
  if (std::isnan(volume) || volume < 0.0) {
    throw DomainError(name_ + ": volume must be >= 0, got " + format_number(volume));
  }
  if (volume > domain_max_) {
    throw DomainError(name_ + ": volume " + format_number(volume) + " exceeds total volume " +
                      format_number(domain_max_));
  }
  if (is_boundary(volume)) return 0.0;
  return evaluator_(volume);
}

bool ProfileFn::is_boundary(double volume) const noexcept {
  return volume == 0.0 || volume == domain_max_;
}

ProfileFn euclidean_profile(int n) {
  const double gamma = euclidean_constant(n);
  const double exponent = (n - 1.0) / n;
  return ProfileFn("R^" + std::to_string(n), n, std::numeric_limits<double>::infinity(),
                   [gamma, exponent](double v) { return gamma * std::pow(v, exponent); },
                   {.monotone_nondecreasing = true, .renormalized_concave = true});
}

ProfileFn scale_profile(const ProfileFn& profile, int ambient_dim, double mu) {
  if (!(mu > 0.0)) throw DomainError("metric scale must be > 0, got " + format_number(mu));
  if (ambient_dim != profile.ambient_dim()) {
    throw DomainError("scale_profile: ambient dimension " + std::to_string(ambient_dim) +
                      " does not match profile " + profile.name());
  }
  if (mu == 1.0) return profile;
  const double d = ambient_dim;
  const double area_factor = std::pow(mu, 0.5 * (d - 1.0));
  const double volume_factor = std::pow(mu, -0.5 * d);
  const double domain_max = profile.domain_max() / volume_factor;
  return ProfileFn(
      format_number(mu) + "*(" + profile.name() + ")", ambient_dim, domain_max,
      [profile, area_factor, volume_factor, domain_max](double v) {
        // Rounding can push the rescaled volume a hair past the base domain.
        const double base = std::min(v * volume_factor, profile.domain_max());
        return v == domain_max ? 0.0 : area_factor * profile(base);
      },
      profile.flags());
}

ProfileFn scale_profile(const ProfileFn& profile, double mu) {
  return scale_profile(profile, profile.ambient_dim(), mu);
}

ProfileFn multiply(const ProfileFn& profile, double factor) {
  if (!(factor > 0.0)) throw DomainError("profile multiplier must be > 0");
  return ProfileFn(format_number(factor) + " " + profile.name(), profile.ambient_dim(),
                   profile.domain_max(),
                   [profile, factor](double v) { return factor * profile(v); }, profile.flags());
}

ProfileFn power_law(double coefficient, double exponent, int ambient_dim, std::string name) {
  if (!(coefficient > 0.0)) throw DomainError("power law coefficient must be > 0");
  if (!(exponent > 0.0 && exponent < 1.0)) throw DomainError("power law exponent must be in (0,1)");
  if (name.empty()) name = format_number(coefficient) + " v^" + format_number(exponent);
  // (c v^e)^{d/(d-1)} is concave exactly when e <= (d-1)/d.
  const bool concave_j = exponent <= (ambient_dim - 1.0) / ambient_dim + 1e-15;
  return ProfileFn(std::move(name), ambient_dim, std::numeric_limits<double>::infinity(),
                   [coefficient, exponent](double v) { return coefficient * std::pow(v, exponent); },
                   {.monotone_nondecreasing = true, .renormalized_concave = concave_j});
}

}  // namespace isoprofile
