#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoprofile/bounds.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

/// Outcome of a sampled check. Always produced, also on failure.
struct VerificationReport {
  std::string claim_id;
  Interval interval;
  int samples = 0;  // evaluation points, refinement included
  double min_margin = 0.0;
  double min_margin_location = 0.0;
  double relative_min_margin = 0.0;
  bool passed = false;
  double tolerance_used = 0.0;  // slack admitted by the pass criterion
  std::vector<std::string> notes{};
  std::optional<std::string> error{};  // evaluation failure, if any
};

inline constexpr int kMinimumSamples = 256;
inline constexpr double kMonotoneSlack = 1e-9;
inline constexpr double kConcavitySlack = 1e-6;

/// Checks f > g on [a, b]: a uniform grid of base_samples points, then three
/// rounds of bisection around the smallest margin (final spacing 1/8 of the
/// grid's). Passes only if every evaluated margin is strictly positive.
VerificationReport dominates(const ProfileFn& f, const ProfileFn& g, Interval interval,
                             int base_samples, std::string claim_id);

/// Checks p(v_{i+1}) - p(v_i) >= -1e-9 on a uniform grid.
VerificationReport check_monotone(const ProfileFn& p, Interval interval, int samples,
                                  std::string claim_id = "monotone");

/// Checks that J = p^{d/(d-1)} has second differences <= 1e-6 max|J| on a
/// uniform grid, and that p(v) / v^{(d-1)/d} is nonincreasing there.
VerificationReport check_renormalized_concavity(const ProfileFn& p, int ambient_dim,
                                                Interval interval, int samples,
                                                std::string claim_id = "renormalized-concavity");

/// Location of the maximum of a compact profile, by golden section.
double profile_maximizer(const ProfileFn& p);

}  // namespace isoprofile
