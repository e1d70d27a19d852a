#include "isoprofile/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/sphere.hpp"

namespace isoprofile {
namespace {

constexpr double kTwoToThreeHalves = 2.8284271247461903;
constexpr double kTwoToFiveThirds = 3.1748021039363987;

// Peak locations must match mu^{d/2} V_d / 2 to this relative accuracy.
constexpr double kPeakTolerance = 1e-3;
// A recomputed certificate may undercut its quoted value by this fraction.
constexpr double kQuotedUndercut = 0.005;

constexpr CurveSpec cylinder(int m, double scale, double factor) {
  return {.kind = CurveKind::Cylinder, .dim = m, .scale = scale, .factor = factor};
}
constexpr CurveSpec sphere(int m, double scale, double factor) {
  return {.kind = CurveKind::Sphere, .dim = m, .scale = scale, .factor = factor};
}
constexpr CurveSpec power(double coefficient, double exponent, int dim) {
  return {.kind = CurveKind::PowerLaw, .dim = dim, .factor = coefficient, .exponent = exponent};
}

constexpr std::array kRegistry = {
    ClaimSpec{.id = "fig1",
              .description = "S^3xR (scale 2) above 0.886 S^4(4.7) on [4, 65]",
              .kind = ClaimKind::Dominance,
              .lhs = cylinder(3, 2.0, 1.0), .rhs = sphere(4, 4.7, 0.886),
              .lo = 4.0, .hi = 65.0, .figure = 1},
    ClaimSpec{.id = "fig2",
              .description = "12.32 v^(1/2) above 0.886 S^4(4.7) on [65, 291]",
              .kind = ClaimKind::Dominance,
              .lhs = power(12.32, 0.5, 4), .rhs = sphere(4, 4.7, 0.886),
              .lo = 65.0, .hi = 291.0, .figure = 2},
    ClaimSpec{.id = "fig3",
              .description = "0.99 S^4xR (scale 2^(3/2)) above 0.91 S^5(2.77) on [1, 60]",
              .kind = ClaimKind::Dominance,
              .lhs = cylinder(4, kTwoToThreeHalves, 0.99), .rhs = sphere(5, 2.77, 0.91),
              .lo = 1.0, .hi = 60.0, .figure = 3},
    ClaimSpec{.id = "fig4",
              .description = "15.26 v^(1/2) above 0.91 S^5(2.77) on [60, 200]",
              .kind = ClaimKind::Dominance,
              .lhs = power(15.26, 0.5, 5), .rhs = sphere(5, 2.77, 0.91),
              .lo = 60.0, .hi = 200.0, .figure = 4},
    ClaimSpec{.id = "fig5",
              .description = "0.99 S^4xR (scale 2^(5/3)) above 0.867 S^5(7.5) on [13, 140]",
              .kind = ClaimKind::Dominance,
              .lhs = cylinder(4, kTwoToFiveThirds, 0.99), .rhs = sphere(5, 7.5, 0.867),
              .lo = 13.0, .hi = 140.0, .figure = 5},
    ClaimSpec{.id = "fig6",
              .description = "10.3 v^(2/3) above 0.867 S^5(7.5) on [140, 2389]",
              .kind = ClaimKind::Dominance,
              .lhs = power(10.3, 2.0 / 3.0, 5), .rhs = sphere(5, 7.5, 0.867),
              .lo = 140.0, .hi = 2389.0, .figure = 6},

    ClaimSpec{.id = "s2xr2.small-volume",
              .description = "S^3xR (scale 2) at v=4 exceeds 5.5 v^(3/4); 5.5/gamma_4 >= 0.886",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(3, 2.0, 1.0),
              .lo = 4.0, .coefficient = 5.5, .exponent = 0.75, .backward_lambda = 0.886},
    ClaimSpec{.id = "s2xr2.certified-pair",
              .description = "S^3xR (scale 2) at v=65 is ~99.4, above 12.32 v^(1/2)",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(3, 2.0, 1.0),
              .lo = 65.0, .coefficient = 12.32, .exponent = 0.5, .quoted = 99.4},
    ClaimSpec{.id = "s2xr2.continuation",
              .description = "0.886 S^4(4.7) peaks at ~290.69 <= 291 below the nondecreasing 12.32 v^(1/2)",
              .kind = ClaimKind::Continuation,
              .lhs = power(12.32, 0.5, 4), .rhs = sphere(4, 4.7, 0.886),
              .lo = 65.0, .hi = 291.0, .quoted = 290.69},

    ClaimSpec{.id = "s3xr2.small-volume",
              .description = "0.99 S^4xR (scale 2^(3/2)) at v=1 exceeds 6.5; 6.5/gamma_5 >= 0.91",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(4, kTwoToThreeHalves, 0.99),
              .lo = 1.0, .coefficient = 6.5, .exponent = 0.8, .backward_lambda = 0.91},
    ClaimSpec{.id = "s3xr2.certified-pair",
              .description = "0.99 S^4xR (scale 2^(3/2)) at v=60 exceeds 118.245, above 15.26 v^(1/2)",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(4, kTwoToThreeHalves, 0.99),
              .lo = 60.0, .coefficient = 15.26, .exponent = 0.5, .quoted = 118.245},
    ClaimSpec{.id = "s3xr2.continuation",
              .description = "0.91 S^5(2.77) peaks at ~198.4 <= 200 below the nondecreasing 15.26 v^(1/2)",
              .kind = ClaimKind::Continuation,
              .lhs = power(15.26, 0.5, 5), .rhs = sphere(5, 2.77, 0.91),
              .lo = 60.0, .hi = 200.0, .quoted = 198.4},

    ClaimSpec{.id = "s2xr3.small-volume",
              .description = "0.99 S^4xR (scale 2^(5/3)) at v=13 exceeds 6.34 v^(4/5); 6.34/gamma_5 >= 0.867",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(4, kTwoToFiveThirds, 0.99),
              .lo = 13.0, .coefficient = 6.34, .exponent = 0.8, .backward_lambda = 0.867},
    ClaimSpec{.id = "s2xr3.certified-pair",
              .description = "0.99 S^4xR (scale 2^(5/3)) at v=140 is ~277.8, above 10.3 v^(2/3)",
              .kind = ClaimKind::PointBound,
              .lhs = cylinder(4, kTwoToFiveThirds, 0.99),
              .lo = 140.0, .coefficient = 10.3, .exponent = 2.0 / 3.0, .quoted = 277.8},
    ClaimSpec{.id = "s2xr3.continuation",
              .description = "0.867 S^5(7.5) peaks at ~2388.2 <= 2389 below the nondecreasing 10.3 v^(2/3)",
              .kind = ClaimKind::Continuation,
              .lhs = power(10.3, 2.0 / 3.0, 5), .rhs = sphere(5, 7.5, 0.867),
              .lo = 140.0, .hi = 2389.0, .quoted = 2388.2},
};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

VerificationReport run_point_bound(const ClaimSpec& claim, ProfileFactory& factory) {
  VerificationReport report{.claim_id = std::string(claim.id), .interval = {claim.lo, claim.lo}};
  report.samples = 1;
  report.min_margin_location = claim.lo;
  try {
    const ProfileFn lhs = factory.make(claim.lhs);
    const double value = lhs(claim.lo);
    const double threshold = claim.coefficient * std::pow(claim.lo, claim.exponent);
    report.min_margin = value - threshold;
    report.relative_min_margin = report.min_margin / threshold;
    report.passed = report.min_margin > 0.0;
    report.notes.push_back(lhs.name() + " at " + fmt(claim.lo) + " = " + fmt(value) +
                           ", threshold " + fmt(threshold));
    if (claim.quoted > 0.0) {
      const double deviation = value / claim.quoted - 1.0;
      report.tolerance_used = kQuotedUndercut;
      report.notes.push_back("quoted " + fmt(claim.quoted) + ", relative deviation " + fmt(deviation));
      if (deviation < -kQuotedUndercut) report.passed = false;
    }
    if (claim.backward_lambda > 0.0) {
      const int d = claim.lhs.dim + 1;
      const double lambda = claim.coefficient / euclidean_constant(d);
      report.notes.push_back("backward factor " + fmt(claim.coefficient) + "/gamma_" +
                             std::to_string(d) + " = " + fmt(lambda) + " (needs >= " +
                             fmt(claim.backward_lambda) + ")");
      if (lambda < claim.backward_lambda) report.passed = false;
    }
  } catch (const std::exception& e) {
    report.error = e.what();
    report.passed = false;
  }
  return report;
}

VerificationReport run_continuation(const ClaimSpec& claim, ProfileFactory& factory, int samples) {
  VerificationReport report{.claim_id = std::string(claim.id), .interval = {claim.lo, claim.hi}};
  try {
    const ProfileFn lhs = factory.make(claim.lhs);
    const ProfileFn rhs = factory.make(claim.rhs);
    const double peak = profile_maximizer(rhs);
    const double half = 0.5 * SphereGeometry(claim.rhs.dim, claim.rhs.scale).total_volume();
    const double peak_error = std::abs(peak / half - 1.0);
    report.notes.push_back("peak of " + rhs.name() + " at " + fmt(peak) + "; half volume " + fmt(half) +
                           "; quoted " + fmt(claim.quoted) + " (relative " +
                           fmt(half / claim.quoted - 1.0) + ")");
    const bool peak_ok = peak_error <= kPeakTolerance && half <= claim.hi;

    const VerificationReport monotone =
        check_monotone(lhs, {claim.lo, 2.0 * claim.hi}, samples, std::string(claim.id));
    report.notes.push_back("lhs nondecreasing on [" + fmt(claim.lo) + ", " + fmt(2.0 * claim.hi) +
                           "]: " + (monotone.passed ? "yes" : "no"));

    // Past hi the lhs only grows while the rhs never exceeds its peak value.
    const double peak_value = rhs(half);
    const double end_value = lhs(claim.hi);
    report.min_margin = end_value - peak_value;
    report.relative_min_margin = report.min_margin / peak_value;
    report.min_margin_location = claim.hi;
    report.samples = monotone.samples + 2;
    report.tolerance_used = kPeakTolerance;
    report.passed = peak_ok && monotone.passed && report.min_margin > 0.0;
  } catch (const std::exception& e) {
    report.error = e.what();
    report.passed = false;
  }
  return report;
}

}  // namespace

std::span<const ClaimSpec> claim_registry() { return kRegistry; }

const ClaimSpec& find_claim(std::string_view id) {
  for (const auto& claim : kRegistry) {
    if (claim.id == id) return claim;
  }
  throw DomainError("unknown claim '" + std::string(id) + "'");
}

VerificationReport run_claim(const ClaimSpec& claim, ProfileFactory& factory, int samples) {
  switch (claim.kind) {
    case ClaimKind::Dominance: {
      try {
        return dominates(factory.make(claim.lhs), factory.make(claim.rhs), {claim.lo, claim.hi},
                         samples, std::string(claim.id));
      } catch (const DomainError&) {
        throw;
      } catch (const std::exception& e) {
        VerificationReport report{.claim_id = std::string(claim.id), .interval = {claim.lo, claim.hi}};
        report.error = e.what();
        return report;
      }
    }
    case ClaimKind::PointBound:
      return run_point_bound(claim, factory);
    case ClaimKind::Continuation:
      return run_continuation(claim, factory, samples);
  }
  throw DomainError("unknown claim kind");
}

FigureTable figure_data(int figure, int samples, ProfileFactory& factory) {
  const auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                               [figure](const ClaimSpec& c) { return c.figure == figure; });
  if (figure < 1 || it == kRegistry.end()) {
    throw DomainError("figure id must be 1..6, got " + std::to_string(figure));
  }
  if (samples < 2) throw DomainError("figure needs at least 2 samples");
  const ProfileFn lhs = factory.make(it->lhs);
  const ProfileFn rhs = factory.make(it->rhs);
  FigureTable table{.figure = figure,
                    .lhs_name = lhs.name(),
                    .rhs_name = rhs.name(),
                    .interval = {it->lo, it->hi},
                    .rows = {}};
  table.rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double v = i + 1 == samples ? it->hi : it->lo + (it->hi - it->lo) * i / (samples - 1.0);
    const double l = lhs(v);
    const double r = rhs(v);
    table.rows.push_back({v, l, r, l - r});
  }
  return table;
}

}  // namespace isoprofile
