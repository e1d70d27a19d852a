#include "isoprofile/bounds.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/sphere.hpp"

namespace isoprofile {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A recomputed certificate may fall below its quoted value by at most this
// fraction before assembly is refused.
constexpr double kQuotedUndercut = 0.005;

const std::array<ProductRecipe, 3> kRecipes = {{
    {.id = ProductId::S2xR2, .m = 2, .n = 2,
     .transfer_factor = 1.0, .cyl_dim = 3, .cyl_scale = 2.0,
     .small_x0 = 4.0, .small_k = 5.5,
     .pair_x0 = 65.0, .pair_y0 = 99.4, .forward_coefficient = 12.32,
     .statement_lambda = 0.886, .sphere_scale = 4.7,
     .headline_lambda = 0.88, .headline_scale = 4.7,
     .continuation_end = 291.0},
    {.id = ProductId::S2xR3, .m = 2, .n = 3,
     .transfer_factor = 0.99, .cyl_dim = 4, .cyl_scale = 3.1748021039363987,  // 2^{5/3}
     .small_x0 = 13.0, .small_k = 6.34,
     .pair_x0 = 140.0, .pair_y0 = 277.8, .forward_coefficient = 10.3,
     .statement_lambda = 0.867, .sphere_scale = 7.5,
     .headline_lambda = 0.86, .headline_scale = 7.5,
     .continuation_end = 2389.0},
    {.id = ProductId::S3xR2, .m = 3, .n = 2,
     .transfer_factor = 0.99, .cyl_dim = 4, .cyl_scale = 2.8284271247461903,  // 2^{3/2}
     .small_x0 = 1.0, .small_k = 6.5,
     .pair_x0 = 60.0, .pair_y0 = 118.245, .forward_coefficient = 15.26,
     .statement_lambda = 0.91, .sphere_scale = 2.77,
     .headline_lambda = 0.91, .headline_scale = 4.9,
     .continuation_end = 200.0},
}};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

}  // namespace

double LargeVolumeBound::operator()(double v) const {
  if (!(v > v0)) throw DomainError("large-volume bound only holds for v > v0 = " + fmt(v0));
  return coefficient * std::pow(v, (n - 1.0) / n);
}

LargeVolumeBound large_volume_bound(double vol_m, int n, const ProfileFn& factor_bound, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1), got " + fmt(alpha));
  if (!(vol_m > 0.0)) throw DomainError("compact factor volume must be > 0");
  if (!factor_bound.renormalized_concave()) {
    throw DomainError("factor bound " + factor_bound.name() + " is not flagged concave");
  }
  const double h = factor_bound(alpha * vol_m);
  if (!(h > 0.0)) throw DomainError("factor bound vanishes at alpha Vol(M)");
  const double tube = std::pow(vol_m, 1.0 / n) * euclidean_constant(n);
  const double k = alpha * vol_m / h;
  return {.alpha = alpha,
          .vol_m = vol_m,
          .n = n,
          .k = k,
          .v0 = std::pow(tube / (k * (1.0 - alpha) * (1.0 - alpha)), n),
          .tube_coefficient = tube,
          .coefficient = std::pow(alpha, 2.0 - 1.0 / n) * tube};
}

double PowerLawBound::operator()(double v) const {
  if (!(v >= valid_from)) throw DomainError("power-law bound holds from v = " + fmt(valid_from));
  return coefficient * std::pow(v, exponent);
}

PowerLawBound forward_extension(double x0, double y0, int n) {
  if (!(x0 > 0.0) || !(y0 > 0.0)) throw DomainError("certified pair must be positive");
  if (n < 2) throw DomainError("Euclidean factor dimension must be >= 2");
  const double exponent = (n - 1.0) / n;
  return {.coefficient = y0 / std::pow(x0, exponent), .exponent = exponent, .valid_from = x0};
}

double ScaledReferenceBound::operator()(double v) const {
  if (!valid.contains(v)) {
    throw DomainError("bound valid on [" + fmt(valid.lo) + ", " + fmt(valid.hi) + "], got " + fmt(v));
  }
  if (v >= reference.domain_max()) return 0.0;
  return lambda * reference(v);
}

ScaledReferenceBound backward_extension(double v0, double k, int total_dim, ProfileFn reference) {
  if (!(v0 > 0.0) || !(k > 0.0)) throw DomainError("backward extension needs v0, k > 0");
  if (reference.ambient_dim() != total_dim) {
    throw DomainError("reference " + reference.name() + " has the wrong dimension");
  }
  if (!reference.renormalized_concave()) {
    throw DomainError("reference " + reference.name() + " needs a concave renormalized profile");
  }
  const double gamma = euclidean_constant(total_dim);
  if (!(k < gamma)) {
    throw DomainError("k = " + fmt(k) + " is not below gamma_" + std::to_string(total_dim) + " = " +
                      fmt(gamma));
  }
  return {.lambda = k / gamma, .reference = std::move(reference), .valid = {0.0, v0}};
}

std::string_view to_string(ProductId id) {
  switch (id) {
    case ProductId::S2xR2: return "s2xr2";
    case ProductId::S2xR3: return "s2xr3";
    case ProductId::S3xR2: return "s3xr2";
    case ProductId::Generic: return "generic";
  }
  return "generic";
}

ProductId parse_product(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ProductId id : {ProductId::S2xR2, ProductId::S2xR3, ProductId::S3xR2}) {
    if (lower == to_string(id)) return id;
  }
  throw DomainError("unknown product '" + std::string(text) + "' (expected s2xr2, s2xr3 or s3xr2)");
}

double BoundSegment::operator()(double v) const {
  return std::visit([v](const auto& bound) { return bound(v); }, form);
}

double PiecewiseBound::operator()(double v) const { return active_segment(v)(v); }

const BoundSegment& PiecewiseBound::active_segment(double v) const {
  const BoundSegment* best = nullptr;
  double best_value = -kInfinity;
  for (const auto& segment : segments) {
    if (!segment.interval.contains(v)) continue;
    if (const auto* t = std::get_if<LargeVolumeBound>(&segment.form); t && !(v > t->v0)) continue;
    const double value = segment(v);
    if (value > best_value) {
      best_value = value;
      best = &segment;
    }
  }
  if (best == nullptr) throw DomainError("no certified segment covers v = " + fmt(v));
  return *best;
}

PiecewiseBound combine_pointwise(double x0, double y0, int m, int n) {
  const int d = m + n;
  const double k = y0 / std::pow(x0, (d - 1.0) / d);
  PiecewiseBound bound;
  bound.segments.push_back(
      {.interval = {0.0, x0},
       .form = backward_extension(x0, k, d, sphere_profile(SphereGeometry(d))),
       .provenance = "backward extension of (" + fmt(x0) + ", " + fmt(y0) + ") against S^" +
                     std::to_string(d)});
  bound.segments.push_back({.interval = {x0, kInfinity},
                            .form = forward_extension(x0, y0, n),
                            .provenance = "forward extension of (" + fmt(x0) + ", " + fmt(y0) + ")"});
  return bound;
}

const ProductRecipe& product_recipe(ProductId id) {
  for (const auto& recipe : kRecipes) {
    if (recipe.id == id) return recipe;
  }
  throw DomainError("no recipe for product " + std::string(to_string(id)));
}

PiecewiseBound product_bound(ProductId id, ProfileFactory& factory) {
  const ProductRecipe& r = product_recipe(id);
  const int d = r.m + r.n;
  const ProfileFn cylinder = factory.make({.kind = CurveKind::Cylinder, .dim = r.cyl_dim, .scale = r.cyl_scale});
  const ProfileFn sphere = sphere_profile(SphereGeometry(d, r.sphere_scale));
  const std::string transfer_name = fmt(r.transfer_factor) + " " + cylinder.name();

  PiecewiseBound bound;
  bound.product = id;

  auto certify = [&](std::string description, double x0, double quoted, double threshold) {
    const double recomputed = r.transfer_factor * cylinder(x0);
    if (recomputed < (1.0 - kQuotedUndercut) * quoted) {
      throw NumericError(description + ": recomputed " + fmt(recomputed) + " undercuts quoted " +
                             fmt(quoted) + " by more than 0.5%",
                         x0, recomputed - quoted);
    }
    bound.certificates.push_back({.description = std::move(description),
                                  .x0 = x0,
                                  .quoted = quoted,
                                  .threshold = threshold,
                                  .recomputed = recomputed,
                                  .holds = recomputed > threshold});
  };

  // Small volumes: backward extension against the statement's sphere.
  const double small_threshold = r.small_k * std::pow(r.small_x0, (d - 1.0) / d);
  certify(transfer_name + " at " + fmt(r.small_x0) + " exceeds " + fmt(r.small_k) + " v^(" +
              std::to_string(d - 1) + "/" + std::to_string(d) + ")",
          r.small_x0, small_threshold, small_threshold);
  bound.segments.push_back(
      {.interval = {0.0, r.small_x0},
       .form = backward_extension(r.small_x0, r.small_k, d, sphere),
       .provenance = "backward extension: " + fmt(r.small_k) + "/gamma_" + std::to_string(d) +
                     " times " + sphere.name() + ", from the transfer profile at v = " +
                     fmt(r.small_x0)});

  // Middle volumes: the transfer inequality itself.
  bound.segments.push_back(
      {.interval = {r.small_x0, r.pair_x0},
       .form = ScaledReferenceBound{.lambda = r.transfer_factor,
                                    .reference = cylinder,
                                    .valid = {r.small_x0, r.pair_x0}},
       .provenance = "transfer inequality: I >= " + transfer_name});

  // Large volumes: forward extension of the certified pair.
  const PowerLawBound exact = forward_extension(r.pair_x0, r.pair_y0, r.n);
  if (r.forward_coefficient > exact.coefficient) {
    throw NumericError("rounded forward coefficient exceeds the certified one", r.pair_x0,
                       r.forward_coefficient - exact.coefficient);
  }
  const double pair_threshold = r.forward_coefficient * std::pow(r.pair_x0, exact.exponent);
  certify(transfer_name + " at " + fmt(r.pair_x0) + " is at least " + fmt(r.pair_y0), r.pair_x0,
          r.pair_y0, pair_threshold);
  bound.segments.push_back(
      {.interval = {r.pair_x0, kInfinity},
       .form = PowerLawBound{.coefficient = r.forward_coefficient,
                             .exponent = exact.exponent,
                             .valid_from = r.pair_x0},
       .provenance = "forward extension of (" + fmt(r.pair_x0) + ", " + fmt(r.pair_y0) + "): " +
                     fmt(r.forward_coefficient) + " v^" + fmt(exact.exponent)});

  bound.statement = ScaledReferenceBound{
      .lambda = r.statement_lambda, .reference = sphere, .valid = {0.0, kInfinity}};
  return bound;
}

ScaledReferenceBound headline_statement(ProductId id) {
  const ProductRecipe& r = product_recipe(id);
  return {.lambda = r.headline_lambda,
          .reference = sphere_profile(SphereGeometry(r.m + r.n, r.headline_scale)),
          .valid = {0.0, kInfinity}};
}

std::vector<ImportedInequality> imported_inequalities() {
  std::vector<ImportedInequality> out;
  for (const auto& r : kRecipes) {
    std::ostringstream text;
    text << "I_" << to_string(r.id) << "(v) >= " << r.transfer_factor << " I_(S^" << r.cyl_dim
         << "xR, " << r.cyl_scale << " (g0+dt^2))(v) for all v >= 0";
    out.push_back({.lhs_product = r.id,
                   .factor = r.transfer_factor,
                   .cyl_dim = r.cyl_dim,
                   .cyl_scale = r.cyl_scale,
                   .description = text.str()});
  }
  return out;
}

}  // namespace isoprofile
