#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isoprofile/curves.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

/// Closed volume interval [lo, hi]; hi may be +infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

/// Large-volume bound for M^m x R^n built from a concave lower bound h of the
/// profile of M:
///   alpha^{2-1/n} C v^{(n-1)/n} <= I(v)   for v > v0,
///   k  = alpha Vol(M) / h(alpha Vol(M)),
///   v0 = (C / (k (1-alpha)^2))^n,  C = Vol(M)^{1/n} gamma_n.
struct LargeVolumeBound {
  double alpha;
  double vol_m;
  int n;
  double k;
  double v0;
  double tube_coefficient;  // C
  double coefficient;       // alpha^{2-1/n} C

  /// Throws DomainError for v <= v0.
  double operator()(double v) const;
};

LargeVolumeBound large_volume_bound(double vol_m, int n, const ProfileFn& factor_bound, double alpha);

/// coefficient * v^exponent for v >= valid_from.
struct PowerLawBound {
  double coefficient;
  double exponent;
  double valid_from;

  double operator()(double v) const;
};

/// A certified point y0 <= I(x0) of S^m x R^n extends to all v >= x0 as
/// (y0 / x0^{(n-1)/n}) v^{(n-1)/n}.
PowerLawBound forward_extension(double x0, double y0, int n);

/// lambda * reference(v) on an interval. The reference is extended by zero past
/// its total volume, where the comparison is vacuous.
struct ScaledReferenceBound {
  double lambda;
  ProfileFn reference;
  Interval valid;

  double operator()(double v) const;
};

/// If a profile of dimension d (nonnegative Ricci curvature) satisfies
/// I(v0) > k v0^{(d-1)/d}, then I >= (k / gamma_d) I_ref on (0, v0] for any
/// reference of the same dimension with concave renormalized profile.
/// Rejects k >= gamma_d.
ScaledReferenceBound backward_extension(double v0, double k, int total_dim, ProfileFn reference);

enum class ProductId { S2xR2, S2xR3, S3xR2, Generic };

std::string_view to_string(ProductId id);
/// Accepts "s2xr2", "S2xR2", ... Throws DomainError otherwise.
ProductId parse_product(std::string_view text);

using BoundForm = std::variant<LargeVolumeBound, PowerLawBound, ScaledReferenceBound>;

struct BoundSegment {
  Interval interval;
  BoundForm form;
  std::string provenance;

  double operator()(double v) const;
};

/// Recomputed hypothesis behind a segment: the transfer profile at x0 against
/// the threshold the segment relies on, and against the quoted value.
struct CertificateCheck {
  std::string description;
  double x0;
  double quoted;      // value stated for the certificate
  double threshold;   // value the segment actually needs
  double recomputed;  // transfer profile at x0
  bool holds;         // recomputed > threshold
};

/// A lower bound assembled from certified segments. Where several segments
/// cover v the largest value is used; every one of them is a valid bound.
struct PiecewiseBound {
  ProductId product = ProductId::Generic;
  std::vector<BoundSegment> segments;
  /// The single-profile inequality the segments certify, when there is one.
  std::optional<ScaledReferenceBound> statement;
  std::vector<CertificateCheck> certificates;

  double operator()(double v) const;
  const BoundSegment& active_segment(double v) const;
};

/// Extends a certified pair I(x0) > y0 of S^m x R^n backwards (against the unit
/// S^{m+n}) and forwards (power law).
PiecewiseBound combine_pointwise(double x0, double y0, int m, int n);

/// Constants used to assemble the bound of one named product.
struct ProductRecipe {
  ProductId id;
  int m;  // sphere factor
  int n;  // Euclidean factor
  // Imported inequality: I_product >= transfer_factor * I_{(S^cyl_dim x R, cyl_scale (g0+dt^2))}.
  double transfer_factor;
  int cyl_dim;
  double cyl_scale;
  // Backward hypothesis: transfer(small_x0) > small_k * small_x0^{(d-1)/d}, d = m + n.
  double small_x0;
  double small_k;
  // Certified pair for the forward extension, and the (rounded) coefficient used.
  double pair_x0;
  double pair_y0;
  double forward_coefficient;
  // Resulting statement lambda * I_{(S^{m+n}, sphere_scale g0)}.
  double statement_lambda;
  double sphere_scale;
  // Rounded form quoted as the headline result.
  double headline_lambda;
  double headline_scale;
  // Upper end of the interval on which the forward segment is compared with the
  // statement; the statement's maximum lies just below it.
  double continuation_end;
};

const ProductRecipe& product_recipe(ProductId id);

/// Certified bound of S2xR2, S2xR3 or S3xR2. Recomputes every certificate from
/// the cylinder profiles and throws NumericError when one falls short of its
/// quoted value by more than 0.5%.
PiecewiseBound product_bound(ProductId id, ProfileFactory& factory);

/// The headline form lambda * I_{(S^{m+n}, mu g0)} with the rounded constants.
ScaledReferenceBound headline_statement(ProductId id);

struct ImportedInequality {
  ProductId lhs_product;
  double factor;
  int cyl_dim;
  double cyl_scale;
  std::string description;
};

/// The three transfer inequalities from products to scaled cylinders.
std::vector<ImportedInequality> imported_inequalities();

}  // namespace isoprofile
