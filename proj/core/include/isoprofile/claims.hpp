#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoprofile/curves.hpp"
#include "isoprofile/verify.hpp"

namespace isoprofile {

enum class ClaimKind {
  /// lhs > rhs on [lo, hi].
  Dominance,
  /// lhs(lo) > coefficient * lo^exponent; optionally within 0.5% of a quoted
  /// value and with coefficient / gamma_d at least backward_lambda.
  PointBound,
  /// rhs (a sphere comparison) peaks at half its total volume, no later than
  /// hi, and the nondecreasing lhs stays above that peak from hi on.
  Continuation,
};

/// One row of the claim registry. Rows are data; run_claim interprets them.
struct ClaimSpec {
  std::string_view id;
  std::string_view description;
  ClaimKind kind;
  CurveSpec lhs{};
  CurveSpec rhs{};
  double lo = 0.0;
  double hi = 0.0;
  double coefficient = 0.0;
  double exponent = 0.0;
  double quoted = 0.0;           // quoted value (PointBound) or peak location (Continuation)
  double backward_lambda = 0.0;  // PointBound: required k / gamma_d, 0 if unused
  int figure = 0;                // 1..6 when the claim is a plotted comparison
};

std::span<const ClaimSpec> claim_registry();

/// Throws DomainError for unknown ids.
const ClaimSpec& find_claim(std::string_view id);

/// Runs one claim. samples is the base grid size of grid-based checks.
VerificationReport run_claim(const ClaimSpec& claim, ProfileFactory& factory, int samples);

struct FigureRow {
  double v;
  double lhs;
  double rhs;
  double margin;
};

struct FigureTable {
  int figure;
  std::string lhs_name;
  std::string rhs_name;
  Interval interval;
  std::vector<FigureRow> rows;  // sorted by v
};

/// The curve pair of plotted comparison 1..6 over its interval.
FigureTable figure_data(int figure, int samples, ProfileFactory& factory);

/// 12 significant digits in positional (non-exponent) notation.
std::string format_decimal(double x);

/// Header "v,lhs,rhs,margin" followed by one row per sample.
void write_figure_csv(std::ostream& out, const FigureTable& table);

}  // namespace isoprofile
