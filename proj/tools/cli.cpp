#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoprofile/bounds.hpp"
#include "isoprofile/claims.hpp"
#include "isoprofile/constants.hpp"
#include "isoprofile/curves.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/sphere.hpp"
#include "isoprofile/verify.hpp"
#include "isoprofile/yamabe.hpp"

namespace isoprofile::cli {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  double tolerance = 1e-9;
  int samples = 2048;
  int eta_grid = 512;
  std::string format;  // empty: per-command default
  std::string out_path;

  CylinderOptions cylinder() const {
    return {.eta_grid = eta_grid, .quadrature_tolerance = tolerance};
  }
};

Json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim_id;
  j["interval"] = {number(r.interval.lo), number(r.interval.hi)};
  j["passed"] = r.passed;
  j["samples"] = r.samples;
  j["min_margin"] = number(r.min_margin);
  j["min_margin_at"] = number(r.min_margin_location);
  j["relative_min_margin"] = number(r.relative_min_margin);
  j["tolerance"] = r.tolerance_used;
  j["notes"] = r.notes;
  if (r.error) j["error"] = *r.error;
  return j;
}

Json to_json(const YamabeReport& r) {
  return {{"name", r.name},
          {"ratio", r.ratio},
          {"absolute", r.absolute},
          {"sphere_dim", r.sphere_dim},
          {"quoted", r.quoted},
          {"quoted_is_absolute", r.quoted_is_absolute},
          {"source", r.source},
          {"recomputed", r.recomputed},
          {"note", r.note}};
}

Json to_json(const YamabeEstimate& e) {
  return {{"m", e.m},
          {"n", e.n},
          {"mu", e.mu},
          {"lambda", e.lambda},
          {"curvature_term", e.curvature_term},
          {"profile_term", e.profile_term},
          {"ratio", e.ratio},
          {"rounded", std::round(e.ratio * 100.0) / 100.0},
          {"absolute", e.absolute}};
}

std::string segment_kind(const BoundSegment& s) {
  if (std::holds_alternative<LargeVolumeBound>(s.form)) return "large-volume";
  if (std::holds_alternative<PowerLawBound>(s.form)) return "power-law";
  return "scaled-reference";
}

// --- profile ---------------------------------------------------------------

struct ProfileArgs {
  std::string space;
  int dim = 2;
  double scale = 1.0;
  std::optional<double> volume;
  std::optional<double> from;
  std::optional<double> to;
  int points = 11;
};

int cmd_profile(const ProfileArgs& a, const RunConfig& cfg, std::ostream& out) {
  ProfileFactory factory(cfg.cylinder());
  CurveSpec spec{.dim = a.dim, .scale = a.scale};
  if (a.space == "euclidean") {
    spec.kind = CurveKind::Euclidean;
  } else if (a.space == "sphere") {
    spec.kind = CurveKind::Sphere;
  } else if (a.space == "cylinder") {
    spec.kind = CurveKind::Cylinder;
  } else {
    throw DomainError("unknown space '" + a.space + "' (euclidean, sphere, cylinder)");
  }
  const ProfileFn p = factory.make(spec);

  std::vector<double> volumes;
  if (a.volume) {
    volumes.push_back(*a.volume);
  } else {
    if (!a.from || !a.to) throw DomainError("give --volume or both --from and --to");
    if (a.points < 2) throw DomainError("--points must be >= 2");
    for (int i = 0; i < a.points; ++i) {
      volumes.push_back(i + 1 == a.points ? *a.to : *a.from + (*a.to - *a.from) * i / (a.points - 1.0));
    }
  }
  std::vector<double> areas;
  for (double v : volumes) areas.push_back(p(v));

  if (cfg.format == "csv") {
    out << "v,area\n";
    for (std::size_t i = 0; i < volumes.size(); ++i) {
      out << format_decimal(volumes[i]) << ',' << format_decimal(areas[i]) << '\n';
    }
    return kExitOk;
  }
  Json j{{"space", a.space},
         {"dim", a.dim},
         {"scale", a.scale},
         {"name", p.name()},
         {"ambient_dim", p.ambient_dim()},
         {"domain_max", number(p.domain_max())}};
  if (a.volume) {
    j["volume"] = volumes.front();
    j["area"] = areas.front();
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < volumes.size(); ++i) rows.push_back({{"v", volumes[i]}, {"area", areas[i]}});
    j["table"] = rows;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string product;
  std::optional<double> volume;
  bool headline = false;
  bool large_volume = false;
  bool forward = false;
  bool backward = false;
  double vol_m = 0.0;
  int n = 2;
  double alpha = 0.9;
  int factor_dim = 2;
  double x0 = 0.0;
  double y0 = 0.0;
  double v0 = 0.0;
  double k = 0.0;
  int dim = 4;
};

Json describe_bound(const PiecewiseBound& bound, std::optional<double> volume) {
  Json j;
  j["product"] = std::string(to_string(bound.product));
  Json segments = Json::array();
  for (const auto& s : bound.segments) {
    segments.push_back({{"interval", {number(s.interval.lo), number(s.interval.hi)}},
                        {"kind", segment_kind(s)},
                        {"provenance", s.provenance}});
  }
  j["segments"] = segments;
  if (bound.statement) {
    j["statement"] = {{"lambda", bound.statement->lambda}, {"reference", bound.statement->reference.name()}};
  }
  Json certs = Json::array();
  for (const auto& c : bound.certificates) {
    certs.push_back({{"description", c.description},
                     {"x0", c.x0},
                     {"quoted", c.quoted},
                     {"threshold", c.threshold},
                     {"recomputed", c.recomputed},
                     {"holds", c.holds}});
  }
  j["certificates"] = certs;
  if (volume) {
    const BoundSegment& active = bound.active_segment(*volume);
    j["volume"] = *volume;
    j["value"] = active(*volume);
    j["active_segment"] = {{"kind", segment_kind(active)}, {"provenance", active.provenance}};
  }
  return j;
}

int cmd_bound(const BoundArgs& a, const RunConfig& cfg, std::ostream& out) {
  Json j;
  if (a.large_volume) {
    const ProfileFn& factor = [&] {
      const double mu = std::pow(a.vol_m / sphere_volume(a.factor_dim), 2.0 / a.factor_dim);
      return sphere_profile(SphereGeometry(a.factor_dim, mu));
    }();
    const LargeVolumeBound b = large_volume_bound(a.vol_m, a.n, factor, a.alpha);
    j = {{"kind", "large-volume"},
         {"factor_bound", factor.name()},
         {"alpha", b.alpha},
         {"vol_m", b.vol_m},
         {"n", b.n},
         {"k", b.k},
         {"v0", b.v0},
         {"tube_coefficient", b.tube_coefficient},
         {"coefficient", b.coefficient},
         {"exponent", (b.n - 1.0) / b.n}};
    if (a.volume) {
      j["volume"] = *a.volume;
      j["value"] = b(*a.volume);
    }
  } else if (a.forward) {
    const PowerLawBound b = forward_extension(a.x0, a.y0, a.n);
    j = {{"kind", "forward"},
         {"x0", a.x0},
         {"y0", a.y0},
         {"n", a.n},
         {"coefficient", b.coefficient},
         {"exponent", b.exponent},
         {"valid_from", b.valid_from}};
  } else if (a.backward) {
    const ScaledReferenceBound b =
        backward_extension(a.v0, a.k, a.dim, sphere_profile(SphereGeometry(a.dim)));
    j = {{"kind", "backward"},
         {"v0", a.v0},
         {"k", a.k},
         {"dim", a.dim},
         {"gamma", euclidean_constant(a.dim)},
         {"lambda", b.lambda},
         {"reference", b.reference.name()}};
  } else if (a.headline) {
    const ProductId id = parse_product(a.product);
    const ScaledReferenceBound b = headline_statement(id);
    j = {{"kind", "headline"},
         {"product", std::string(to_string(id))},
         {"lambda", b.lambda},
         {"reference", b.reference.name()}};
    if (a.volume) {
      j["volume"] = *a.volume;
      j["value"] = b(*a.volume);
    }
  } else {
    if (a.product.empty()) throw DomainError("bound needs --product or one of --large-volume/--forward/--backward");
    ProfileFactory factory(cfg.cylinder());
    j = describe_bound(product_bound(parse_product(a.product), factory), a.volume);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& ids, bool all, const RunConfig& cfg, std::ostream& out) {
  std::vector<const ClaimSpec*> claims;
  if (all) {
    for (const auto& c : claim_registry()) claims.push_back(&c);
  } else {
    if (ids.empty()) throw DomainError("verify needs --claim ID or --all");
    for (const auto& id : ids) claims.push_back(&find_claim(id));
  }
  ProfileFactory factory(cfg.cylinder());
  std::vector<VerificationReport> reports;
  for (const ClaimSpec* c : claims) reports.push_back(run_claim(*c, factory, cfg.samples));
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (cfg.format == "csv") {
    out << "claim,passed,samples,min_margin,min_margin_at,relative_min_margin\n";
    for (const auto& r : reports) {
      out << r.claim_id << ',' << (r.passed ? "true" : "false") << ',' << r.samples << ','
          << format_decimal(r.min_margin) << ',' << format_decimal(r.min_margin_location) << ','
          << format_decimal(r.relative_min_margin) << '\n';
    }
  } else {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << Json{{"passed", passed}, {"reports", list}}.dump(2) << '\n';
  }
  return passed ? kExitOk : kExitFailed;
}

// --- figure ----------------------------------------------------------------

int cmd_figure(int id, const RunConfig& cfg, std::ostream& out) {
  ProfileFactory factory(cfg.cylinder());
  const FigureTable table = figure_data(id, cfg.samples, factory);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"v", r.v}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}});
    }
    out << Json{{"figure", table.figure},
                {"lhs", table.lhs_name},
                {"rhs", table.rhs_name},
                {"interval", {table.interval.lo, table.interval.hi}},
                {"rows", rows}}
               .dump(2)
        << '\n';
  } else {
    write_figure_csv(out, table);
  }
  return kExitOk;
}

// --- yamabe ----------------------------------------------------------------

int cmd_yamabe(const std::string& product, std::ostream& out) {
  Json j;
  j["sphere_constants"] = {{"Y(S^4)", yamabe_sphere(4)}, {"Y(S^5)", yamabe_sphere(5)}};
  if (!product.empty()) {
    const ProductId id = parse_product(product);
    j["product"] = std::string(to_string(id));
    j["estimate"] = to_json(product_estimate(id));
    Json related = Json::array();
    for (const auto& r : corollary_reports()) {
      if (r.product == id) related.push_back(to_json(r));
    }
    j["reports"] = related;
  } else {
    Json list = Json::array();
    for (const auto& r : corollary_reports()) list.push_back(to_json(r));
    j["reports"] = list;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoperimetric profiles, certified lower bounds and Yamabe ratios"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tolerance, "Relative quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Grid size for checks and figures")->check(CLI::Range(2, 1 << 24));
  app.add_option("--eta-grid", cfg.eta_grid, "Tabulated cylinder ball family size")->check(CLI::Range(64, 1 << 20));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "Write results to this file");

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Evaluate an isoperimetric profile");
  profile->add_option("--space", pa.space, "euclidean, sphere or cylinder (S^dim x R)")->required();
  profile->add_option("--dim", pa.dim, "Dimension (sphere factor dimension for cylinder)");
  profile->add_option("--scale", pa.scale, "Metric scale mu");
  profile->add_option("--volume", pa.volume, "Single volume");
  profile->add_option("--from", pa.from, "Start of a volume range");
  profile->add_option("--to", pa.to, "End of a volume range");
  profile->add_option("--points", pa.points, "Points in the range");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Certified lower bounds");
  bound->add_option("--product", ba.product, "s2xr2, s2xr3 or s3xr2");
  bound->add_option("--volume", ba.volume, "Evaluate at this volume");
  bound->add_flag("--headline", ba.headline, "Rounded single-profile statement");
  bound->add_flag("--large-volume", ba.large_volume, "Large-volume power-law bound from a concave factor bound");
  bound->add_option("--vol-m", ba.vol_m, "Volume of the compact factor");
  bound->add_option("--n", ba.n, "Euclidean factor dimension");
  bound->add_option("--alpha", ba.alpha, "Fraction alpha in (0,1)");
  bound->add_option("--factor-dim", ba.factor_dim, "Dimension of the round sphere used as factor bound");
  bound->add_flag("--forward", ba.forward, "Forward extension of a certified pair");
  bound->add_option("--x0", ba.x0, "Certified volume");
  bound->add_option("--y0", ba.y0, "Certified lower bound at x0");
  bound->add_flag("--backward", ba.backward, "Backward extension factor k / gamma_d");
  bound->add_option("--v0", ba.v0, "Volume of the backward hypothesis");
  bound->add_option("--k", ba.k, "Coefficient k of the backward hypothesis");
  bound->add_option("--dim", ba.dim, "Total dimension d for --backward");

  std::vector<std::string> claim_ids;
  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "Run registered claims");
  verify->add_option("--claim", claim_ids, "Claim id (repeatable)");
  verify->add_flag("--all", verify_all, "Run every registered claim");

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "Curve data of a plotted comparison");
  figure->add_option("--id", figure_id, "Figure 1..6")->required();

  std::string yamabe_product;
  bool yamabe_all = false;
  auto* yamabe = app.add_subcommand("yamabe", "Yamabe ratio reports");
  yamabe->add_option("--product", yamabe_product, "s2xr2, s2xr3 or s3xr2");
  yamabe->add_flag("--all", yamabe_all, "All reports (default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  try {
    if (*profile) return cmd_profile(pa, cfg, sink);
    if (*bound) return cmd_bound(ba, cfg, sink);
    if (*verify) return cmd_verify(claim_ids, verify_all, cfg, sink);
    if (*figure) return cmd_figure(figure_id, cfg, sink);
    if (*yamabe) return cmd_yamabe(yamabe_all ? std::string() : yamabe_product, sink);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace isoprofile::cli
