#include "isoprofile/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "isoprofile/error.hpp"

namespace isoprofile {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::vector<double> uniform_grid(Interval interval, int samples) {
  std::vector<double> grid(samples);
  for (int i = 0; i < samples; ++i) {
    grid[i] = interval.lo + (interval.hi - interval.lo) * i / (samples - 1.0);
  }
  grid.back() = interval.hi;
  return grid;
}

void check_request(Interval interval, int samples) {
  if (samples < kMinimumSamples) {
    throw DomainError("at least " + std::to_string(kMinimumSamples) + " samples are required");
  }
  if (!(interval.lo < interval.hi) || !std::isfinite(interval.hi)) {
    throw DomainError("verification interval must be finite and non-empty");
  }
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

// Tracks the smallest margin seen and where.
struct MarginTracker {
  double min_margin = kInfinity;
  double location = 0.0;
  double relative = kInfinity;
  int count = 0;

  void add(double v, double f, double g) {
    const double margin = f - g;
    ++count;
    if (margin < min_margin) {
      min_margin = margin;
      location = v;
    }
    if (g > 0.0) relative = std::min(relative, margin / g);
  }
};

}  // namespace

VerificationReport dominates(const ProfileFn& f, const ProfileFn& g, Interval interval,
                             int base_samples, std::string claim_id) {
  check_request(interval, base_samples);
  VerificationReport report{.claim_id = std::move(claim_id), .interval = interval};
  report.notes.push_back(f.name() + " > " + g.name());

  MarginTracker tracker;
  double current = interval.lo;
  auto margin_at = [&](double v) {
    current = v;
    const double fv = f(v);
    const double gv = g(v);
    tracker.add(v, fv, gv);
    return fv - gv;
  };

  try {
    const std::vector<double> grid = uniform_grid(interval, base_samples);
    std::size_t worst = 0;
    double worst_margin = kInfinity;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double m = margin_at(grid[i]);
      if (m < worst_margin) {
        worst_margin = m;
        worst = i;
      }
    }
    // Three rounds of bisection on the 3-point bracket around the minimum.
    double lo = grid[worst == 0 ? 0 : worst - 1];
    double hi = grid[std::min(worst + 1, grid.size() - 1)];
    for (int round = 0; round < 3; ++round) {
      std::array<double, 5> points{};
      std::array<double, 5> margins{};
      for (int j = 0; j < 5; ++j) {
        points[j] = lo + (hi - lo) * j / 4.0;
        margins[j] = margin_at(points[j]);
      }
      const auto best = static_cast<int>(std::min_element(margins.begin(), margins.end()) - margins.begin());
      lo = points[std::max(best - 1, 0)];
      hi = points[std::min(best + 1, 4)];
    }
  } catch (const std::exception& e) {
    report.error = "evaluation failed at v = " + fmt(current) + ": " + e.what();
    report.min_margin_location = current;
  }

  report.samples = tracker.count;
  report.min_margin = tracker.min_margin;
  if (!report.error) report.min_margin_location = tracker.location;
  report.relative_min_margin = tracker.relative;
  report.tolerance_used = 0.0;
  report.passed = !report.error && tracker.min_margin > 0.0;
  return report;
}

VerificationReport check_monotone(const ProfileFn& p, Interval interval, int samples,
                                  std::string claim_id) {
  check_request(interval, samples);
  VerificationReport report{.claim_id = std::move(claim_id), .interval = interval};
  report.notes.push_back(p.name() + " nondecreasing");
  report.tolerance_used = kMonotoneSlack;
  double current = interval.lo;
  try {
    const std::vector<double> grid = uniform_grid(interval, samples);
    double previous = p(grid.front());
    report.min_margin = kInfinity;
    report.relative_min_margin = kInfinity;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      current = grid[i];
      const double value = p(grid[i]);
      const double step = value - previous;
      if (step < report.min_margin) {
        report.min_margin = step;
        report.min_margin_location = grid[i];
      }
      if (previous > 0.0) report.relative_min_margin = std::min(report.relative_min_margin, step / previous);
      previous = value;
    }
    report.samples = samples;
  } catch (const std::exception& e) {
    report.error = "evaluation failed at v = " + fmt(current) + ": " + e.what();
    report.min_margin_location = current;
  }
  report.passed = !report.error && report.min_margin >= -kMonotoneSlack;
  return report;
}

VerificationReport check_renormalized_concavity(const ProfileFn& p, int ambient_dim,
                                                Interval interval, int samples,
                                                std::string claim_id) {
  check_request(interval, samples);
  if (ambient_dim < 2) throw DomainError("ambient dimension must be >= 2");
  VerificationReport report{.claim_id = std::move(claim_id), .interval = interval};
  report.notes.push_back(p.name() + ": I^{d/(d-1)} concave, I/v^{(d-1)/d} nonincreasing");
  const double d = ambient_dim;
  const double power = d / (d - 1.0);
  const double exponent = (d - 1.0) / d;
  double current = interval.lo;
  try {
    const std::vector<double> grid = uniform_grid(interval, samples);
    std::vector<double> values(grid.size());
    std::vector<double> renormalized(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      current = grid[i];
      values[i] = p(grid[i]);
      renormalized[i] = std::pow(values[i], power);
    }
    const double scale = *std::max_element(renormalized.begin(), renormalized.end());
    report.tolerance_used = kConcavitySlack * scale;

    // Margin: -(second difference); concavity means margin >= -slack.
    report.min_margin = kInfinity;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      const double margin = -(renormalized[i - 1] - 2.0 * renormalized[i] + renormalized[i + 1]);
      if (margin < report.min_margin) {
        report.min_margin = margin;
        report.min_margin_location = grid[i];
      }
    }
    report.relative_min_margin = scale > 0.0 ? report.min_margin / scale : 0.0;

    double worst_ratio_step = -kInfinity;
    double worst_ratio_location = grid.front();
    bool ratio_ok = true;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (grid[i - 1] <= 0.0) continue;
      const double before = values[i - 1] / std::pow(grid[i - 1], exponent);
      const double after = values[i] / std::pow(grid[i], exponent);
      const double step = (after - before) / before;
      if (step > worst_ratio_step) {
        worst_ratio_step = step;
        worst_ratio_location = grid[i];
      }
      if (step > kMonotoneSlack) ratio_ok = false;
    }
    report.notes.push_back("largest relative increase of I/v^{(d-1)/d}: " + fmt(worst_ratio_step) +
                           " at v = " + fmt(worst_ratio_location));
    report.samples = samples;
    report.passed = report.min_margin >= -report.tolerance_used && ratio_ok;
  } catch (const std::exception& e) {
    report.error = "evaluation failed at v = " + fmt(current) + ": " + e.what();
    report.min_margin_location = current;
    report.passed = false;
  }
  return report;
}

double profile_maximizer(const ProfileFn& p) {
  if (!p.is_compact()) throw DomainError(p.name() + " has no maximum on an unbounded domain");
  double a = 0.0;
  double b = p.domain_max();
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = p(c);
  double fd = p(d);
  while (b - a > 1e-10 * p.domain_max()) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = p(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = p(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace isoprofile
