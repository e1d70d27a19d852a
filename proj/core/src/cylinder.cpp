#include "isoprofile/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"

namespace isoprofile {
namespace {

// 3-point Gauss-Legendre on [0, 1].
constexpr double kGaussOffset = 0.3872983346207417;  // sqrt(3/5) / 2
constexpr std::array<double, 3> kGaussNodes = {0.5 - kGaussOffset, 0.5, 0.5 + kGaussOffset};
constexpr std::array<double, 3> kGaussWeights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

// Below this fraction of eta, 1 - u is integrated from h' instead of
// subtracting two nearly equal mean curvatures.
constexpr double kNearEndpoint = 0.05;

std::string describe(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

}  // namespace

CylinderBallFamily::CylinderBallFamily(int m, const CylinderOptions& options)
    : dim_(m), options_(options) {
  if (m < 2) throw DomainError("cylinder sphere factor needs m >= 2, got " + std::to_string(m));
  if (options.eta_grid < 64) {
    throw DomainError("eta grid needs at least 64 points, got " + std::to_string(options.eta_grid));
  }
  if (!(options.quadrature_tolerance > 0.0) || !(options.volume_tolerance > 0.0)) {
    throw DomainError("cylinder tolerances must be > 0");
  }
  quadrature_.relative_tolerance = options.quadrature_tolerance;
  boundary_volume_ = sphere_volume(m - 1);
  slab_area_ = 2.0 * sphere_volume(m);

  // Locate eta*: coarse scan, then golden section on the bracketing cell.
  constexpr int kScan = 64;
  int best = 1;
  double best_volume = 0.0;
  for (int j = 1; j < kScan; ++j) {
    const double v = ball(kPi * j / kScan).volume;
    if (v > best_volume) {
      best_volume = v;
      best = j;
    }
  }
  if (best == kScan - 1) throw NumericError("ball volume has no interior maximum", kPi, best_volume);
  double a = kPi * (best - 1) / kScan;
  double b = kPi * (best + 1) / kScan;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = ball(c).volume;
  double fd = ball(d).volume;
  while (b - a > 1e-8) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = ball(c).volume;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = ball(d).volume;
    }
  }
  branch_end_ = ball(0.5 * (a + b));

  // Chebyshev-spaced eta on (0, eta*], last node exactly eta*.
  const int n = options.eta_grid;
  samples_.reserve(n);
  for (int i = 1; i < n; ++i) {
    const double eta = 0.5 * branch_end_.eta * (1.0 - std::cos(kPi * i / n));
    samples_.push_back(ball(eta));
  }
  samples_.push_back(branch_end_);

  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!(samples_[i].area > 0.0) || !(samples_[i].volume > 0.0)) {
      throw NumericError("non-positive ball measure at eta = " + describe(samples_[i].eta),
                         samples_[i].eta, samples_[i].area);
    }
    if (i > 0 && !(samples_[i].volume > samples_[i - 1].volume)) {
      throw NumericError("ball volume not increasing at eta = " + describe(samples_[i].eta),
                         samples_[i].eta, samples_[i].volume - samples_[i - 1].volume);
    }
  }

  // Small balls are asymptotically Euclidean.
  const CylinderSample& first = samples_.front();
  const double ratio_small = first.area / std::pow(first.volume, m / (m + 1.0));
  const double gamma = euclidean_constant(m + 1);
  if (std::abs(ratio_small / gamma - 1.0) > 1e-6) {
    throw NumericError("ball family misses the Euclidean limit", first.eta, ratio_small - gamma);
  }

  const auto cross = std::find_if(samples_.begin(), samples_.end(),
                                  [this](const CylinderSample& s) { return s.area >= slab_area_; });
  if (cross == samples_.end()) {
    crossing_ = branch_end_;
  } else if (cross == samples_.begin()) {
    crossing_ = *cross;
  } else {
    crossing_ = solve(*(cross - 1), *cross, slab_area_,
                      [](const CylinderSample& s) { return s.area; },
                      1e-13);
  }
}

CylinderSample CylinderBallFamily::ball(double eta) const {
  if (!(eta > 0.0 && eta < kPi)) {
    throw DomainError("ball parameter eta must lie in (0, pi), got " + describe(eta));
  }
  const int k = dim_ - 1;
  const double h_eta = 1.0 / sine_power_ratio(k, eta);

  // -h'(t) = h(t) (h(t) - k cot t) > 0.
  auto minus_h_prime = [k](double t) {
    const double h = 1.0 / sine_power_ratio(k, t);
    return h * (h - k * std::cos(t) / std::sin(t));
  };

  auto integrand = [&](double y, double, double to_eta) -> std::array<double, 2> {
    const double ratio = sine_power_ratio(k, y);  // 1 / h(y)
    const double u = h_eta * ratio;
    double one_minus_u;
    if (to_eta < kNearEndpoint * eta) {
      // h(y) - h(eta) = int_y^eta -h'(t) dt over an interval of length to_eta.
      double mean = 0.0;
      for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
        mean += kGaussWeights[i] * minus_h_prime(eta - to_eta * kGaussNodes[i]);
      }
      one_minus_u = to_eta * mean * ratio;
    } else {
      one_minus_u = 1.0 - u;
    }
    const double root = std::sqrt(one_minus_u * (1.0 + u));
    const double sine_power = std::pow(std::sin(y), k);
    return {sine_power / root, ratio * sine_power * u / root};
  };

  const auto result = tanh_sinh<2>(integrand, 0.0, eta, quadrature_);
  if (!result.converged) {
    throw NumericError("Pedrosa quadrature did not converge at eta = " + describe(eta) +
                           " (relative change " + describe(result.relative_error) + ")",
                       eta, result.relative_error);
  }
  return {.eta = eta,
          .volume = 2.0 * boundary_volume_ * result.value[1],
          .area = 2.0 * boundary_volume_ * result.value[0]};
}

template <class Value>
CylinderSample CylinderBallFamily::solve(CylinderSample lo, CylinderSample hi, double target,
                                         Value value, double tolerance) const {
  double f_lo = value(lo) - target;
  double f_hi = value(hi) - target;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo > 0.0 || f_hi < 0.0) {
    throw NumericError("target " + describe(target) + " not bracketed on [" + describe(lo.eta) +
                           ", " + describe(hi.eta) + "]",
                       lo.eta, f_lo);
  }
  int side = 0;
  for (int iteration = 0; iteration < 200; ++iteration) {
    double eta = hi.eta - f_hi * (hi.eta - lo.eta) / (f_hi - f_lo);
    if (!(eta > lo.eta && eta < hi.eta)) eta = 0.5 * (lo.eta + hi.eta);
    const CylinderSample trial = ball(eta);
    const double f = value(trial) - target;
    if (std::abs(f) <= tolerance * std::abs(target) || hi.eta - lo.eta <= 1e-15 * hi.eta) {
      return trial;
    }
    if (f < 0.0) {
      lo = trial;
      f_lo = f;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = trial;
      f_hi = f;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
  }
  throw NumericError("volume inversion did not converge near eta = " + describe(lo.eta), lo.eta,
                     f_lo);
}

CylinderSample CylinderBallFamily::ball_at_volume(double w) const {
  if (!(w > 0.0)) throw DomainError("ball volume must be > 0, got " + describe(w));
  if (w > max_ball_volume()) {
    throw DomainError("no ball-type region of volume " + describe(w) + " (largest is " +
                      describe(max_ball_volume()) + ")");
  }
  auto volume = [](const CylinderSample& s) { return s.volume; };
  const auto upper = std::lower_bound(
      samples_.begin(), samples_.end(), w,
      [](const CylinderSample& s, double target) { return s.volume < target; });
  if (upper->volume == w) return *upper;
  if (upper != samples_.begin()) return solve(*(upper - 1), *upper, w, volume, options_.volume_tolerance);

  // Below the table: volume ~ eta^{m+1} for small eta.
  const CylinderSample& first = samples_.front();
  double eta = first.eta * std::pow(w / first.volume, 1.0 / (dim_ + 1.0));
  CylinderSample lo = ball(0.5 * eta);
  while (lo.volume >= w) lo = ball(0.5 * lo.eta);
  return solve(lo, first, w, volume, options_.volume_tolerance);
}

double CylinderBallFamily::profile(double w) const {
  if (!(w > 0.0)) throw DomainError("cylinder profile volume must be > 0, got " + describe(w));
  if (w >= crossing_volume()) return slab_area_;
  return std::min(ball_at_volume(w).area, slab_area_);
}

std::shared_ptr<const CylinderBallFamily> cylinder_family(int m, const CylinderOptions& options) {
  return std::make_shared<const CylinderBallFamily>(m, options);
}

ProfileFn cylinder_profile(std::shared_ptr<const CylinderBallFamily> family, double mu) {
  if (!family) throw DomainError("cylinder profile needs a ball family");
  if (!(mu > 0.0)) throw DomainError("cylinder metric scale must be > 0");
  const int m = family->dim();
  ProfileFn base("S^" + std::to_string(m) + "xR", m + 1, std::numeric_limits<double>::infinity(),
                 [family](double w) { return family->profile(w); },
                 {.monotone_nondecreasing = true, .renormalized_concave = true});
  if (mu == 1.0) return base;
  std::ostringstream name;
  name << "S^" << m << "xR(" << mu << " (g0+dt^2))";
  ProfileFn scaled = scale_profile(base, m + 1, mu);
  return ProfileFn(name.str(), m + 1, scaled.domain_max(),
                   [scaled](double v) { return scaled(v); }, scaled.flags());
}

ProfileFn cylinder_profile(int m, double mu, const CylinderOptions& options) {
  return cylinder_profile(cylinder_family(m, options), mu);
}

}  // namespace isoprofile
