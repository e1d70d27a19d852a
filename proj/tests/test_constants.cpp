#include <cmath>

#include "doctest.h"
#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/quadrature.hpp"

using namespace isoprofile;

TEST_CASE("sphere volumes match closed forms") {
  CHECK(sphere_volume(0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(sphere_volume(2) == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));
  CHECK(sphere_volume(4) == doctest::Approx(8 * kPi * kPi / 3).epsilon(1e-14));
  CHECK(sphere_volume(5) == doctest::Approx(kPi * kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_volume(-1), DomainError);
}

TEST_CASE("unit ball volume is V_{m-1} / m") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(unit_ball_volume(m) == doctest::Approx(sphere_volume(m - 1) / m).epsilon(1e-14));
  }
}

TEST_CASE("euclidean isoperimetric constants") {
  CHECK(euclidean_constant(2) == doctest::Approx(2 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK(euclidean_constant(3) == doctest::Approx(std::cbrt(36 * kPi)).epsilon(1e-14));
  CHECK(euclidean_constant(2) == doctest::Approx(3.5449077).epsilon(1e-7));
  CHECK(euclidean_constant(3) == doctest::Approx(4.8359759).epsilon(1e-7));
  CHECK(euclidean_constant(4) == doctest::Approx(5.9618004).epsilon(1e-7));
  CHECK(euclidean_constant(5) == doctest::Approx(6.9699506).epsilon(1e-7));
  CHECK_THROWS_AS(euclidean_constant(1), DomainError);
}

TEST_CASE("sine power integral agrees with quadrature") {
  QuadratureOptions opts;
  opts.relative_tolerance = 1e-13;
  for (int k = 0; k <= 7; ++k) {
    for (double y : {1e-6, 0.01, 0.3, kPi / 4, 1.0, 2.0, 2.5, 3 * kPi / 4, 3.0, 3.14, kPi}) {
      const auto ref = tanh_sinh_scalar([k](double x, double, double) { return std::pow(std::sin(x), k); },
                                        0.0, y, opts);
      INFO("k = " << k << ", y = " << y);
      CHECK(sine_power_integral(k, y) == doctest::Approx(ref.value[0]).epsilon(1e-11));
    }
  }
}

TEST_CASE("sine power integral over the half circle") {
  for (int k = 0; k <= 9; ++k) {
    const double full = std::sqrt(kPi) * std::tgamma((k + 1) / 2.0) / std::tgamma(k / 2.0 + 1);
    CHECK(sine_power_integral(k, kPi) == doctest::Approx(full).epsilon(1e-13));
    // Symmetry about pi/2.
    CHECK(sine_power_integral(k, 1.1) + sine_power_integral(k, kPi - 1.1) ==
          doctest::Approx(full).epsilon(1e-13));
  }
}

TEST_CASE("sine power ratio keeps accuracy at tiny angles") {
  for (int k = 1; k <= 6; ++k) {
    // S(y) / sin^k(y) -> y / (k + 1) as y -> 0.
    CHECK(sine_power_ratio(k, 1e-200) == doctest::Approx(1e-200 / (k + 1)).epsilon(1e-12));
    const double y = 0.7;
    CHECK(sine_power_ratio(k, y) ==
          doctest::Approx(sine_power_integral(k, y) / std::pow(std::sin(y), k)).epsilon(1e-13));
  }
}
