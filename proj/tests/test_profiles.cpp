#include <cmath>
#include <random>

#include "doctest.h"
#include "isoprofile/constants.hpp"
#include "isoprofile/curves.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/sphere.hpp"
#include "isoprofile/verify.hpp"

using namespace isoprofile;

TEST_CASE("euclidean profile") {
  const ProfileFn p = euclidean_profile(3);
  CHECK(p.ambient_dim() == 3);
  CHECK_FALSE(p.is_compact());
  CHECK(p(1.0) == doctest::Approx(euclidean_constant(3)).epsilon(1e-15));
  CHECK(p(8.0) == doctest::Approx(euclidean_constant(3) * 4.0).epsilon(1e-14));
  CHECK(p(0.0) == 0.0);
  CHECK_THROWS_AS(p(-1.0), DomainError);
  CHECK_THROWS_AS(p(std::nan("")), DomainError);
}

TEST_CASE("unit two-sphere profile is sqrt(v (4 pi - v))") {
  const ProfileFn p = sphere_profile(SphereGeometry(2));
  for (double v : {1e-6, 0.1, 1.0, 3.0, 2 * kPi, 9.0, 12.0, 4 * kPi - 1e-3}) {
    INFO("v = " << v);
    CHECK(p(v) == doctest::Approx(std::sqrt(v * (4 * kPi - v))).epsilon(1e-10));
  }
  CHECK(p(4 * kPi) == 0.0);
  CHECK(p.is_boundary(4 * kPi));
  CHECK_THROWS_AS(p(4 * kPi + 1e-9), DomainError);
}

TEST_CASE("sphere profile is symmetric about half the volume") {
  for (int m = 2; m <= 5; ++m) {
    for (double mu : {1.0, 2.77, 4.7}) {
      const ProfileFn p = sphere_profile(SphereGeometry(m, mu));
      const double total = p.domain_max();
      CHECK(total == doctest::Approx(std::pow(mu, m / 2.0) * sphere_volume(m)).epsilon(1e-14));
      for (double t : {0.01, 0.2, 0.45}) {
        CHECK(p(t * total) == doctest::Approx(p((1 - t) * total)).epsilon(1e-9));
      }
      // Hemisphere: area of the equator.
      CHECK(p(0.5 * total) ==
            doctest::Approx(std::pow(mu, (m - 1) / 2.0) * sphere_volume(m - 1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("sphere geometry validation") {
  CHECK_THROWS_AS(SphereGeometry(0), DomainError);
  CHECK_THROWS_AS(SphereGeometry(2, 0.0), DomainError);
  CHECK_THROWS_AS(sphere_profile(SphereGeometry(1)), DomainError);
  const BallMeasure half = sphere_ball(SphereGeometry(3), kPi / 2);
  CHECK(half.volume == doctest::Approx(kPi * kPi).epsilon(1e-13));
  CHECK(half.area == doctest::Approx(4 * kPi).epsilon(1e-13));
}

TEST_CASE("small volumes are euclidean") {
  for (int m = 2; m <= 5; ++m) {
    const ProfileFn p = sphere_profile(SphereGeometry(m, 3.0));
    const double v = 1e-4;
    CHECK(p(v) / euclidean_profile(m)(v) == doctest::Approx(1.0).epsilon(0.02));
  }
}

TEST_CASE("scaling composes multiplicatively") {
  const ProfileFn base = sphere_profile(SphereGeometry(4));
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  std::uniform_real_distribution<double> fraction(0.001, 0.999);
  for (int i = 0; i < 100; ++i) {
    const double a = scale(rng);
    const double b = scale(rng);
    const ProfileFn twice = scale_profile(scale_profile(base, a), b);
    const ProfileFn once = scale_profile(base, a * b);
    const double v = fraction(rng) * once.domain_max();
    CHECK(twice.domain_max() == doctest::Approx(once.domain_max()).epsilon(1e-12));
    CHECK(twice(v) == doctest::Approx(once(v)).epsilon(1e-9));
  }
}

TEST_CASE("scaling validates its inputs") {
  const ProfileFn p = euclidean_profile(3);
  CHECK_THROWS_AS(scale_profile(p, 0.0), DomainError);
  CHECK_THROWS_AS(scale_profile(p, 4, 2.0), DomainError);
  // Euclidean space is scale invariant.
  CHECK(scale_profile(p, 7.0)(5.0) == doctest::Approx(p(5.0)).epsilon(1e-13));
}

TEST_CASE("multiply and power law") {
  const ProfileFn p = multiply(euclidean_profile(2), 0.5);
  CHECK(p(4.0) == doctest::Approx(euclidean_constant(2)).epsilon(1e-14));
  const ProfileFn q = power_law(12.32, 0.5, 4);
  CHECK(q(100.0) == doctest::Approx(123.2).epsilon(1e-14));
  CHECK(q.monotone_nondecreasing());
  CHECK(q.renormalized_concave());
  CHECK_FALSE(power_law(1.0, 0.9, 4).renormalized_concave());
}

TEST_CASE("sphere profile has concave renormalization") {
  for (int m = 2; m <= 5; ++m) {
    const ProfileFn p = sphere_profile(SphereGeometry(m, 2.0));
    const auto report = check_renormalized_concavity(p, m, {1e-3 * p.domain_max(), 0.5 * p.domain_max()},
                                                     1024);
    INFO((report.notes.empty() ? std::string() : report.notes.back()));
    CHECK(report.passed);
  }
}

TEST_CASE("curve factory") {
  ProfileFactory factory;
  const ProfileFn s = factory.make({.kind = CurveKind::Sphere, .dim = 4, .scale = 4.7, .factor = 0.886});
  CHECK(s(100.0) == doctest::Approx(0.886 * sphere_profile(SphereGeometry(4, 4.7))(100.0)).epsilon(1e-14));
  CHECK(describe(CurveSpec{.kind = CurveKind::PowerLaw, .dim = 4, .factor = 2.0, .exponent = 0.5}) == "2 v^0.5");
  CHECK(factory.family(3) == factory.family(3));
}
