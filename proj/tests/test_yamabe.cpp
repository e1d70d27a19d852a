#include <cmath>

#include "doctest.h"
#include "isoprofile/constants.hpp"
#include "isoprofile/error.hpp"
#include "isoprofile/yamabe.hpp"

using namespace isoprofile;

TEST_CASE("sphere Yamabe constants") {
  CHECK(yamabe_sphere(3) == doctest::Approx(6 * std::pow(2 * kPi * kPi, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(yamabe_sphere(4) == doctest::Approx(61.56).epsilon(1e-3));
  CHECK(yamabe_sphere(5) == doctest::Approx(79.0).epsilon(1e-3));
  CHECK_THROWS_AS(yamabe_sphere(2), DomainError);
}

TEST_CASE("product ratios") {
  const auto a = product_yamabe_ratio(2, 2, 4.7, 0.886, true);
  CHECK(a.curvature_term == doctest::Approx(0.78333333).epsilon(1e-8));
  CHECK(a.profile_term == doctest::Approx(0.784996).epsilon(1e-12));
  CHECK(a.ratio == a.curvature_term);
  CHECK(std::round(a.ratio * 100) / 100 == doctest::Approx(0.78));

  const auto b = product_yamabe_ratio(2, 3, 7.5, 0.867, true);
  CHECK(b.ratio == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(b.profile_term == doctest::Approx(0.751689).epsilon(1e-12));

  const auto c = product_yamabe_ratio(3, 2, 2.77, 0.91, true);
  CHECK(c.ratio == doctest::Approx(0.8281).epsilon(1e-14));
  CHECK(c.curvature_term == doctest::Approx(0.831).epsilon(1e-12));
  CHECK(c.absolute == doctest::Approx(0.8281 * yamabe_sphere(5)).epsilon(1e-14));
}

TEST_CASE("ratio refuses without the monotone hypothesis") {
  CHECK_THROWS_AS(product_yamabe_ratio(2, 2, 4.7, 0.886, false), DomainError);
  CHECK_THROWS_AS(product_yamabe_ratio(2, 2, 4.7, 1.1, true), DomainError);
  CHECK_THROWS_AS(product_yamabe_ratio(2, 2, 0.0, 0.5, true), DomainError);
}

TEST_CASE("ratio is monotone in both parameters and reaches one") {
  for (double lambda = 0.1; lambda <= 1.0; lambda += 0.05) {
    for (double mu = 0.5; mu <= 10.0; mu += 0.25) {
      const auto e = product_yamabe_ratio(2, 3, mu, lambda, true);
      CHECK(product_yamabe_ratio(2, 3, mu + 0.25, lambda, true).ratio >= e.ratio);
      if (lambda + 0.05 <= 1.0) CHECK(product_yamabe_ratio(2, 3, mu, lambda + 0.05, true).ratio >= e.ratio);
    }
  }
  CHECK(product_yamabe_ratio(2, 2, 6.0, 1.0, true).ratio == 1.0);
  CHECK(product_yamabe_ratio(3, 2, 20.0 / 6.0, 1.0, true).ratio == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("corollary reports") {
  const auto reports = corollary_reports();
  REQUIRE(reports.size() == 8);
  int recomputed = 0;
  for (const auto& r : reports) recomputed += r.recomputed;
  CHECK(recomputed == 4);
  CHECK(reports[0].ratio == doctest::Approx(0.78333333).epsilon(1e-8));
  CHECK(reports[1].quoted == 0.785);
  CHECK(reports[1].note.find("0.785") != std::string::npos);
  CHECK(reports[4].absolute == doctest::Approx(43.7).epsilon(2e-3));
  CHECK(reports[4].note.find("differs") != std::string::npos);
  CHECK(reports[5].absolute == doctest::Approx(56.7).epsilon(5e-3));
  CHECK(reports[6].absolute == doctest::Approx(49.0).epsilon(5e-3));
  CHECK(reports[7].note.find("0.57") != std::string::npos);
  CHECK(product_estimate(ProductId::S3xR2).ratio == doctest::Approx(0.8281));
}
