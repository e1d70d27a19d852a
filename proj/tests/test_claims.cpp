#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "isoprofile/claims.hpp"
#include "isoprofile/error.hpp"

using namespace isoprofile;

TEST_CASE("registry ids are unique and cover six figures") {
  std::set<std::string_view> ids;
  std::set<int> figures;
  for (const auto& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    if (c.figure) figures.insert(c.figure);
  }
  CHECK(ids.size() >= 10);
  CHECK(figures == std::set<int>{1, 2, 3, 4, 5, 6});
  CHECK(find_claim("fig1").figure == 1);
  CHECK_THROWS_AS(find_claim("nope"), DomainError);
}

TEST_CASE("every registered claim passes") {
  ProfileFactory factory;
  for (const auto& c : claim_registry()) {
    const auto r = run_claim(c, factory, 512);
    INFO(c.id << ": " << (r.error ? *r.error : std::string()));
    CHECK(r.passed);
    CHECK(r.min_margin > 0.0);
  }
}

TEST_CASE("agreement at v = 13 is narrow but positive") {
  ProfileFactory factory;
  const auto r = run_claim(find_claim("s2xr3.small-volume"), factory, 256);
  CHECK(r.passed);
  CHECK(r.min_margin == doctest::Approx(49.3642 - 6.34 * std::pow(13.0, 0.8)).epsilon(1e-3));
}

TEST_CASE("peak claims compare against half the sphere volume") {
  ProfileFactory factory;
  for (const char* id : {"s2xr2.continuation", "s3xr2.continuation", "s2xr3.continuation"}) {
    const auto r = run_claim(find_claim(id), factory, 512);
    CHECK(r.passed);
  }
}

TEST_CASE("figure data") {
  ProfileFactory factory;
  const FigureTable t = figure_data(2, 64, factory);
  REQUIRE(t.rows.size() == 64);
  CHECK(t.rows.front().v == 65.0);
  CHECK(t.rows.back().v == 291.0);
  for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].v > t.rows[i - 1].v);
  for (const auto& r : t.rows) CHECK(r.margin == doctest::Approx(r.lhs - r.rhs));
  CHECK_THROWS_AS(figure_data(7, 64, factory), DomainError);
  CHECK_THROWS_AS(figure_data(0, 64, factory), DomainError);
}

TEST_CASE("csv output") {
  CHECK(format_decimal(0.0) == "0");
  CHECK(format_decimal(123.2) == "123.2");
  CHECK(format_decimal(1e-7) == "0.0000001");
  CHECK(format_decimal(-2.5) == "-2.5");
  CHECK(format_decimal(1234567.891011121) == "1234567.89101");
  FigureTable t{.figure = 1, .lhs_name = "a", .rhs_name = "b", .interval = {1, 2},
                .rows = {{1.0, 3.0, 2.0, 1.0}}};
  std::ostringstream out;
  write_figure_csv(out, t);
  CHECK(out.str() == "v,lhs,rhs,margin\n1,3,2,1\n");
}
