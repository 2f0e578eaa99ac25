#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "c5t/bounds.hpp"
#include "c5t/construct.hpp"

using namespace c5t;

TEST_CASE("constants match their closed forms") {
  CHECK(bound_value(BoundName::BgLower) == 1.0 / (3.0 * std::sqrt(3.0)));
  CHECK(bound_value(BoundName::BgUpper) == 1.25);
  CHECK(bound_value(BoundName::AlonShikhelman) == std::sqrt(3.0) / 2.0);
  CHECK(bound_value(BoundName::MainTheorem) == 1.0 / (2.0 * std::sqrt(2.0)));
  CHECK(bound_value(BoundName::ErdosSimonovits) ==
        bound_value(BoundName::MainTheorem));
}

TEST_CASE("constants match reference decimals to 1e-12 relative") {
  const struct {
    BoundName name;
    double reference;
  } table[] = {
      {BoundName::BgLower, 0.19245008972987526},
      {BoundName::BgUpper, 1.25},
      {BoundName::AlonShikhelman, 0.8660254037844386},
      {BoundName::MainTheorem, 0.35355339059327373},
      {BoundName::ErdosSimonovits, 0.35355339059327373},
  };
  for (const auto& row : table) {
    const double v = bound_value(row.name);
    CHECK(std::abs(v - row.reference) <= 1e-12 * std::abs(row.reference));
  }
}

TEST_CASE("evaluation is exact at the calibration points") {
  // n = 8: (1/(2*sqrt 2)) * 8^(3/2) is exactly 8 in binary64
  CHECK(eval_bound(8, BoundName::MainTheorem) == 8.0);
  CHECK(eval_bound(2, BoundName::MainTheorem) == 1.0);
  CHECK(eval_bound(0, BoundName::MainTheorem) == 0.0);
  CHECK(eval_bound(4, BoundName::BgUpper) == 10.0);
  CHECK_THROWS_AS(eval_bound(-1, BoundName::MainTheorem), std::invalid_argument);
}

TEST_CASE("bound ids round-trip") {
  for (BoundName b : all_bounds) CHECK(bound_from_id(bound_id(b)) == b);
  CHECK(std::string(bound_id(BoundName::MainTheorem)) == "main_theorem");
  CHECK_THROWS_AS(bound_from_id("nonsense"), std::invalid_argument);
}

TEST_CASE("reports carry the asymptotic-only marker") {
  const auto r = make_bound_report(complete_graph(4));
  CHECK(r.n == 4);
  CHECK(r.triangles == 4);
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == 0.5);
  CHECK(r.note == std::string(kAsymptoticNote));
  // K4's ratio exceeds the main constant; only asymptotics are claimed
  CHECK(*r.ratio > bound_value(BoundName::MainTheorem));
}

TEST_CASE("the empty graph has no ratio") {
  const auto r = make_bound_report(Graph(0));
  CHECK(r.n == 0);
  CHECK(r.triangles == 0);
  CHECK_FALSE(r.ratio.has_value());
  const auto r10 = make_bound_report(Graph(10));
  REQUIRE(r10.ratio.has_value());
  CHECK(*r10.ratio == 0.0);
}

TEST_CASE("doubled-plane ratios sit between the two published constants") {
  for (int q : {2, 3, 5, 7}) {
    const Graph d = bg_double(projective_plane_incidence(q));
    const auto r = make_bound_report(d);
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio >= bound_value(BoundName::BgLower));
    CHECK(*r.ratio <= bound_value(BoundName::MainTheorem));
  }
  const auto r2 = make_bound_report(bg_double(projective_plane_incidence(2)));
  CHECK(*r2.ratio == Catch::Approx(21.0 / std::pow(21.0, 1.5)).epsilon(1e-14));
  const auto r3 = make_bound_report(bg_double(projective_plane_incidence(3)));
  CHECK(r3.n == 39);
  CHECK(r3.triangles == 52);
  CHECK(*r3.ratio == Catch::Approx(0.2135).epsilon(1e-3));
}
