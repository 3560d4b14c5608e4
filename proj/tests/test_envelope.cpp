#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrgit/envelope.hpp"
#include "oracles.hpp"

using namespace nrgit;

namespace {

Divisor D(int n, int inf, int zero, std::vector<int> g = {}) { return Divisor::make(n, inf, zero, std::move(g)); }

const FixedPointWeight& row(const std::vector<FixedPointWeight>& t, FixedFamily f, int i) {
  for (const auto& r : t) {
    if (r.family == f && r.i == i) return r;
  }
  throw std::logic_error("row missing");
}

}  // namespace

TEST_CASE("fixed point weights") {
  const auto a = table1({2, {1, 0}});
  CHECK(a.size() == 9);
  CHECK(row(a, FixedFamily::V0, 1).weight == Weight2{0, 0});
  const auto b = table1({1, {3, 2}});
  CHECK(row(b, FixedFamily::V1, 1).weight.to_string() == "(N+3, -N+2)");
  CHECK(row(b, FixedFamily::V2, 0).weight.to_string() == "(-N-3, -N+2)");
  CHECK(row(b, FixedFamily::V2, 0).label() == "([0:0:1],[x^{n-0}y^{0}])");
  CHECK(p2_coordinate_weight(1) == Weight2{1, -1});
  CHECK_THROWS(p2_coordinate_weight(3));
}

TEST_CASE("point polytope at a fixed point is the table row") {
  const EnvParams params{3, {2, 1}};
  const EnvPoint p = validate({VSupport::from_mask(2), D(3, 0, 3), 0});
  const WeightSet s = point_polytope(p, params);
  REQUIRE(s.size() == 1);
  // All roots at [0:1] is the monomial x^n, the i = 0 row.
  CHECK(s[0] == row(table1(params), FixedFamily::V1, 0).weight);
}

TEST_CASE("env point validation") {
  CHECK_THROWS_AS(validate({VSupport::from_mask(1), D(2, 1, 1), 1}), InvalidEnvPoint);
  CHECK_THROWS_AS(validate({VSupport::from_mask(3), D(2, 1, 1), 0}), InvalidEnvPoint);
  CHECK_NOTHROW(validate({VSupport::from_mask(3), D(2, 1, 1), 1}));
  CHECK_THROWS_AS(validate({VSupport::from_mask(7), D(2, 1, 1), 1}), InvalidEnvPoint);
  CHECK_NOTHROW(validate({VSupport::from_mask(7), D(2, 0, 0, {1, 1}), 1}));
  CHECK_THROWS_AS(VSupport::from_mask(0), std::invalid_argument);
}

TEST_CASE("closed-form statuses") {
  const EnvParams p4{4, {1, 2}};
  CHECK(group_status({VSupport::from_mask(7), D(4, 0, 2, {2}), 2}, p4) == Status::Unstable);
  CHECK(group_status({VSupport::from_mask(7), D(4, 0, 2, {2}), 0}, p4) == Status::Stable);
  CHECK(group_status({VSupport::from_mask(7), D(4, 0, 2, {2}), 0}, {4, {1, 4}}) == Status::StrictlySemistable);
  CHECK(torus_case_status({VSupport::from_mask(1), D(4, 2, 2), std::nullopt}, {4, {1, 1}}) == Status::Unstable);
  CHECK(torus_case_status({VSupport::from_mask(1), D(4, 2, 2), std::nullopt}, {4, {1, 0}}) ==
        Status::StrictlySemistable);
  CHECK(restrict_to_X(D(4, 1, 0, {3})) == EnvPoint{VSupport::from_mask(3), D(4, 1, 0, {3}), 1});
  CHECK(restrict_to_X(D(4, 0, 4)).marked_mult == 0);
}

TEST_CASE("case analysis equals the polytope and a concrete hull") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (int r = -1; r <= n * m + 1; ++r) {
        const EnvParams params{n, {m, r}};
        for (const EnvPoint& pt : enumerate_env_points(n)) {
          const Status cases = torus_case_status(pt, params);
          CHECK(cases == torus_polytope_status(pt, params));
          CHECK(cases == oracle::hull_status(oracle::evaluate(point_polytope(pt, params), 100000)));
        }
      }
    }
  }
}

TEST_CASE("strong envelope report") {
  const auto at_wall = strong_envelope_report(4, {1, 2});
  CHECK(at_wall.ok());
  CHECK(at_wall.stable + at_wall.strictly_semistable + at_wall.unstable == 26);
  CHECK(at_wall.strictly_semistable > 0);
  const auto negative = strong_envelope_report(5, {1, -1});
  CHECK(negative.ok());
  CHECK(negative.unstable == negative.stable + negative.strictly_semistable + negative.unstable);
}

TEST_CASE("unipotent envelope examples") {
  CHECK(unipotent_status(restrict_to_X(D(5, 2, 2, {1})), 5) == Status::Stable);
  CHECK(unipotent_status(restrict_to_X(D(4, 2, 2)), 4) == Status::StrictlySemistable);
}

TEST_CASE("large-N threshold") {
  for (int n = 1; n <= 3; ++n) {
    const LinParam p{1, 1};
    const ThresholdResult t = n_threshold(n, p);
    CHECK(t.n0 >= 1);
    for (const EnvPoint& pt : enumerate_env_points(n)) {
      CHECK(concrete_status(pt, {n, p}, t.n0 * 4) == torus_polytope_status(pt, {n, p}));
    }
  }
}
