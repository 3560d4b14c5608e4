#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nrgit/hilbert_mumford.hpp"
#include "oracles.hpp"

using namespace nrgit;

TEST_CASE("status helpers") {
  CHECK(worst(Status::Stable, Status::StrictlySemistable) == Status::StrictlySemistable);
  CHECK(worst(Status::Unstable, Status::Stable) == Status::Unstable);
  CHECK(is_semistable(Status::StrictlySemistable));
  CHECK_FALSE(is_stable(Status::StrictlySemistable));
  CHECK(to_string(Status::Stable) == "Stable");
}

TEST_CASE("P^1 under the diagonal torus") {
  // Weights of x^2, xy, y^2.
  const TorusAction act{{{2, 0}, {0, 0}, {-2, 0}}};
  CHECK(torus_status(act, {{0, 2}}) == Status::StrictlySemistable);  // only 1-dim hull
  CHECK(torus_status(act, {{0}}) == Status::Unstable);
  CHECK(torus_status(act, {{1}}) == Status::StrictlySemistable);
}

TEST_CASE("mu sign convention") {
  const TorusAction act{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  const PointSupport all{{0, 1, 2, 3}};
  CHECK(torus_status(act, all) == Status::Stable);
  CHECK(mu(act, all, OnePS({1, 1})).eventual_sign() > 0);
  const PointSupport half{{0, 2}};
  CHECK(torus_status(act, half) == Status::Unstable);
  CHECK(mu(act, half, OnePS({-1, -1})).eventual_sign() < 0);
}

TEST_CASE("input validation") {
  const TorusAction act{{{1, 0}}};
  CHECK_THROWS_AS(weight_polytope(act, {{3}}), std::out_of_range);
  CHECK_THROWS_AS(weight_polytope(act, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(OnePS({0, 0}), std::invalid_argument);
  CHECK(OnePS({4, -6}).direction() == Weight2{2, -3});
}

TEST_CASE("polytope criterion equals mu criterion and hull oracle") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> c(-20, 20);
  std::uniform_int_distribution<int> lead(-1, 1);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    TorusAction act;
    const int k = dim(rng);
    for (int i = 0; i < k; ++i) {
      act.coord_weights.push_back({AffineN(lead(rng), c(rng)), AffineN(lead(rng), c(rng))});
    }
    PointSupport sup;
    for (int i = 0; i < k; ++i) {
      if (rng() % 2 == 0) sup.indices.push_back(static_cast<std::size_t>(i));
    }
    if (sup.indices.empty()) sup.indices.push_back(0);
    const Status lib = torus_status(act, sup);
    CHECK(lib == mu_criterion_status(act, sup));
    CHECK(lib == oracle::hull_status(oracle::evaluate(weight_polytope(act, sup), 10000)));
  }
}
