#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nrgit/polytope.hpp"
#include "oracles.hpp"

using namespace nrgit;

namespace {

Weight2 w(AffineN x, AffineN y) { return {std::move(x), std::move(y)}; }

Status library(const WeightSet& s) { return status_from(contains_origin(s)); }

WeightSet oracle_points(const WeightSet& s, const Rational& big_n) {
  WeightSet out;
  for (const auto& p : s) out.push_back(p.eval_at(big_n));
  return out;
}

}  // namespace

TEST_CASE("small hulls") {
  CHECK(contains_origin(WeightSet{w(0, 0)}) == Containment::Boundary);
  CHECK(contains_origin(WeightSet{w(1, 0)}) == Containment::Outside);
  CHECK(contains_origin(WeightSet{w(-1, 0), w(1, 0)}) == Containment::Boundary);
  CHECK(contains_origin(WeightSet{w(-1, -1), w(1, -1), w(0, 1)}) == Containment::Interior);
  CHECK(contains_origin(WeightSet{w(0, 0), w(1, 0), w(0, 1)}) == Containment::Boundary);
  CHECK(contains_origin(WeightSet{w(1, 1), w(2, -1), w(3, 0)}) == Containment::Outside);
  CHECK_THROWS_AS(contains_origin(WeightSet{}), std::invalid_argument);
}

TEST_CASE("N-dependent hulls") {
  const AffineN big = AffineN::big_n();
  // A thin triangle whose apex runs off to infinity still straddles the origin.
  CHECK(contains_origin(WeightSet{w(big, 1), w(-1, 1), w(-1, -1)}) == Containment::Interior);
  // (N, -N+1) and (-N, -N+1) with (0, 1): the origin sits just inside.
  CHECK(contains_origin(WeightSet{w(big, -big + AffineN(1)), w(-big, -big + AffineN(1)), w(0, 1)}) ==
        Containment::Interior);
  // Same with (0, 0) on top edge height: boundary.
  CHECK(contains_origin(WeightSet{w(big, -big), w(-big, -big), w(0, 0)}) == Containment::Boundary);
  CHECK(contains_origin(WeightSet{w(big, -big - AffineN(1)), w(-big, -big), w(0, -1)}) ==
        Containment::Outside);
}

TEST_CASE("one-dimensional containment") {
  const std::vector<AffineN> straddle{AffineN(-2), AffineN::big_n()};
  const std::vector<AffineN> touch{AffineN(0), AffineN(3)};
  const std::vector<AffineN> miss{AffineN(1), AffineN::big_n()};
  CHECK(contains_origin_1d(straddle) == Containment::Interior);
  CHECK(contains_origin_1d(touch) == Containment::Boundary);
  CHECK(contains_origin_1d(miss) == Containment::Outside);
}

TEST_CASE("primitive directions") {
  CHECK(primitive(w(AffineN(Rational(2, 3)), AffineN(Rational(4, 3)))) == w(1, 2));
  CHECK(primitive(w(-6, 0)) == w(-1, 0));
  CHECK(primitive(w(AffineN(2, 4), 6)) == w(AffineN(1, 2), 3));
}

TEST_CASE("scaled Minkowski sums") {
  const std::vector<ScaledPart> parts{{AffineN::big_n(), {w(0, 0), w(1, -1)}}, {2, {w(-1, 0), w(1, 0)}}};
  const WeightSet sum = scaled_minkowski(parts, w(0, 5));
  CHECK(sum.size() == 4);
  CHECK(std::find(sum.begin(), sum.end(), w(AffineN(1, 2), AffineN(-1, 5))) != sum.end());
  const std::vector<ScaledPart> two_big{{AffineN::big_n(), {w(1, 0)}}, {AffineN::big_n(), {w(0, 1)}}};
  CHECK_THROWS_AS(scaled_minkowski(two_big, w(0, 0)), std::invalid_argument);
  const std::vector<ScaledPart> negative{{-1, {w(1, 0)}}};
  CHECK_THROWS_AS(scaled_minkowski(negative, w(0, 0)), std::invalid_argument);
}

TEST_CASE("containment agrees with two concrete-N hull oracles") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> c(-20, 20);
  std::uniform_int_distribution<int> lead(-1, 1);
  std::uniform_int_distribution<int> size(1, 6);
  const Rational big_n = 10000;
  for (int trial = 0; trial < 3000; ++trial) {
    WeightSet s;
    const int k = size(rng);
    const bool symbolic = trial % 2 == 0;
    for (int i = 0; i < k; ++i) {
      s.push_back(w(AffineN(symbolic ? lead(rng) : 0, c(rng)), AffineN(symbolic ? lead(rng) : 0, c(rng))));
    }
    const auto pts = oracle::evaluate(s, big_n);
    const Status lib = library(s);
    CHECK(lib == oracle::hull_status(pts));
    CHECK(lib == oracle::caratheodory_status(pts));
  }
}

TEST_CASE("witness directions decide the support function") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    WeightSet s;
    for (int i = 0; i < 4; ++i) s.push_back(w(c(rng), c(rng)));
    const auto dirs = witness_directions(s);
    bool some_negative = false;
    for (const auto& d : dirs) {
      int best = -2;
      for (const auto& p : s) best = std::max(best, dot(p, d).eventual_sign());
      some_negative = some_negative || best < 0;
    }
    CHECK(some_negative == (library(s) == Status::Unstable));
  }
}

TEST_CASE("huge coefficients take the exact rational path with the same answer") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> lead(-1, 1);
  const Rational huge = Rational(Integer(1) << 70, 3);
  for (int trial = 0; trial < 300; ++trial) {
    WeightSet s;
    WeightSet scaled;
    for (int i = 0; i < 5; ++i) {
      s.push_back(w(AffineN(lead(rng), c(rng)), AffineN(lead(rng), c(rng))));
      scaled.push_back(w(s.back().x * huge, s.back().y * huge));
    }
    CHECK(contains_origin(s) == contains_origin(scaled));
  }
}

TEST_CASE("concrete evaluation handles points that coincide at that N") {
  // (N, 1) meets (3, 1) at N = 3.
  const WeightSet s{w(AffineN::big_n(), 1), w(3, 1), w(-1, 0), w(1, -1)};
  CHECK(contains_origin_at(s, 3) == Containment::Interior);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> lead(-1, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    WeightSet t;
    for (int i = 0; i < 5; ++i) t.push_back(w(AffineN(lead(rng), c(rng)), AffineN(lead(rng), c(rng))));
    for (int big_n = 1; big_n <= 6; ++big_n) {
      CHECK(status_from(contains_origin_at(t, big_n)) == oracle::hull_status(oracle::evaluate(t, big_n)));
      CHECK(contains_origin_at(t, Rational(2 * big_n + 1, 2)) ==
            contains_origin(oracle_points(t, Rational(2 * big_n + 1, 2))));
    }
  }
  CHECK_THROWS_AS(contains_origin_at(s, 0), std::invalid_argument);
}
