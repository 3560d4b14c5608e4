#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nrgit/affine_n.hpp"

using namespace nrgit;

TEST_CASE("rational printing") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(sign(Rational(-1, 7)) == -1);
  CHECK(sign(Rational(0)) == 0);
}

TEST_CASE("AffineN order is lexicographic") {
  const AffineN big = AffineN::big_n();
  CHECK(big > AffineN(1000000));
  CHECK(-big < AffineN(-1000000));
  CHECK(big + AffineN(1) > big);
  CHECK(AffineN(Rational(1, 2), 0) < big);
  CHECK(cmp(big - AffineN(3), big - AffineN(3)) == std::strong_ordering::equal);
}

TEST_CASE("AffineN printing") {
  CHECK(AffineN(1, 3).to_string() == "N+3");
  CHECK(AffineN(-1, 2).to_string() == "-N+2");
  CHECK(AffineN(Rational(1, 2), 0).to_string() == "1/2N");
  CHECK(AffineN(7).to_string() == "7");
  CHECK(AffineN(-1, -3).to_string() == "-N-3");
  CHECK(AffineN().to_string() == "0");
}

TEST_CASE("AffineN arithmetic and degree guard") {
  const AffineN a(2, -1);
  CHECK(a * AffineN(3) == AffineN(6, -3));
  CHECK(AffineN(3) * a == AffineN(6, -3));
  CHECK_THROWS_AS(a * a, DegreeOverflow);
  CHECK_THROWS_AS(a.eval_at(0), std::invalid_argument);
  CHECK(a.eval_at(10) == 19);
}

TEST_CASE("QuadN eventual sign matches evaluation at large N") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> coeff(-30, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const AffineN a(coeff(rng), coeff(rng));
    const AffineN b(coeff(rng), coeff(rng));
    const QuadN q = QuadN::product(a, b);
    CHECK(q.eval_at(10000) == a.eval_at(10000) * b.eval_at(10000));
    const Rational v = q.eval_at(100000);
    CHECK(q.eventual_sign() == sign(v));
  }
}

TEST_CASE("AffineN order agrees with evaluation beyond a threshold") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int trial = 0; trial < 2000; ++trial) {
    const AffineN a(coeff(rng), coeff(rng));
    const AffineN b(coeff(rng), coeff(rng));
    const Rational da = a.eval_at(1000);
    const Rational db = b.eval_at(1000);
    CHECK((a < b) == (da < db));
    CHECK((a == b) == (da == db));
  }
}
