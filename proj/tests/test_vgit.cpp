#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrgit/binary_forms.hpp"
#include "nrgit/vgit.hpp"

using namespace nrgit;

TEST_CASE("wall lists") {
  CHECK(wall_values(4) == std::vector<Rational>{0, 2, 4});
  CHECK(wall_values(5) == std::vector<Rational>{0, 1, 3, 5});
  CHECK(wall_values(1) == std::vector<Rational>{0, 1});
  CHECK(walls(4).size() == 5);
  CHECK(locate(4, Rational(1, 2)).kind == WallChamber::Kind::Chamber);
  CHECK(locate(4, 2).kind == WallChamber::Kind::InteriorWall);
  CHECK(locate(4, 4).kind == WallChamber::Kind::WallN);
  CHECK_THROWS_AS(locate(4, -1), std::invalid_argument);
}

TEST_CASE("walls are exactly where the stable locus jumps") {
  for (int n = 1; n <= 8; ++n) {
    const auto profiles = all_divisor_profiles(n);
    // Slope grid with denominator 12 covers every wall and every chamber.
    for (int k = 1; k < 12 * n; ++k) {
      const LinParam p{12, k};
      bool strict = false;
      for (const auto& d : profiles) strict = strict || classify_H(d, p) == Status::StrictlySemistable;
      CHECK(strict == locate(n, p.tau()).is_wall());
    }
  }
}

TEST_CASE("quotient profiles") {
  const auto chamber = chamber_profile(6, 1);
  CHECK(chamber.kind == QuotientProfile::Kind::GeometricProjective);
  CHECK(chamber.ss_equals_s);
  CHECK(chamber.dimension == 4);
  const auto wall = chamber_profile(6, 2);
  CHECK(wall.kind == QuotientProfile::Kind::StableUnionPoint);
  CHECK_FALSE(wall.ss_equals_s);
  CHECK(chamber_profile(6, 6).kind == QuotientProfile::Kind::SinglePoint);
  const auto zero = chamber_profile(6, 0);
  CHECK(zero.kind == QuotientProfile::Kind::ClassicalSL2Quotient);
  CHECK(zero.dimension == 3);
  CHECK_FALSE(zero.ss_equals_s);
  CHECK(chamber_profile(5, 0).ss_equals_s);
  CHECK(chamber_profile(3, Rational(1, 2)).dimension == 1);
  CHECK(chamber_profile(3, Rational(5, 2)).dimension == 1);
}

TEST_CASE("flip data") {
  const FlipData f = flip_data(6, 2);
  CHECK(f.s == 2);
  CHECK(f.e_plus_weights == std::vector<int>{1, 2});
  CHECK(f.e_minus_weights == std::vector<int>{1, 2, 3, 4});
  CHECK(f.slice_weights == std::vector<int>{-4, -2});
  CHECK_THROWS_AS(flip_data(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(flip_data(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(flip_data(6, 0), std::invalid_argument);
  CHECK(slice_weights(7, 3) == std::vector<int>{-6, -4, -2});
  CHECK_THROWS_AS(slice_weights(4, 0), std::invalid_argument);
}
