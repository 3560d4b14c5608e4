// Wall-and-chamber structure of the slope tau = r/m on [0, n].

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrgit/affine_n.hpp"

namespace nrgit {

struct WallChamber {
  enum class Kind { WallZero, InteriorWall, WallN, Chamber };
  Kind kind;
  Rational lo;  // the wall value, or the open chamber's left endpoint
  Rational hi;  // equals lo for walls

  bool is_wall() const { return kind != Kind::Chamber; }
  bool contains(const Rational& tau) const;
  std::string to_string() const;
};

/// Walls {0} u {q in (0, n) : n - q even} u {n}, interleaved with the open
/// chambers between them, in increasing order.
std::vector<WallChamber> walls(int n);

/// Just the wall values, increasing.
std::vector<Rational> wall_values(int n);

/// The cell of walls(n) containing tau. Throws std::invalid_argument outside [0, n].
WallChamber locate(int n, const Rational& tau);

struct QuotientProfile {
  enum class Kind { GeometricProjective, ClassicalSL2Quotient, StableUnionPoint, SinglePoint, Empty };
  Kind kind;
  bool ss_equals_s;
  std::optional<int> dimension;
  std::vector<std::string> annotations;
};

std::string to_string(QuotientProfile::Kind k);

/// Shape of the enveloping quotient at slope tau in [0, n].
QuotientProfile chamber_profile(int n, const Rational& tau);

struct FlipData {
  int s;
  std::vector<int> e_plus_weights;   // E+ = P(1, ..., s)
  std::vector<int> e_minus_weights;  // E- = P(1, ..., n - s)
  std::vector<int> slice_weights;    // T1 weights on the E+ slice
};

/// Flip at the interior wall tau, s = (n - tau)/2. Refused for n = 3, where
/// both sides and the wall quotient are the same curve, and for non-walls.
FlipData flip_data(int n, const Rational& tau);

/// -2s, -2s + 2, ..., -2. Requires 1 <= s <= n - 1.
std::vector<int> slice_weights(int n, int s);

}  // namespace nrgit
