// Exact planar convex-membership predicates over AffineN coordinates.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "nrgit/affine_n.hpp"

namespace nrgit {

struct Weight2 {
  AffineN x;
  AffineN y;

  Weight2() = default;
  Weight2(AffineN x_, AffineN y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend Weight2 operator+(const Weight2& a, const Weight2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Weight2 operator-(const Weight2& a, const Weight2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Weight2 operator*(const AffineN& k, const Weight2& w) { return {k * w.x, k * w.y}; }
  friend bool operator==(const Weight2&, const Weight2&) = default;

  bool is_zero() const { return x == AffineN{} && y == AffineN{}; }
  /// Value at a concrete N, as a constant Weight2.
  Weight2 eval_at(const Rational& n_value) const;
  std::string to_string() const;
};

/// <a, b> as a polynomial in N.
QuadN dot(const Weight2& a, const Weight2& b);
/// a.x * b.y - a.y * b.x as a polynomial in N.
QuadN cross(const Weight2& a, const Weight2& b);
/// Rotation by +90 degrees.
inline Weight2 perpendicular(const Weight2& w) { return {-w.y, w.x}; }

/// Finite multiset of weights; order and duplicates carry no meaning.
using WeightSet = std::vector<Weight2>;

enum class Containment { Outside, Boundary, Interior };

std::string to_string(Containment c);

/// Where the origin sits relative to conv(S) in the ambient plane, decided for
/// all sufficiently large N. Lower-dimensional hulls never have interior.
/// Throws std::invalid_argument for an empty set.
Containment contains_origin(std::span<const Weight2> points);

/// contains_origin of the points evaluated at a concrete N > 0.
Containment contains_origin_at(std::span<const Weight2> points, const Rational& n_value);

/// One-dimensional analogue: interior means the open interval (min, max).
Containment contains_origin_1d(std::span<const AffineN> values);

/// Finite set of directions d such that checking max_s <s, d> over d in the set
/// decides the sign of the support function over all directions. Contains, for
/// each nonzero point s, +-s and +-perp(s); for each nonzero pairwise
/// difference, +-perp(difference). Falls back to the four axis directions when
/// every point is zero. Entries are scaled to primitive integer content.
std::vector<Weight2> witness_directions(std::span<const Weight2> points);

/// Scales a direction by a positive rational so that all coefficients are
/// integers with gcd 1.
Weight2 primitive(const Weight2& direction);

struct ScaledPart {
  AffineN scale;
  WeightSet points;
};

/// All sums sum_i scale_i * s_i + shift with s_i ranging over parts[i].points.
/// Scales must be nonnegative and at most one may depend on N.
WeightSet scaled_minkowski(std::span<const ScaledPart> parts, const Weight2& shift);

}  // namespace nrgit
