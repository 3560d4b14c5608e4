#include "nrgit/vgit.hpp"

#include <stdexcept>

#include "nrgit/binary_forms.hpp"

namespace nrgit {

bool WallChamber::contains(const Rational& tau) const {
  if (is_wall()) return tau == lo;
  return lo < tau && tau < hi;
}

std::string WallChamber::to_string() const {
  if (is_wall()) return nrgit::to_string(lo);
  return "(" + nrgit::to_string(lo) + ", " + nrgit::to_string(hi) + ")";
}

std::vector<Rational> wall_values(int n) {
  if (n < 1) throw std::invalid_argument("walls: n must be positive");
  std::vector<Rational> out{0};
  for (int q = n % 2 == 0 ? 2 : 1; q < n; q += 2) out.emplace_back(q);
  out.emplace_back(n);
  return out;
}

std::vector<WallChamber> walls(int n) {
  const std::vector<Rational> values = wall_values(n);
  std::vector<WallChamber> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    WallChamber::Kind kind = WallChamber::Kind::InteriorWall;
    if (k == 0) kind = WallChamber::Kind::WallZero;
    if (k + 1 == values.size()) kind = WallChamber::Kind::WallN;
    out.push_back({kind, values[k], values[k]});
    if (k + 1 < values.size()) out.push_back({WallChamber::Kind::Chamber, values[k], values[k + 1]});
  }
  return out;
}

WallChamber locate(int n, const Rational& tau) {
  for (const auto& cell : walls(n)) {
    if (cell.contains(tau)) return cell;
  }
  throw std::invalid_argument("tau = " + to_string(tau) + " lies outside [0, " + std::to_string(n) + "]");
}

std::string to_string(QuotientProfile::Kind k) {
  switch (k) {
    case QuotientProfile::Kind::GeometricProjective: return "GeometricProjective";
    case QuotientProfile::Kind::ClassicalSL2Quotient: return "ClassicalSL2Quotient";
    case QuotientProfile::Kind::StableUnionPoint: return "StableUnionPoint";
    case QuotientProfile::Kind::SinglePoint: return "SinglePoint";
    case QuotientProfile::Kind::Empty: return "Empty";
  }
  return "?";
}

namespace {

LinParam lin_from_slope(const Rational& tau) {
  return {static_cast<std::int64_t>(boost::multiprecision::denominator(tau)),
          static_cast<std::int64_t>(boost::multiprecision::numerator(tau))};
}

bool stable_census_nonempty(int n, const Rational& tau) {
  const LinParam p = lin_from_slope(tau);
  for (const Divisor& d : all_divisor_profiles(n)) {
    if (classify_H(d, p) == Status::Stable) return true;
  }
  return false;
}

constexpr const char* kCurveNote = "n = 3: the quotients on both sides of the wall and on it are all P^1";

}  // namespace

QuotientProfile chamber_profile(int n, const Rational& tau) {
  using K = QuotientProfile::Kind;
  const WallChamber cell = locate(n, tau);
  QuotientProfile out{K::Empty, true, std::nullopt, {}};
  switch (cell.kind) {
    case WallChamber::Kind::WallZero: {
      if (n == 1) {
        out.annotations.push_back("no semistable points: a single root always has multiplicity > n/2");
        return out;
      }
      out.kind = K::ClassicalSL2Quotient;
      out.ss_equals_s = n % 2 == 1;
      out.dimension = n >= 3 ? n - 3 : 0;
      out.annotations.push_back("isomorphic to the classical SL(2) quotient X//G, one less than the expected dimension");
      out.annotations.push_back(
          "the stable quotient just above tau = 0 fibres over X^s(G)/G, a geometric quotient by the opposite unipotent subgroup");
      return out;
    }
    case WallChamber::Kind::Chamber:
      if (stable_census_nonempty(n, tau)) {
        out.kind = K::GeometricProjective;
        out.dimension = n - 2;
        if (n == 3) out.annotations.push_back(kCurveNote);
      }
      return out;
    case WallChamber::Kind::InteriorWall:
      out.kind = K::StableUnionPoint;
      out.ss_equals_s = false;
      out.dimension = n - 2;
      out.annotations.push_back("strictly semistable locus is a single S-equivalence class");
      if (n == 3) out.annotations.push_back(kCurveNote);
      return out;
    case WallChamber::Kind::WallN:
      out.kind = K::SinglePoint;
      out.ss_equals_s = false;
      out.dimension = 0;
      return out;
  }
  return out;
}

std::vector<int> slice_weights(int n, int s) {
  if (s < 1 || s > n - 1) throw std::invalid_argument("slice_weights: s out of range");
  std::vector<int> out;
  for (int w = -2 * s; w <= -2; w += 2) out.push_back(w);
  return out;
}

FlipData flip_data(int n, const Rational& tau) {
  const WallChamber cell = locate(n, tau);
  if (cell.kind != WallChamber::Kind::InteriorWall) {
    throw std::invalid_argument("flip_data: tau = " + to_string(tau) + " is not an interior wall");
  }
  if (n == 3) throw std::invalid_argument("flip_data: n = 3 has no flip, every quotient is P^1");
  const int s = static_cast<int>(boost::multiprecision::numerator((Rational(n) - tau) / 2));
  FlipData f{s, {}, {}, slice_weights(n, s)};
  for (int k = 1; k <= s; ++k) f.e_plus_weights.push_back(k);
  for (int k = 1; k <= n - s; ++k) f.e_minus_weights.push_back(k);
  return f;
}

}  // namespace nrgit
