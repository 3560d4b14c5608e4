// Exact scalars for the "large N" regime.
//
// An AffineN is a value a*N + b where N is a formal parameter that is larger
// than anything it is compared against. Ordering is lexicographic on (a, b),
// which is exactly the ordering of the evaluated values for every concrete N
// beyond a threshold depending on the pair being compared.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nrgit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Product of two N-linear values was requested.
class DegreeOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Renders an integer as "p" and anything else as "p/q".
std::string to_string(const Rational& q);

/// Sign of a rational as -1, 0 or +1.
int sign(const Rational& q);

class AffineN {
 public:
  AffineN() = default;
  AffineN(Rational n_coeff, Rational constant)
      : n_coeff_(std::move(n_coeff)), const_(std::move(constant)) {}
  // Implicit on purpose: a rational is the constant polynomial.
  AffineN(const Rational& constant) : const_(constant) {}  // NOLINT
  AffineN(std::int64_t constant) : const_(constant) {}     // NOLINT

  static AffineN big_n() { return {1, 0}; }

  const Rational& n_coeff() const { return n_coeff_; }
  const Rational& constant() const { return const_; }
  bool is_constant() const { return n_coeff_.is_zero(); }

  /// a*N + b at a concrete N. Throws std::invalid_argument unless N > 0.
  Rational eval_at(const Rational& n_value) const;

  AffineN operator-() const { return {-n_coeff_, -const_}; }
  AffineN& operator+=(const AffineN& o);
  AffineN& operator-=(const AffineN& o);
  AffineN& operator*=(const Rational& k);

  friend AffineN operator+(AffineN a, const AffineN& b) { return a += b; }
  friend AffineN operator-(AffineN a, const AffineN& b) { return a -= b; }
  friend AffineN operator*(AffineN a, const Rational& k) { return a *= k; }
  friend AffineN operator*(const Rational& k, AffineN a) { return a *= k; }
  /// Throws DegreeOverflow when both factors are N-linear.
  friend AffineN operator*(const AffineN& a, const AffineN& b);

  friend bool operator==(const AffineN&, const AffineN&) = default;
  friend std::strong_ordering operator<=>(const AffineN& a, const AffineN& b);

  /// "aN+b" with unit coefficients elided, e.g. "N+3", "-N+2", "1/2N", "7".
  std::string to_string() const;

 private:
  Rational n_coeff_{0};
  Rational const_{0};
};

/// Three-way comparison, valid for all sufficiently large N.
std::strong_ordering cmp(const AffineN& a, const AffineN& b);

/// Polynomial of degree <= 2 in N. Arises from pairings of N-linear vectors;
/// only its eventual sign is ever consulted.
class QuadN {
 public:
  QuadN() = default;
  QuadN(Rational c2, Rational c1, Rational c0) : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  static QuadN product(const AffineN& a, const AffineN& b);

  const Rational& coeff(std::size_t degree) const { return c_.at(degree); }

  /// Sign for all sufficiently large N: the sign of the leading nonzero coefficient.
  int eventual_sign() const;
  Rational eval_at(const Rational& n_value) const;

  QuadN& operator+=(const QuadN& o);
  QuadN& operator-=(const QuadN& o);
  friend QuadN operator+(QuadN a, const QuadN& b) { return a += b; }
  friend QuadN operator-(QuadN a, const QuadN& b) { return a -= b; }
  friend bool operator==(const QuadN&, const QuadN&) = default;
  friend std::strong_ordering operator<=>(const QuadN& a, const QuadN& b);

  std::string to_string() const;

 private:
  std::array<Rational, 3> c_{0, 0, 0};  // c_[k] multiplies N^k
};

}  // namespace nrgit
