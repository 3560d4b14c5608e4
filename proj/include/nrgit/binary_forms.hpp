// Degree-n effective divisors on P^1 and their stability under the Borel
// subgroup H of SL(2) (upper triangular, fixing [1:0]), its unipotent radical,
// and SL(2) itself.
//
// A divisor is stored by multiplicity profile: the mass at [1:0] ("inf"), the
// mass at [0:1] ("zero"), and the multiplicities of the remaining distinct
// roots. Positions of the remaining roots are forgotten; stability never
// depends on them.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nrgit/affine_n.hpp"
#include "nrgit/hilbert_mumford.hpp"

namespace nrgit {

class InvalidDivisor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Divisor {
  int n = 0;
  int mult_inf = 0;
  int mult_zero = 0;
  std::vector<int> generic;  // kept sorted in decreasing order

  /// Builds and validates; generic multiplicities are canonicalised.
  static Divisor make(int n, int mult_inf, int mult_zero, std::vector<int> generic = {});

  /// Largest multiplicity of any root, 0 if there is none.
  int max_multiplicity() const;
  /// Largest multiplicity of a root other than [1:0].
  int max_multiplicity_off_inf() const;

  std::string to_string() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;
};

/// Every multiplicity profile of degree n: a choice of mass at [1:0] and at
/// [0:1] and a partition of the remainder into generic roots.
std::vector<Divisor> all_divisor_profiles(int n);

/// Checks the degree and positivity invariants. Returns the divisor with its
/// generic part sorted; throws InvalidDivisor otherwise.
Divisor validate(Divisor d);

/// Linearisation L_{m,r}; only the slope tau = r/m matters for stability.
class LinParam {
 public:
  LinParam(std::int64_t m, std::int64_t r);
  std::int64_t m() const { return m_; }
  std::int64_t r() const { return r_; }
  Rational tau() const { return Rational(r_, m_); }

 private:
  std::int64_t m_;
  std::int64_t r_;
};

/// Exact comparisons of a multiplicity against (n - tau)/2 and (n + tau)/2,
/// done in integers as 2*mult*m versus n*m -+ r.
struct Thresholds {
  int n;
  LinParam lin;

  Rational lower() const;  // (n - tau)/2
  Rational upper() const;  // (n + tau)/2
  bool below_lower(int mult, bool strict) const;
  bool below_upper(int mult, bool strict) const;
};

/// Intrinsic (semi)stability for H acting on X with L_{m,r}.
Status classify_H(const Divisor& d, const LinParam& p);

/// Classical SL(2) stability with O(1).
Status classify_SL2(const Divisor& d);

/// The unipotent baseline as usually stated: stable iff fewer than n/2 points
/// coincide, finitely generated semistable iff at most n/2 coincide.
Status classify_U(const Divisor& d);

/// Which root of a divisor to act on.
struct RootRef {
  enum class Kind { Inf, Zero, Generic };
  Kind kind = Kind::Zero;
  std::size_t index = 0;  // into Divisor::generic, for Kind::Generic

  static RootRef inf() { return {Kind::Inf, 0}; }
  static RootRef zero() { return {Kind::Zero, 0}; }
  static RootRef generic(std::size_t i) { return {Kind::Generic, i}; }
  friend bool operator==(const RootRef&, const RootRef&) = default;
};

/// Translate by an element of H_u taking the chosen root to [0:1]. The old
/// [0:1] mass becomes a generic root. Throws std::invalid_argument for the
/// [1:0] slot, which H_u fixes, or an out-of-range index.
Divisor h_move_root_to_zero(const Divisor& d, RootRef which);

enum class LimitDirection { ToZero, ToInf };

/// Limit under the diagonal torus: ToZero sends every root except [1:0] to
/// [0:1]; ToInf sends every root except [0:1] to [1:0].
Divisor torus_limit(const Divisor& d, LimitDirection dir);

struct HMove {
  RootRef root;
  friend bool operator==(const HMove&, const HMove&) = default;
};
struct TorusLimit {
  LimitDirection dir;
  friend bool operator==(const TorusLimit&, const TorusLimit&) = default;
};
using OrbitMove = std::variant<HMove, TorusLimit>;

std::string to_string(const OrbitMove& move);

/// Replays moves, returning every divisor visited (the input first).
std::vector<Divisor> apply_moves(const Divisor& d, const std::vector<OrbitMove>& moves);

/// The divisor x^{(n+tau)/2} y^{(n-tau)/2}: (n-tau)/2 at [1:0], (n+tau)/2 at [0:1].
Divisor central_divisor(int n, const LinParam& p);

/// Moves degenerating a strictly semistable divisor at an interior wall onto
/// the central divisor inside the closure of its H-orbit. Throws
/// std::invalid_argument unless 0 < tau < n, n - tau is an even integer and d
/// is strictly semistable.
std::vector<OrbitMove> sequiv_witness(const Divisor& d, const LinParam& p);

}  // namespace nrgit
