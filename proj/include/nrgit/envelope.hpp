// The reductive envelope P^2 x P(V) for the Borel action on binary forms,
// linearised by O_{P^2}(N) (x) L_{m,r} for the group G x H_r = SL(2) x G_m.
//
// Points are recorded in a fixed torus frame: which projective coordinates
// v0, v1, v2 are nonzero, the divisor of sigma, and the multiplicity of
// [v1:v2] as a root of sigma. When only v1 (resp. only v2) of the pair is
// nonzero the marked point is [1:0] (resp. [0:1]); when both are nonzero it is
// a point distinct from both, so it can only coincide with a generic root.
//
// The formal parameter N lives in AffineN, so every status here is the one
// that holds for all sufficiently large N.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrgit/binary_forms.hpp"
#include "nrgit/hilbert_mumford.hpp"
#include "nrgit/polytope.hpp"

namespace nrgit {

/// Which of v0, v1, v2 are nonzero.
struct VSupport {
  bool v0 = false;
  bool v1 = false;
  bool v2 = false;

  /// Bit k set iff v_k != 0. Throws std::invalid_argument for 0 or > 7.
  static VSupport from_mask(unsigned mask);
  unsigned mask() const { return (v0 ? 1u : 0u) | (v1 ? 2u : 0u) | (v2 ? 4u : 0u); }
  bool has_marked() const { return v1 || v2; }
  std::string to_string() const;  // e.g. "{0,1}"
  friend bool operator==(const VSupport&, const VSupport&) = default;
};

struct EnvPoint {
  VSupport v;
  Divisor divisor;
  std::optional<int> marked_mult;

  std::string to_string() const;
  friend bool operator==(const EnvPoint&, const EnvPoint&) = default;
};

class InvalidEnvPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the marked-root consistency rules above.
EnvPoint validate(EnvPoint p);

struct EnvParams {
  int n;
  LinParam lin;
};

enum class FixedFamily { V0, V1, V2 };  // [1:0:0], [0:1:0], [0:0:1]

struct FixedPointWeight {
  FixedFamily family;
  int i;  // fixed point ([...], [x^{n-i} y^i])
  Weight2 weight;

  std::string label() const;
};

/// Torus weights of all 3(n+1) fixed points, ordered by i then family.
std::vector<FixedPointWeight> table1(const EnvParams& params);

/// Character of the coordinate v_k under O_{P^2}(1): (0,0), (1,-1), (-1,-1).
Weight2 p2_coordinate_weight(int k);

/// Weight set of a point: N*A + m*B + (0, r), A the P^2 characters present,
/// B = {(2i - n, 0)} over the monomials x^{n-i} y^i present in sigma.
WeightSet point_polytope(const EnvPoint& p, const EnvParams& params);

/// Closed-form T1 x T2 status by the case split on which v_k vanish.
Status torus_case_status(const EnvPoint& p, const EnvParams& params);

/// T1 x T2 status computed by the polytope engine.
Status torus_polytope_status(const EnvPoint& p, const EnvParams& params);

/// Closed-form G x H_r status of a point of the envelope.
Status group_status(const EnvPoint& p, const EnvParams& params);

/// X -> P^2 x X, sigma |-> ([1:1:0], sigma).
EnvPoint restrict_to_X(const Divisor& d);

/// Every representable EnvPoint of degree n.
std::vector<EnvPoint> enumerate_env_points(int n);

struct StrongEnvelopeReport {
  int n;
  Rational tau;
  // Intrinsic classification via classify_H.
  int stable = 0;
  int strictly_semistable = 0;
  int unstable = 0;
  // Completely (semi)stable counts via group_status o restrict_to_X.
  int completely_stable = 0;
  int completely_semistable = 0;
  bool stable_equality = true;      // X^{s-bar} = X^s
  bool semistable_equality = true;  // X^{ss-bar} = X^{ss,fg}
  bool chain_holds = true;          // X^{s-bar} <= X^s <= X^{ss,fg} <= X^{ss-bar}
  std::vector<std::string> violations;

  bool ok() const { return stable_equality && semistable_equality && chain_holds; }
};

StrongEnvelopeReport strong_envelope_report(int n, const LinParam& p);

/// Status on the envelope of the unipotent radical alone: G = SL(2) acting on
/// P^2 x X with O_{P^2}(N) (x) O_X(1), one-dimensional maximal torus.
Status unipotent_status(const EnvPoint& p, int n);

struct ThresholdResult {
  std::int64_t n0;
  std::optional<std::int64_t> last_disagreement;  // largest N < n0 that disagreed
};

/// Least N0 in 1, 2, 4, ... such that the concrete-N polytope status agrees
/// with the symbolic one for every EnvPoint of degree n and every integer N
/// in [N0, 4 N0]. Throws std::runtime_error if N0 would exceed max_n0.
ThresholdResult n_threshold(int n, const LinParam& p, std::int64_t max_n0 = std::int64_t{1} << 20);

/// Polytope status with N fixed to a concrete value.
Status concrete_status(const EnvPoint& p, const EnvParams& params, const Rational& n_value);

}  // namespace nrgit
