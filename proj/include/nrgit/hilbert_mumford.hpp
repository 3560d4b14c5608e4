// Torus (semi)stability on a projective space P(V), V = sum of weight spaces.
//
// A point is described only by which coordinates are nonzero. Its weight
// polytope is the hull of the characters of those coordinates; the point is
// semistable iff the origin lies in the polytope and stable iff it lies in the
// interior. The equivalent one-parameter-subgroup test uses
//
//   mu(x, lambda) = max_{i in support} <chi_i, lambda>
//
// with the convention semistable <=> mu >= 0 for every lambda.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nrgit/polytope.hpp"

namespace nrgit {

enum class Status { Unstable = 0, StrictlySemistable = 1, Stable = 2 };

std::string to_string(Status s);
inline bool is_semistable(Status s) { return s != Status::Unstable; }
inline bool is_stable(Status s) { return s == Status::Stable; }
/// The weaker of two statuses.
inline Status worst(Status a, Status b) { return a < b ? a : b; }
Status status_from(Containment c);

struct TorusAction {
  std::vector<Weight2> coord_weights;
};

struct PointSupport {
  std::vector<std::size_t> indices;
};

/// Direction of a one-parameter subgroup, stored with primitive content.
class OnePS {
 public:
  explicit OnePS(const Weight2& direction);
  const Weight2& direction() const { return direction_; }

 private:
  Weight2 direction_;
};

/// Characters of the coordinates in the support. Throws std::out_of_range on a
/// bad index and std::invalid_argument on an empty support.
WeightSet weight_polytope(const TorusAction& action, const PointSupport& support);

QuadN mu(const TorusAction& action, const PointSupport& support, const OnePS& lambda);

Status torus_status(const TorusAction& action, const PointSupport& support);

std::vector<OnePS> witness_lambdas(std::span<const Weight2> points);

/// Status derived purely from the signs of mu over witness_lambdas.
Status mu_criterion_status(const TorusAction& action, const PointSupport& support);

}  // namespace nrgit
