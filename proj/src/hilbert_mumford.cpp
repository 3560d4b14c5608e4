#include "nrgit/hilbert_mumford.hpp"

#include <stdexcept>

namespace nrgit {

std::string to_string(Status s) {
  switch (s) {
    case Status::Unstable: return "Unstable";
    case Status::StrictlySemistable: return "StrictlySemistable";
    case Status::Stable: return "Stable";
  }
  return "?";
}

Status status_from(Containment c) {
  switch (c) {
    case Containment::Outside: return Status::Unstable;
    case Containment::Boundary: return Status::StrictlySemistable;
    case Containment::Interior: return Status::Stable;
  }
  return Status::Unstable;
}

OnePS::OnePS(const Weight2& direction) {
  if (direction.is_zero()) throw std::invalid_argument("OnePS: zero direction");
  direction_ = primitive(direction);
}

WeightSet weight_polytope(const TorusAction& action, const PointSupport& support) {
  if (support.indices.empty()) throw std::invalid_argument("weight_polytope: empty support");
  WeightSet out;
  out.reserve(support.indices.size());
  for (std::size_t i : support.indices) out.push_back(action.coord_weights.at(i));
  return out;
}

QuadN mu(const TorusAction& action, const PointSupport& support, const OnePS& lambda) {
  const WeightSet w = weight_polytope(action, support);
  QuadN best = dot(w.front(), lambda.direction());
  for (std::size_t k = 1; k < w.size(); ++k) {
    QuadN v = dot(w[k], lambda.direction());
    if (v > best) best = std::move(v);
  }
  return best;
}

Status torus_status(const TorusAction& action, const PointSupport& support) {
  return status_from(contains_origin(weight_polytope(action, support)));
}

std::vector<OnePS> witness_lambdas(std::span<const Weight2> points) {
  std::vector<OnePS> out;
  for (const auto& d : witness_directions(points)) out.emplace_back(d);
  return out;
}

Status mu_criterion_status(const TorusAction& action, const PointSupport& support) {
  const WeightSet w = weight_polytope(action, support);
  bool all_nonneg = true;
  bool all_pos = true;
  for (const auto& lambda : witness_lambdas(w)) {
    const int s = mu(action, support, lambda).eventual_sign();
    all_nonneg = all_nonneg && s >= 0;
    all_pos = all_pos && s > 0;
  }
  if (all_pos) return Status::Stable;
  if (all_nonneg) return Status::StrictlySemistable;
  return Status::Unstable;
}

}  // namespace nrgit
