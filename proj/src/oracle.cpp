#include "nrgit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrgit {

std::vector<Divisor> enumerate_profiles(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw std::invalid_argument("census degree " + std::to_string(n) + " outside [1, " +
                                std::to_string(max_n) + "]");
  }
  return all_divisor_profiles(n);
}

std::string to_string(Group g) {
  switch (g) {
    case Group::TorusOnly: return "TorusOnly";
    case Group::Borel: return "Borel";
    case Group::FullEnvelopeGroup: return "FullEnvelopeGroup";
    case Group::UnipotentEnvelope: return "UnipotentEnvelope";
  }
  return "?";
}

GroupMoveSet move_set(const EnvPoint& p, Group g) {
  using O = TrackedPoint::Origin;
  const Divisor& d = p.divisor;
  GroupMoveSet set{g, {}, std::nullopt, {}};
  set.points.push_back({O::InfSlot, d.mult_inf});
  set.points.push_back({O::ZeroSlot, d.mult_zero});
  for (int m : d.generic) set.points.push_back({O::GenericRoot, m});
  set.points.push_back({O::Fresh, 0});
  set.points.push_back({O::Fresh, 0});

  if (p.v.has_marked()) {
    if (p.v.v1 && !p.v.v2) {
      set.marked = 0;
    } else if (p.v.v2 && !p.v.v1) {
      set.marked = 1;
    } else if (*p.marked_mult == 0) {
      set.points.push_back({O::MarkedNonRoot, 0});
      set.marked = set.points.size() - 1;
    } else {
      const auto it = std::find(d.generic.begin(), d.generic.end(), *p.marked_mult);
      set.marked = 2 + static_cast<std::size_t>(it - d.generic.begin());
    }
  }

  const std::size_t k = set.points.size();
  switch (g) {
    case Group::TorusOnly:
      set.moves.push_back({0, 1});
      break;
    case Group::Borel:
      // H fixes [1:0] and can bring any other point to [0:1].
      for (std::size_t q = 1; q < k; ++q) set.moves.push_back({0, q});
      break;
    case Group::FullEnvelopeGroup:
    case Group::UnipotentEnvelope:
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (a != b) set.moves.push_back({a, b});
        }
      }
      break;
  }
  return set;
}

EnvPoint apply_placement(const EnvPoint& p, const GroupMoveSet& set, const Placement& move) {
  Divisor moved{p.divisor.n, set.points.at(move.to_inf).mult, set.points.at(move.to_zero).mult, {}};
  for (std::size_t k = 0; k < set.points.size(); ++k) {
    if (k == move.to_inf || k == move.to_zero) continue;
    if (set.points[k].mult > 0) moved.generic.push_back(set.points[k].mult);
  }
  EnvPoint out{VSupport{p.v.v0, false, false}, validate(std::move(moved)), std::nullopt};
  if (set.marked) {
    const std::size_t m = *set.marked;
    out.v.v1 = m != move.to_zero;
    out.v.v2 = m != move.to_inf;
    out.marked_mult = set.points[m].mult;
  }
  return out;
}

Status placement_status(const EnvPoint& moved, const EnvParams& params, Group g) {
  if (g != Group::UnipotentEnvelope) return torus_polytope_status(moved, params);
  // SL(2) alone: only the first torus factor, O_X(1), no character twist.
  std::vector<AffineN> v_part;
  if (moved.v.v0) v_part.emplace_back(0);
  if (moved.v.v1) v_part.push_back(AffineN::big_n());
  if (moved.v.v2) v_part.push_back(-AffineN::big_n());
  const Divisor& d = moved.divisor;
  std::vector<AffineN> weights;
  for (const auto& v : v_part) {
    for (int i = d.mult_inf; i <= d.n - d.mult_zero; ++i) weights.push_back(v + AffineN(2 * i - d.n));
  }
  return status_from(contains_origin_1d(weights));
}

Status PlacementCache::status(const EnvPoint& moved, const EnvParams& params, Group g) {
  Key key{g == Group::UnipotentEnvelope, moved.v.mask(), moved.divisor, moved.marked_mult.value_or(-1)};
  const auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Status s = placement_status(moved, params, g);
  memo_.emplace(std::move(key), s);
  return s;
}

Status worst_case_status(const EnvPoint& p, const EnvParams& params, Group g, PlacementCache* cache) {
  const GroupMoveSet set = move_set(p, g);
  Status acc = Status::Stable;
  std::vector<EnvPoint> seen;
  for (const auto& move : set.moves) {
    EnvPoint moved = apply_placement(p, set, move);
    if (std::find(seen.begin(), seen.end(), moved) != seen.end()) continue;
    acc = worst(acc, cache ? cache->status(moved, params, g) : placement_status(moved, params, g));
    if (acc == Status::Unstable) break;
    seen.push_back(std::move(moved));
  }
  return acc;
}

Status worst_case_status(const Divisor& d, const LinParam& p, Group g) {
  return worst_case_status(restrict_to_X(d), EnvParams{d.n, p}, g);
}

std::vector<DiffEntry> diff_report(int n, const LinParam& p, const Classifiers& c) {
  std::vector<DiffEntry> out;
  const EnvParams params{n, p};
  auto compare = [&](const char* check, const std::string& subject, Status closed, Status oracle) {
    if (closed != oracle) out.push_back({check, subject, to_string(closed), to_string(oracle)});
  };

  PlacementCache cache;
  for (const Divisor& d : all_divisor_profiles(n)) {
    const Status intrinsic = c.intrinsic(d, p);
    compare("classify_H vs Borel translates", d.to_string(), intrinsic,
            worst_case_status(restrict_to_X(d), params, Group::Borel, &cache));
    compare("classify_H vs envelope restriction", d.to_string(), intrinsic,
            c.envelope(restrict_to_X(d), params));
  }
  for (const EnvPoint& pt : enumerate_env_points(n)) {
    const std::string subject = pt.to_string();
    compare("torus_case_status vs weight polytope", subject, c.torus_cases(pt, params),
            torus_polytope_status(pt, params));
    compare("group_status vs envelope translates", subject, c.envelope(pt, params),
            worst_case_status(pt, params, Group::FullEnvelopeGroup, &cache));
    compare("unipotent_status vs SL(2) translates", subject, c.unipotent(pt, n),
            worst_case_status(pt, params, Group::UnipotentEnvelope, &cache));
  }
  return out;
}

std::vector<DiffEntry> unipotent_baseline_report(int n) {
  std::vector<DiffEntry> out;
  const LinParam unit{1, 0};
  for (const Divisor& d : all_divisor_profiles(n)) {
    const Status closed = classify_U(d);
    const Status oracle = worst_case_status(d, unit, Group::UnipotentEnvelope);
    if (closed != oracle) {
      out.push_back({"classify_U vs unipotent envelope", d.to_string(), to_string(closed),
                     to_string(oracle)});
    }
  }
  return out;
}

}  // namespace nrgit
