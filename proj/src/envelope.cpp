#include "nrgit/envelope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nrgit {

VSupport VSupport::from_mask(unsigned mask) {
  if (mask == 0 || mask > 7) throw std::invalid_argument("v-support must be a nonempty subset of {0,1,2}");
  return {(mask & 1u) != 0, (mask & 2u) != 0, (mask & 4u) != 0};
}

std::string VSupport::to_string() const {
  std::string out = "{";
  auto add = [&](bool on, const char* k) {
    if (!on) return;
    if (out.size() > 1) out += ",";
    out += k;
  };
  add(v0, "0");
  add(v1, "1");
  add(v2, "2");
  return out + "}";
}

std::string EnvPoint::to_string() const {
  std::string out = "v=" + v.to_string() + " " + divisor.to_string();
  if (marked_mult) out += " marked=" + std::to_string(*marked_mult);
  return out;
}

EnvPoint validate(EnvPoint p) {
  p.divisor = validate(std::move(p.divisor));
  if (p.v.mask() == 0) throw InvalidEnvPoint("v-support is empty");
  if (!p.v.has_marked()) {
    if (p.marked_mult) throw InvalidEnvPoint("marked multiplicity given but v1 = v2 = 0");
    return p;
  }
  if (!p.marked_mult) throw InvalidEnvPoint("marked multiplicity required when (v1, v2) != 0");
  const int mm = *p.marked_mult;
  const Divisor& d = p.divisor;
  if (p.v.v1 && !p.v.v2) {
    if (mm != d.mult_inf) throw InvalidEnvPoint("[v1:v2] = [1:0] so marked multiplicity must equal mult_inf");
  } else if (p.v.v2 && !p.v.v1) {
    if (mm != d.mult_zero) throw InvalidEnvPoint("[v1:v2] = [0:1] so marked multiplicity must equal mult_zero");
  } else if (mm != 0 && std::find(d.generic.begin(), d.generic.end(), mm) == d.generic.end()) {
    throw InvalidEnvPoint("marked multiplicity matches no generic root");
  }
  return p;
}

std::string FixedPointWeight::label() const {
  static const char* const kP2[] = {"[1:0:0]", "[0:1:0]", "[0:0:1]"};
  return std::string("(") + kP2[static_cast<int>(family)] + ",[x^{n-" + std::to_string(i) +
         "}y^{" + std::to_string(i) + "}])";
}

Weight2 p2_coordinate_weight(int k) {
  switch (k) {
    case 0: return {0, 0};
    case 1: return {1, -1};
    case 2: return {-1, -1};
    default: throw std::out_of_range("P^2 coordinate index");
  }
}

std::vector<FixedPointWeight> table1(const EnvParams& params) {
  const AffineN big = AffineN::big_n();
  const Rational m(params.lin.m());
  const Rational r(params.lin.r());
  std::vector<FixedPointWeight> rows;
  rows.reserve(3 * static_cast<std::size_t>(params.n + 1));
  for (int i = 0; i <= params.n; ++i) {
    const AffineN base = AffineN(m * (2 * i - params.n));
    rows.push_back({FixedFamily::V0, i, {base, AffineN(r)}});
    rows.push_back({FixedFamily::V1, i, {big + base, -big + AffineN(r)}});
    rows.push_back({FixedFamily::V2, i, {-big + base, -big + AffineN(r)}});
  }
  return rows;
}

WeightSet point_polytope(const EnvPoint& p, const EnvParams& params) {
  const Divisor& d = p.divisor;
  if (d.n != params.n) throw InvalidEnvPoint("degree of point differs from envelope degree");
  ScaledPart a{AffineN::big_n(), {}};
  if (p.v.v0) a.points.push_back(p2_coordinate_weight(0));
  if (p.v.v1) a.points.push_back(p2_coordinate_weight(1));
  if (p.v.v2) a.points.push_back(p2_coordinate_weight(2));
  ScaledPart b{AffineN(params.lin.m()), {}};
  for (int i = d.mult_inf; i <= d.n - d.mult_zero; ++i) b.points.push_back({2 * i - d.n, 0});
  const ScaledPart parts[] = {std::move(a), std::move(b)};
  return scaled_minkowski(parts, Weight2{0, AffineN(params.lin.r())});
}

namespace {

Status from_conditions(bool semistable, bool stable) {
  if (stable) return Status::Stable;
  return semistable ? Status::StrictlySemistable : Status::Unstable;
}

}  // namespace

Status torus_case_status(const EnvPoint& p, const EnvParams& params) {
  const std::int64_t r = params.lin.r();
  const Divisor& d = p.divisor;
  if (r < 0 || !p.v.v0) return Status::Unstable;
  const Thresholds t{params.n, params.lin};
  const int a = d.mult_inf;
  const int b = d.mult_zero;
  // With r = 0 the v0 contribution lies on the horizontal axis and everything
  // else strictly below it, so the origin is at best on the boundary.
  const bool can_be_stable = r > 0;

  if (!p.v.has_marked()) {
    if (r != 0) return Status::Unstable;
    return from_conditions(2 * a <= d.n && 2 * b <= d.n, false);
  }
  if (p.v.v1 && p.v.v2) {
    return from_conditions(t.below_upper(a, false) && t.below_upper(b, false),
                           can_be_stable && t.below_upper(a, true) && t.below_upper(b, true));
  }
  if (p.v.v1) {
    return from_conditions(t.below_lower(a, false) && t.below_upper(b, false),
                           can_be_stable && t.below_lower(a, true) && t.below_upper(b, true));
  }
  return from_conditions(t.below_upper(a, false) && t.below_lower(b, false),
                         can_be_stable && t.below_upper(a, true) && t.below_lower(b, true));
}

Status torus_polytope_status(const EnvPoint& p, const EnvParams& params) {
  return status_from(contains_origin(point_polytope(p, params)));
}

Status group_status(const EnvPoint& p, const EnvParams& params) {
  const Integer r = params.lin.r();
  const Integer nm = Integer(params.n) * params.lin.m();
  const Divisor& d = p.divisor;
  if (r < 0 || r > nm || !p.v.v0) return Status::Unstable;
  if (r == 0) return from_conditions(2 * d.max_multiplicity() <= d.n, false);
  if (!p.v.has_marked()) return Status::Unstable;
  const Thresholds t{params.n, params.lin};
  const int marked = *p.marked_mult;
  const int top = d.max_multiplicity();
  return from_conditions(t.below_lower(marked, false) && t.below_upper(top, false),
                         t.below_lower(marked, true) && t.below_upper(top, true));
}

EnvPoint restrict_to_X(const Divisor& d) {
  return EnvPoint{VSupport{true, true, false}, d, d.mult_inf};
}

std::vector<EnvPoint> enumerate_env_points(int n) {
  std::vector<EnvPoint> out;
  for (const Divisor& d : all_divisor_profiles(n)) {
    for (unsigned mask = 1; mask <= 7; ++mask) {
      const VSupport v = VSupport::from_mask(mask);
      if (!v.has_marked()) {
        out.push_back({v, d, std::nullopt});
      } else if (v.v1 && !v.v2) {
        out.push_back({v, d, d.mult_inf});
      } else if (v.v2 && !v.v1) {
        out.push_back({v, d, d.mult_zero});
      } else {
        out.push_back({v, d, 0});
        std::vector<int> distinct = d.generic;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int g : distinct) out.push_back({v, d, g});
      }
    }
  }
  return out;
}

StrongEnvelopeReport strong_envelope_report(int n, const LinParam& p) {
  StrongEnvelopeReport rep{n, p.tau(), 0, 0, 0, 0, 0, true, true, true, {}};
  const EnvParams params{n, p};
  for (const Divisor& d : all_divisor_profiles(n)) {
    const Status intrinsic = classify_H(d, p);
    const Status complete = group_status(restrict_to_X(d), params);
    switch (intrinsic) {
      case Status::Stable: ++rep.stable; break;
      case Status::StrictlySemistable: ++rep.strictly_semistable; break;
      case Status::Unstable: ++rep.unstable; break;
    }
    rep.completely_stable += is_stable(complete) ? 1 : 0;
    rep.completely_semistable += is_semistable(complete) ? 1 : 0;

    auto note = [&](const std::string& what) {
      rep.violations.push_back(what + ": " + d.to_string() + " intrinsic=" + to_string(intrinsic) +
                               " envelope=" + to_string(complete));
    };
    if (is_stable(intrinsic) != is_stable(complete)) {
      rep.stable_equality = false;
      note("stable loci differ");
    }
    if (is_semistable(intrinsic) != is_semistable(complete)) {
      rep.semistable_equality = false;
      note("semistable loci differ");
    }
    const bool chain = (!is_stable(complete) || is_stable(intrinsic)) &&
                       (!is_stable(intrinsic) || is_semistable(intrinsic)) &&
                       (!is_semistable(intrinsic) || is_semistable(complete));
    if (!chain) {
      rep.chain_holds = false;
      note("inclusion chain broken");
    }
  }
  return rep;
}

Status unipotent_status(const EnvPoint& p, int n) {
  const Divisor& d = p.divisor;
  if (d.n != n) throw InvalidEnvPoint("degree of point differs from envelope degree");
  if (!p.v.v0) return Status::Unstable;
  // Only the one-dimensional torus of SL(2) acts; the v-part contributes 0 and
  // +-N. Once [v1:v2] is defined the +-N weights dominate every placement
  // except those putting [v1:v2] in a fixed slot, where only its own
  // multiplicity enters.
  const int governing = p.v.has_marked() ? *p.marked_mult : d.max_multiplicity();
  if (2 * governing < n) return Status::Stable;
  return 2 * governing == n ? Status::StrictlySemistable : Status::Unstable;
}

Status concrete_status(const EnvPoint& p, const EnvParams& params, const Rational& n_value) {
  return status_from(contains_origin_at(point_polytope(p, params), n_value));
}

ThresholdResult n_threshold(int n, const LinParam& p, std::int64_t max_n0) {
  const EnvParams params{n, p};
  const std::vector<EnvPoint> points = enumerate_env_points(n);
  std::vector<WeightSet> polytopes;
  std::vector<Status> symbolic;
  polytopes.reserve(points.size());
  symbolic.reserve(points.size());
  for (const auto& pt : points) {
    polytopes.push_back(point_polytope(pt, params));
    symbolic.push_back(status_from(contains_origin(polytopes.back())));
  }

  std::map<std::int64_t, bool> agrees_at;
  auto agrees = [&](std::int64_t big_n) {
    auto it = agrees_at.find(big_n);
    if (it != agrees_at.end()) return it->second;
    const Rational at(big_n);
    bool ok = true;
    for (std::size_t k = 0; k < points.size() && ok; ++k) {
      ok = status_from(contains_origin_at(polytopes[k], at)) == symbolic[k];
    }
    agrees_at.emplace(big_n, ok);
    return ok;
  };

  for (std::int64_t n0 = 1; n0 <= max_n0; n0 *= 2) {
    bool ok = true;
    for (std::int64_t big_n = n0; big_n <= 4 * n0 && ok; ++big_n) ok = agrees(big_n);
    if (!ok) continue;
    ThresholdResult res{n0, std::nullopt};
    for (const auto& [big_n, good] : agrees_at) {
      if (!good) res.last_disagreement = big_n;
    }
    return res;
  }
  throw std::runtime_error("n_threshold: no threshold found up to " + std::to_string(max_n0));
}

}  // namespace nrgit
