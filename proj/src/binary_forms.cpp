#include "nrgit/binary_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nrgit {

Divisor Divisor::make(int n, int mult_inf, int mult_zero, std::vector<int> generic) {
  return validate(Divisor{n, mult_inf, mult_zero, std::move(generic)});
}

int Divisor::max_multiplicity() const { return std::max(mult_inf, max_multiplicity_off_inf()); }

int Divisor::max_multiplicity_off_inf() const {
  int best = mult_zero;
  for (int g : generic) best = std::max(best, g);
  return best;
}

std::string Divisor::to_string() const {
  std::string roots;
  for (std::size_t i = 0; i < generic.size(); ++i) {
    if (i) roots += "+";
    roots += std::to_string(generic[i]);
  }
  return "inf=" + std::to_string(mult_inf) + ",zero=" + std::to_string(mult_zero) +
         ",roots=" + roots;
}

Divisor validate(Divisor d) {
  if (d.n < 1) throw InvalidDivisor("degree must be positive, got " + std::to_string(d.n));
  if (d.mult_inf < 0 || d.mult_zero < 0) throw InvalidDivisor("negative multiplicity");
  for (int g : d.generic) {
    if (g < 1) throw InvalidDivisor("generic root multiplicity must be positive");
  }
  const int total = std::accumulate(d.generic.begin(), d.generic.end(), d.mult_inf + d.mult_zero);
  if (total != d.n) {
    throw InvalidDivisor("degree mismatch: multiplicities sum to " + std::to_string(total) +
                         ", expected " + std::to_string(d.n));
  }
  std::sort(d.generic.begin(), d.generic.end(), std::greater<>());
  return d;
}

LinParam::LinParam(std::int64_t m, std::int64_t r) : m_(m), r_(r) {
  if (m <= 0) throw std::invalid_argument("linearisation requires m > 0");
}

Rational Thresholds::lower() const { return (Rational(n) - lin.tau()) / 2; }
Rational Thresholds::upper() const { return (Rational(n) + lin.tau()) / 2; }

bool Thresholds::below_lower(int mult, bool strict) const {
  const Integer lhs = Integer(2) * mult * lin.m();
  const Integer rhs = Integer(n) * lin.m() - lin.r();
  return strict ? lhs < rhs : lhs <= rhs;
}

bool Thresholds::below_upper(int mult, bool strict) const {
  const Integer lhs = Integer(2) * mult * lin.m();
  const Integer rhs = Integer(n) * lin.m() + lin.r();
  return strict ? lhs < rhs : lhs <= rhs;
}

Status classify_H(const Divisor& d, const LinParam& p) {
  const Integer r = p.r();
  const Integer nm = Integer(d.n) * p.m();
  if (r < 0 || r > nm) return Status::Unstable;
  if (r == 0) {
    return 2 * d.max_multiplicity() <= d.n ? Status::StrictlySemistable : Status::Unstable;
  }
  if (r == nm) return d.mult_inf == 0 ? Status::StrictlySemistable : Status::Unstable;

  const Thresholds t{d.n, p};
  const int off = d.max_multiplicity_off_inf();
  if (t.below_lower(d.mult_inf, true) && t.below_upper(off, true)) return Status::Stable;
  if (t.below_lower(d.mult_inf, false) && t.below_upper(off, false)) {
    return Status::StrictlySemistable;
  }
  return Status::Unstable;
}

Status classify_SL2(const Divisor& d) {
  const int twice = 2 * d.max_multiplicity();
  if (twice < d.n) return Status::Stable;
  if (twice == d.n) return Status::StrictlySemistable;
  return Status::Unstable;
}

Status classify_U(const Divisor& d) {
  // Same thresholds as the classical SL(2) problem on every root.
  return classify_SL2(d);
}

Divisor h_move_root_to_zero(const Divisor& d, RootRef which) {
  switch (which.kind) {
    case RootRef::Kind::Inf:
      throw std::invalid_argument("h_move: [1:0] is fixed by H_u");
    case RootRef::Kind::Zero:
      return d;
    case RootRef::Kind::Generic: break;
  }
  if (which.index >= d.generic.size()) throw std::invalid_argument("h_move: root index out of range");
  Divisor out = d;
  out.mult_zero = d.generic[which.index];
  out.generic.erase(out.generic.begin() + static_cast<std::ptrdiff_t>(which.index));
  if (d.mult_zero > 0) out.generic.push_back(d.mult_zero);
  return validate(std::move(out));
}

Divisor torus_limit(const Divisor& d, LimitDirection dir) {
  const int rest = std::accumulate(d.generic.begin(), d.generic.end(), 0);
  if (dir == LimitDirection::ToZero) return Divisor::make(d.n, d.mult_inf, d.mult_zero + rest);
  return Divisor::make(d.n, d.mult_inf + rest, d.mult_zero);
}

std::string to_string(const OrbitMove& move) {
  if (const auto* h = std::get_if<HMove>(&move)) {
    switch (h->root.kind) {
      case RootRef::Kind::Inf: return "h_move(inf)";
      case RootRef::Kind::Zero: return "h_move(zero)";
      case RootRef::Kind::Generic: return "h_move(root " + std::to_string(h->root.index) + ")";
    }
  }
  return std::get<TorusLimit>(move).dir == LimitDirection::ToZero ? "limit(to_zero)"
                                                                   : "limit(to_inf)";
}

std::vector<Divisor> apply_moves(const Divisor& d, const std::vector<OrbitMove>& moves) {
  std::vector<Divisor> path{d};
  for (const auto& move : moves) {
    const Divisor& cur = path.back();
    if (const auto* h = std::get_if<HMove>(&move)) {
      path.push_back(h_move_root_to_zero(cur, h->root));
    } else {
      path.push_back(torus_limit(cur, std::get<TorusLimit>(move).dir));
    }
  }
  return path;
}

Divisor central_divisor(int n, const LinParam& p) {
  const Thresholds t{n, p};
  const Rational lo = t.lower();
  if (boost::multiprecision::denominator(lo) != 1 || lo < 0 || lo > n) {
    throw std::invalid_argument("central_divisor: (n - tau)/2 is not an integer in [0, n]");
  }
  const int s = static_cast<int>(boost::multiprecision::numerator(lo));
  return Divisor::make(n, s, n - s);
}

std::vector<OrbitMove> sequiv_witness(const Divisor& d, const LinParam& p) {
  const Rational tau = p.tau();
  const Rational gap = Rational(d.n) - tau;
  if (!(tau > 0 && tau < d.n) || boost::multiprecision::denominator(gap) != 1 ||
      boost::multiprecision::numerator(gap) % 2 != 0) {
    throw std::invalid_argument("sequiv_witness: tau is not an interior wall");
  }
  if (classify_H(d, p) != Status::StrictlySemistable) {
    throw std::invalid_argument("sequiv_witness: divisor is not strictly semistable");
  }
  const Divisor centre = central_divisor(d.n, p);
  if (d == centre) return {};
  const int s = centre.mult_inf;
  const int big = centre.mult_zero;

  // [1:0] carries exactly (n - tau)/2: flow everything else onto [0:1].
  if (d.mult_inf == s) return {TorusLimit{LimitDirection::ToZero}};

  // Otherwise some root away from [1:0] carries (n + tau)/2.
  std::vector<OrbitMove> moves;
  if (d.mult_zero != big) {
    const auto it = std::find(d.generic.begin(), d.generic.end(), big);
    if (it == d.generic.end()) {
      throw std::logic_error("sequiv_witness: no root of multiplicity (n+tau)/2 in " +
                             d.to_string());
    }
    moves.push_back(HMove{RootRef::generic(static_cast<std::size_t>(it - d.generic.begin()))});
  }
  moves.push_back(TorusLimit{LimitDirection::ToInf});
  return moves;
}

}  // namespace nrgit

namespace nrgit {

namespace {

// Partitions of `rest` into parts <= max_part, in decreasing order.
void partitions(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Divisor> all_divisor_profiles(int n) {
  if (n < 1) throw std::invalid_argument("all_divisor_profiles: n must be positive");
  std::vector<Divisor> out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      partitions(n - a - b, n - a - b, cur, parts);
      for (auto& g : parts) out.push_back(Divisor{n, a, b, std::move(g)});
    }
  }
  return out;
}

}  // namespace nrgit
