#include "nrgit/polytope.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace nrgit {

Weight2 Weight2::eval_at(const Rational& n_value) const {
  return {AffineN(x.eval_at(n_value)), AffineN(y.eval_at(n_value))};
}

std::string Weight2::to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

QuadN dot(const Weight2& a, const Weight2& b) {
  return QuadN::product(a.x, b.x) + QuadN::product(a.y, b.y);
}

QuadN cross(const Weight2& a, const Weight2& b) {
  return QuadN::product(a.x, b.y) - QuadN::product(a.y, b.x);
}

std::string to_string(Containment c) {
  switch (c) {
    case Containment::Outside: return "Outside";
    case Containment::Boundary: return "Boundary";
    case Containment::Interior: return "Interior";
  }
  return "?";
}

namespace {

inline bool zero(const Rational& v) { return v.is_zero(); }
inline bool zero(__int128 v) { return v == 0; }
inline int sgn(const Rational& v) { return v.sign(); }
inline int sgn(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// A weight (a N + b, c N + d) with coefficients in T.
template <class T>
struct Vec {
  T a, b, c, d;
  bool is_zero() const { return zero(a) && zero(b) && zero(c) && zero(d); }
  friend bool operator==(const Vec&, const Vec&) = default;
};

// Sign for large N of c2 N^2 + c1 N + c0.
template <class T>
int eventual_sign(const T& c2, const T& c1, const T& c0) {
  return sgn(!zero(c2) ? c2 : (!zero(c1) ? c1 : c0));
}

template <class T>
struct Quad {
  T c2{0}, c1{0}, c0{0};
  int sign() const { return eventual_sign(c2, c1, c0); }
  int sign_minus(const Quad& o) const { return eventual_sign<T>(c2 - o.c2, c1 - o.c1, c0 - o.c0); }
};

template <class T>
Quad<T> cross_q(const Vec<T>& p, const Vec<T>& q) {
  // (a N + b)(c' N + d') - (c N + d)(a' N + b')
  return {p.a * q.c - p.c * q.a, p.a * q.d + p.b * q.c - p.c * q.b - p.d * q.a, p.b * q.d - p.d * q.b};
}

template <class T>
Quad<T> dot_q(const Vec<T>& p, const Vec<T>& q) {
  return {p.a * q.a + p.c * q.c, p.a * q.b + p.b * q.a + p.c * q.d + p.d * q.c, p.b * q.b + p.d * q.d};
}

// Pairwise products of a weight set, computed once. cross(i, j) = s_i x s_j.
template <class T>
class PairTable {
 public:
  explicit PairTable(const std::vector<Vec<T>>& s) : k_(s.size()), cross_(k_ * k_), dot_(k_ * k_) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        if (i != j) cross_[i * k_ + j] = cross_q(s[i], s[j]);
        dot_[i * k_ + j] = dot_q(s[i], s[j]);
      }
    }
  }
  const Quad<T>& cross(std::size_t i, std::size_t j) const { return cross_[i * k_ + j]; }
  const Quad<T>& dot(std::size_t i, std::size_t j) const { return dot_[i * k_ + j]; }

 private:
  std::size_t k_;
  std::vector<Quad<T>> cross_;
  std::vector<Quad<T>> dot_;
};

template <class T>
bool origin_in_hull(const std::vector<Vec<T>>& s, const PairTable<T>& t) {
  const std::size_t k = s.size();
  std::vector<int> sg(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i].is_zero()) return true;
    for (std::size_t j = 0; j < k; ++j) sg[i * k + j] = t.cross(i, j).sign();
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      // Closed segment through the origin.
      if (sg[i * k + j] == 0 && t.dot(i, j).sign() < 0) return true;
      for (std::size_t l = j + 1; l < k; ++l) {
        const int s1 = sg[i * k + j];
        const int s2 = sg[j * k + l];
        const int s3 = sg[l * k + i];
        if (s1 == 0 && s2 == 0 && s3 == 0) continue;
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return true;
      }
    }
  }
  return false;
}

// Points strictly on both sides of the line through 0 normal to a direction,
// given the sign of each point's pairing with that direction.
template <class Pairing>
bool straddles(std::size_t k, Pairing pairing) {
  bool above = false;
  bool below = false;
  for (std::size_t l = 0; l < k && !(above && below); ++l) {
    const int sg = pairing(l);
    above = above || sg > 0;
    below = below || sg < 0;
  }
  return above && below;
}

// Same witness set as witness_directions, with pairings read off the table:
// <s_l, s_i> = dot(i, l); <s_l, perp s_i> = cross(i, l);
// <s_l, perp(s_i - s_j)> = cross(i, l) - cross(j, l). A direction and its
// negative straddle together, so one of each pair suffices.
template <class T>
bool origin_interior(const std::vector<Vec<T>>& s, const PairTable<T>& t) {
  const std::size_t k = s.size();
  bool any_direction = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i].is_zero()) continue;
    any_direction = true;
    if (!straddles(k, [&](std::size_t l) { return t.dot(i, l).sign(); })) return false;
    if (!straddles(k, [&](std::size_t l) { return t.cross(i, l).sign(); })) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (s[i] == s[j]) continue;
      any_direction = true;
      if (!straddles(k, [&](std::size_t l) { return t.cross(i, l).sign_minus(t.cross(j, l)); })) {
        return false;
      }
    }
  }
  return any_direction;
}

template <class T>
Containment classify(const std::vector<Vec<T>>& s) {
  const PairTable<T> table(s);
  if (!origin_in_hull(s, table)) return Containment::Outside;
  return origin_interior(s, table) ? Containment::Interior : Containment::Boundary;
}

WeightSet distinct(std::span<const Weight2> points) {
  WeightSet out;
  for (const auto& p : points) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// Integer images of the points after clearing denominators, when every
// coefficient stays below 2^40 so that all products and sums fit in 128 bits.
// Positive rescaling does not move the origin relative to the hull.
std::optional<std::vector<Vec<__int128>>> small_integer_image(const WeightSet& s) {
  Integer den = 1;
  for (const auto& w : s) {
    for (const Rational* q : {&w.x.n_coeff(), &w.x.constant(), &w.y.n_coeff(), &w.y.constant()}) {
      const Integer& d = boost::multiprecision::denominator(*q);
      if (d != 1) den = boost::multiprecision::lcm(den, d);
    }
  }
  const Integer limit = Integer(1) << 40;
  auto scaled = [&](const Rational& q, __int128& out) {
    const Integer& d = boost::multiprecision::denominator(q);
    const Integer v = den == 1 ? boost::multiprecision::numerator(q)
                               : Integer(boost::multiprecision::numerator(q) * (den / d));
    if (v >= limit || v <= -limit) return false;
    out = static_cast<__int128>(static_cast<std::int64_t>(v));
    return true;
  };
  std::vector<Vec<__int128>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!scaled(s[i].x.n_coeff(), out[i].a) || !scaled(s[i].x.constant(), out[i].b) ||
        !scaled(s[i].y.n_coeff(), out[i].c) || !scaled(s[i].y.constant(), out[i].d)) {
      return std::nullopt;
    }
  }
  return out;
}

void push_unique(std::vector<Weight2>& out, const Weight2& w) {
  if (w.is_zero()) return;
  Weight2 p = primitive(w);
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

Weight2 primitive(const Weight2& direction) {
  const Rational* parts[] = {&direction.x.n_coeff(), &direction.x.constant(),
                             &direction.y.n_coeff(), &direction.y.constant()};
  Integer den_lcm = 1;
  for (const Rational* q : parts) {
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(*q));
  }
  Integer num_gcd = 0;
  for (const Rational* q : parts) {
    const Integer scaled = boost::multiprecision::numerator(*q * Rational(den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  if (num_gcd == 0) return direction;
  const Rational factor = Rational(den_lcm) / Rational(num_gcd < 0 ? Integer(-num_gcd) : num_gcd);
  return {direction.x * factor, direction.y * factor};
}

std::vector<Weight2> witness_directions(std::span<const Weight2> points) {
  if (points.empty()) throw std::invalid_argument("witness_directions: empty weight set");
  std::vector<Weight2> out;
  for (const auto& s : points) {
    push_unique(out, s);
    push_unique(out, Weight2{-s.x, -s.y});
    const Weight2 p = perpendicular(s);
    push_unique(out, p);
    push_unique(out, Weight2{-p.x, -p.y});
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Weight2 p = perpendicular(points[i] - points[j]);
      push_unique(out, p);
      push_unique(out, Weight2{-p.x, -p.y});
    }
  }
  if (out.empty()) {
    out = {Weight2{1, 0}, Weight2{-1, 0}, Weight2{0, 1}, Weight2{0, -1}};
  }
  return out;
}

Containment contains_origin(std::span<const Weight2> points) {
  if (points.empty()) throw std::invalid_argument("contains_origin: empty weight set");
  const WeightSet s = distinct(points);
  if (auto fast = small_integer_image(s)) return classify(*fast);
  std::vector<Vec<Rational>> exact;
  for (const auto& w : s) exact.push_back({w.x.n_coeff(), w.x.constant(), w.y.n_coeff(), w.y.constant()});
  return classify(exact);
}

Containment contains_origin_at(std::span<const Weight2> points, const Rational& n_value) {
  if (points.empty()) throw std::invalid_argument("contains_origin_at: empty weight set");
  if (n_value <= 0) throw std::invalid_argument("contains_origin_at: N must be positive");
  const WeightSet s = distinct(points);
  // Integer N and small coefficients: evaluate in machine integers.
  if (boost::multiprecision::denominator(n_value) == 1 && n_value < (Integer(1) << 40)) {
    if (auto fast = small_integer_image(s)) {
      const auto big_n = static_cast<__int128>(static_cast<std::int64_t>(boost::multiprecision::numerator(n_value)));
      for (auto& v : *fast) v = {0, v.a * big_n + v.b, 0, v.c * big_n + v.d};
      return classify(*fast);
    }
  }
  WeightSet evaluated;
  evaluated.reserve(s.size());
  for (const auto& w : s) evaluated.push_back(w.eval_at(n_value));
  return contains_origin(evaluated);
}

Containment contains_origin_1d(std::span<const AffineN> values) {
  if (values.empty()) throw std::invalid_argument("contains_origin_1d: empty weight set");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const AffineN zero;
  if (*lo > zero || *hi < zero) return Containment::Outside;
  if (*lo < zero && *hi > zero) return Containment::Interior;
  return Containment::Boundary;
}

WeightSet scaled_minkowski(std::span<const ScaledPart> parts, const Weight2& shift) {
  int symbolic_scales = 0;
  for (const auto& part : parts) {
    if (part.scale < AffineN{}) throw std::invalid_argument("scaled_minkowski: negative scale");
    if (part.points.empty()) throw std::invalid_argument("scaled_minkowski: empty part");
    if (!part.scale.is_constant()) ++symbolic_scales;
  }
  if (symbolic_scales > 1) {
    throw std::invalid_argument("scaled_minkowski: more than one N-dependent scale");
  }
  WeightSet acc{shift};
  for (const auto& part : parts) {
    WeightSet scaled;
    scaled.reserve(part.points.size());
    for (const auto& s : part.points) scaled.push_back(part.scale * s);
    WeightSet next;
    next.reserve(acc.size() * scaled.size());
    for (const auto& a : acc) {
      for (const auto& s : scaled) next.push_back(a + s);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace nrgit
