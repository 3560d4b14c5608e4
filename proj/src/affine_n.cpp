#include "nrgit/affine_n.hpp"

namespace nrgit {

namespace {

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Appends "+c" / "-c" for a nonzero trailing coefficient.
void append_signed(std::string& out, const Rational& c, const std::string& suffix) {
  if (c == 0) return;
  Rational mag = c < 0 ? Rational(-c) : c;
  out += c < 0 ? "-" : (out.empty() ? "" : "+");
  if (!suffix.empty() && mag == 1) {
    out += suffix;
  } else {
    out += to_string(mag) + suffix;
  }
}

}  // namespace

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign(const Rational& q) { return q.sign(); }

Rational AffineN::eval_at(const Rational& n_value) const {
  if (n_value <= 0) throw std::invalid_argument("eval_at: N must be positive");
  if (n_coeff_.is_zero()) return const_;
  return n_coeff_ * n_value + const_;
}

// Zero and unit operands are common in weight sums; skipping them avoids the
// gcd normalisation of a full rational operation.
namespace {
void add_to(Rational& acc, const Rational& v) {
  if (v.is_zero()) return;
  if (acc.is_zero()) {
    acc = v;
  } else {
    acc += v;
  }
}

void scale(Rational& acc, const Rational& k) {
  static const Rational kOne{1};
  if (acc.is_zero() || k == kOne) return;
  acc *= k;
}
}  // namespace

AffineN& AffineN::operator+=(const AffineN& o) {
  add_to(n_coeff_, o.n_coeff_);
  add_to(const_, o.const_);
  return *this;
}

AffineN& AffineN::operator-=(const AffineN& o) {
  add_to(n_coeff_, -o.n_coeff_);
  add_to(const_, -o.const_);
  return *this;
}

AffineN& AffineN::operator*=(const Rational& k) {
  scale(n_coeff_, k);
  scale(const_, k);
  return *this;
}

AffineN operator*(const AffineN& a, const AffineN& b) {
  if (!a.is_constant() && !b.is_constant()) {
    throw DegreeOverflow("product of two N-linear values: " + a.to_string() + " * " +
                         b.to_string());
  }
  if (a.is_constant()) return b * a.constant();
  return a * b.constant();
}

std::strong_ordering operator<=>(const AffineN& a, const AffineN& b) {
  auto c = compare_rational(a.n_coeff_, b.n_coeff_);
  if (c != 0) return c;
  return compare_rational(a.const_, b.const_);
}

std::string AffineN::to_string() const {
  std::string out;
  append_signed(out, n_coeff_, "N");
  append_signed(out, const_, "");
  return out.empty() ? "0" : out;
}

std::strong_ordering cmp(const AffineN& a, const AffineN& b) { return a <=> b; }

QuadN QuadN::product(const AffineN& a, const AffineN& b) {
  return {a.n_coeff() * b.n_coeff(), a.n_coeff() * b.constant() + a.constant() * b.n_coeff(),
          a.constant() * b.constant()};
}

int QuadN::eventual_sign() const {
  for (int k = 2; k >= 0; --k) {
    if (!c_[k].is_zero()) return c_[k].sign();
  }
  return 0;
}

Rational QuadN::eval_at(const Rational& n_value) const {
  return (c_[2] * n_value + c_[1]) * n_value + c_[0];
}

QuadN& QuadN::operator+=(const QuadN& o) {
  for (std::size_t k = 0; k < 3; ++k) c_[k] += o.c_[k];
  return *this;
}

QuadN& QuadN::operator-=(const QuadN& o) {
  for (std::size_t k = 0; k < 3; ++k) c_[k] -= o.c_[k];
  return *this;
}

std::strong_ordering operator<=>(const QuadN& a, const QuadN& b) {
  const int s = (a - b).eventual_sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadN::to_string() const {
  std::string out;
  append_signed(out, c_[2], "N^2");
  append_signed(out, c_[1], "N");
  append_signed(out, c_[0], "");
  return out.empty() ? "0" : out;
}

}  // namespace nrgit
