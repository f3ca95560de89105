#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ec/error.hpp"

namespace ec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// The coefficient field Q(sqrt(d)) for a fixed square-free radicand d >= 1.
/// d = 1 denotes the plain rational field.
struct Field {
  std::int64_t d = 1;

  Field() = default;
  explicit Field(std::int64_t radicand) : d(radicand) { validate(d); }

  static void validate(std::int64_t d) {
    if (d < 1)
      fail(errc::invalid_field, "radicand must be >= 1, got " + std::to_string(d));
    if (d > 1000000000)
      fail(errc::invalid_field, "radicand too large: " + std::to_string(d));
    for (std::int64_t p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0)
        fail(errc::invalid_field,
             "radicand must be square-free, got " + std::to_string(d));
  }

  bool operator==(const Field&) const = default;
};

/// Merge the radicands of two values that take part in one computation.
/// Rationals (d = 1) embed into any quadratic field; two genuinely different
/// radicands cannot mix.
inline std::int64_t unify_radicand(std::int64_t dx, std::int64_t dy) {
  if (dx == dy) return dx;
  if (dx == 1) return dy;
  if (dy == 1) return dx;
  fail(errc::incompatible_fields,
       "cannot combine sqrt(" + std::to_string(dx) + ") with sqrt(" +
           std::to_string(dy) + ")");
}

/// Exact element a + b*sqrt(d) of Q(sqrt(d)).
///
/// Canonical form: fractions in lowest terms with positive denominators
/// (maintained by the rational backend), b = 0 implies d = 1, and sqrt(1)
/// folds into the rational part. Under this form structural equality
/// coincides with equality of the represented real numbers, even across
/// fields.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(1) {}
  Scalar(int v) : a_(v), b_(0), d_(1) {}
  Scalar(long long v) : a_(v), b_(0), d_(1) {}
  Scalar(Int v) : a_(std::move(v)), b_(0), d_(1) {}
  Scalar(Rat a) : a_(std::move(a)), b_(0), d_(1) {}

  Scalar(Rat a, Rat b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    Field::validate(d_);
    normalize();
  }

  static Scalar sqrt_of(std::int64_t d) { return Scalar(Rat(0), Rat(1), d); }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Scalar operator-(const Scalar& x) {
    Scalar r;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    r.d_ = x.d_;
    return r;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    std::int64_t d = unify_radicand(x.d_, y.d_);
    Scalar r;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.d_ = d;
    r.normalize();
    return r;
  }

  friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    std::int64_t d = unify_radicand(x.d_, y.d_);
    Scalar r;
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.d_ = d;
    r.normalize();
    return r;
  }

  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    std::int64_t d = unify_radicand(x.d_, y.d_);
    if (y.is_zero()) fail(errc::division_by_zero, "scalar division by zero");
    // Multiply by the conjugate; the conjugate norm a^2 - b^2 d is non-zero
    // for y != 0 because d is square-free.
    Rat n = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (n == 0) fail(errc::internal_geometry, "vanishing conjugate norm");
    Scalar r;
    r.a_ = (x.a_ * y.a_ - x.b_ * y.b_ * d) / n;
    r.b_ = (x.b_ * y.a_ - x.a_ * y.b_) / n;
    r.d_ = d;
    r.normalize();
    return r;
  }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  /// Exact sign of the represented real number. When the rational and the
  /// radical part disagree in sign, the term with the larger square
  /// (a^2 versus b^2 d) decides.
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;  // unreachable for square-free d > 1
    return lhs > rhs ? sa : sb;
  }

  /// Ordering consistent with the real embedding: sign(x - y).
  static int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  void normalize() {
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (b_ == 0) d_ = 1;
  }

  Rat a_, b_;
  std::int64_t d_;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

inline std::string rat_str(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

inline std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string rad;
  if (b_ == 1)
    rad = "sqrt(" + std::to_string(d_) + ")";
  else if (b_ == -1)
    rad = "-sqrt(" + std::to_string(d_) + ")";
  else
    rad = rat_str(b_) + "*sqrt(" + std::to_string(d_) + ")";
  if (a_ == 0) return rad;
  return rat_str(a_) + (b_ > 0 ? "+" : "") + rad;
}

namespace detail {

// Recursive-descent parser for the scalar literal grammar
//   scalar := term | term ('+'|'-') term
//   term   := sign? ( rat ["*sqrt(" uint ")"] | "sqrt(" uint ")" )
//   rat    := uint ("/" uint)?
// with at most one rational and at most one radical term.
struct ScalarParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void err(const std::string& m, std::size_t at) {
    fail(errc::parse_error, m + " at position " + std::to_string(at) + " in \"" +
                                std::string(s) + "\"");
  }

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  bool at_sqrt() const { return s.substr(i, 5) == "sqrt("; }

  Int parse_uint() {
    skip();
    std::size_t start = i;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits.push_back(s[i++]);
    if (digits.empty()) err("expected digits", start);
    return Int(digits);
  }

  std::int64_t parse_radicand() {
    // "sqrt(" already consumed
    std::size_t at = i;
    Int d = parse_uint();
    skip();
    if (!eat(')')) err("expected ')'", i);
    if (d < 1 || d > 1000000000) err("radicand out of range", at);
    return d.convert_to<std::int64_t>();
  }

  struct Term {
    bool radical = false;
    Rat coeff;
    std::int64_t d = 1;
  };

  Term parse_term() {
    skip();
    int sg = 1;
    if (eat('-'))
      sg = -1;
    else
      eat('+');
    skip();
    if (at_sqrt()) {
      i += 5;
      std::int64_t d = parse_radicand();
      return {true, Rat(sg), d};
    }
    Int num = parse_uint();
    Int den = 1;
    skip();
    if (eat('/')) {
      std::size_t at = i;
      den = parse_uint();
      if (den == 0) err("zero denominator", at);
    }
    Rat coeff(num, den);
    if (sg < 0) coeff = -coeff;
    skip();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip();
      if (!at_sqrt()) err("expected sqrt( after '*'", i);
      i += 5;
      std::int64_t d = parse_radicand();
      return {true, coeff, d};
    }
    return {false, coeff, 1};
  }
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  detail::ScalarParser p{text};
  p.skip();
  if (p.i >= text.size()) p.err("empty scalar literal", 0);

  Rat a(0), b(0);
  std::int64_t d = 1;
  bool have_rat = false, have_rad = false;

  auto take = [&](const detail::ScalarParser::Term& t, std::size_t at) {
    if (t.radical) {
      if (have_rad) p.err("more than one radical term", at);
      have_rad = true;
      b = t.coeff;
      d = t.d;
    } else {
      if (have_rat) p.err("more than one rational term", at);
      have_rat = true;
      a = t.coeff;
    }
  };

  std::size_t at = p.i;
  take(p.parse_term(), at);
  p.skip();
  if (p.i < text.size() && (text[p.i] == '+' || text[p.i] == '-')) {
    at = p.i;
    take(p.parse_term(), at);
    p.skip();
  }
  if (p.i != text.size()) p.err("unexpected trailing characters", p.i);
  return Scalar(std::move(a), std::move(b), d);
}

}  // namespace ec
