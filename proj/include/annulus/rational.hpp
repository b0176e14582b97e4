#ifndef ANNULUS_RATIONAL_HPP
#define ANNULUS_RATIONAL_HPP

// Exact slopes in Q ∪ {∞}, unordered slope pairs, and linear-fractional
// transforms by unimodular integer matrices.

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>

#include "annulus/detail/scanner.hpp"
#include "annulus/error.hpp"

namespace annulus {

using Int = std::int64_t;

namespace detail {

inline Int checked_add(Int x, Int y) {
  Int out;
  if (__builtin_add_overflow(x, y, &out))
    throw Error(Errc::Overflow, "integer overflow in addition");
  return out;
}

inline Int checked_sub(Int x, Int y) {
  Int out;
  if (__builtin_sub_overflow(x, y, &out))
    throw Error(Errc::Overflow, "integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int x, Int y) {
  Int out;
  if (__builtin_mul_overflow(x, y, &out))
    throw Error(Errc::Overflow, "integer overflow in multiplication");
  return out;
}

inline Int checked_neg(Int x) { return checked_sub(0, x); }

}  // namespace detail

/// A slope p/q on the boundary of a solid torus, kept in lowest terms.
///
/// Invariants: gcd(|p|, q) = 1, q >= 0, and ∞ is the unique value with
/// q = 0, stored as 1/0. Equality is therefore structural.
class Slope {
 public:
  /// Normalizing constructor; throws ZeroOverZero for (0, 0) and Overflow
  /// when the sign cannot be moved onto the numerator.
  Slope(Int p, Int q = 1) {  // NOLINT(google-explicit-constructor)
    if (p == 0 && q == 0)
      throw Error(Errc::ZeroOverZero, "slope 0/0 is undefined");
    if (q == 0) {
      p_ = 1;
      q_ = 0;
      return;
    }
    if (q < 0) {
      p = detail::checked_neg(p);
      q = detail::checked_neg(q);
    }
    // std::gcd on |INT64_MIN| is undefined; the negations above already
    // reject it for q, so only p needs a guard.
    if (p == std::numeric_limits<Int>::min())
      throw Error(Errc::Overflow, "slope numerator out of range");
    const Int g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
  }

  static Slope infinity() { return Slope(1, 0); }

  Int num() const noexcept { return p_; }
  Int den() const noexcept { return q_; }

  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_integral() const noexcept { return q_ == 1; }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Int p_ = 0;
  Int q_ = 1;
};

inline Slope slope_new(Int p, Int q) { return Slope(p, q); }

/// True iff the slope is an integer n/1. ∞ is not integral.
inline bool is_integral(const Slope& s) { return s.is_integral(); }
inline bool is_infinite(const Slope& s) { return s.is_infinite(); }

/// A 2x2 integer matrix acting on slopes by p/q -> (ap + bq)/(cp + dq).
struct Unimodular {
  Int a = 1, b = 0, c = 0, d = 1;

  Int determinant() const {
    return detail::checked_sub(detail::checked_mul(a, d),
                               detail::checked_mul(b, c));
  }

  friend Unimodular operator*(const Unimodular& m, const Unimodular& n) {
    using detail::checked_add;
    using detail::checked_mul;
    return {checked_add(checked_mul(m.a, n.a), checked_mul(m.b, n.c)),
            checked_add(checked_mul(m.a, n.b), checked_mul(m.b, n.d)),
            checked_add(checked_mul(m.c, n.a), checked_mul(m.d, n.c)),
            checked_add(checked_mul(m.c, n.b), checked_mul(m.d, n.d))};
  }

  friend bool operator==(const Unimodular&, const Unimodular&) = default;
};

inline Slope apply_unimodular(const Slope& s, const Unimodular& m) {
  const Int det = m.determinant();
  if (det != 1 && det != -1)
    throw Error(Errc::NotUnimodular,
                "matrix determinant is " + std::to_string(det) +
                    ", expected +1 or -1");
  using detail::checked_add;
  using detail::checked_mul;
  const Int p = checked_add(checked_mul(m.a, s.num()), checked_mul(m.b, s.den()));
  const Int q = checked_add(checked_mul(m.c, s.num()), checked_mul(m.d, s.den()));
  if (p == 0 && q == 0)
    throw Error(Errc::ZeroOverZero,
                "internal error: unimodular image of a slope is 0/0");
  return Slope(p, q);
}

inline Slope apply_unimodular(const Slope& s, Int a, Int b, Int c, Int d) {
  return apply_unimodular(s, Unimodular{a, b, c, d});
}

namespace detail {

// Canonical pair order: larger denominator first, then smaller numerator.
// ∞ (denominator 0) therefore sorts last.
inline bool pair_order_less(const Slope& x, const Slope& y) {
  if (x.den() != y.den()) return x.den() > y.den();
  return x.num() < y.num();
}

}  // namespace detail

/// Unordered pair of slopes. Members are stored in a canonical order so that
/// SlopePair(a, b) and SlopePair(b, a) are field-for-field identical.
class SlopePair {
 public:
  SlopePair(const Slope& a, const Slope& b)
      : first_(detail::pair_order_less(b, a) ? b : a),
        second_(detail::pair_order_less(b, a) ? a : b) {}

  const Slope& first() const noexcept { return first_; }
  const Slope& second() const noexcept { return second_; }

  friend bool operator==(const SlopePair&, const SlopePair&) = default;

 private:
  Slope first_;
  Slope second_;
};

enum class FormClass { Reciprocal, Product, Both, Invalid };

inline std::string_view form_class_name(FormClass f) {
  switch (f) {
    case FormClass::Reciprocal: return "reciprocal";
    case FormClass::Product: return "product";
    case FormClass::Both: return "both";
    case FormClass::Invalid: return "invalid";
  }
  return "invalid";
}

namespace detail {

// x = p/q with pq != 0 and y = q/p.
inline bool reciprocal_form(const Slope& x, const Slope& y) {
  if (x.num() == 0) return false;
  return Slope(x.den(), x.num()) == y;
}

// x = p/q and y = p*q (as an integer).
inline bool product_form(const Slope& x, const Slope& y) {
  return y.is_integral() && y.num() == checked_mul(x.num(), x.den());
}

}  // namespace detail

/// Classify a slope pair against the two admissible shapes (p/q, q/p) and
/// (p/q, pq). Each shape is tested with either member playing p/q.
inline FormClass pair_form(const SlopePair& pair) {
  const Slope& a = pair.first();
  const Slope& b = pair.second();
  if (a.is_infinite() || b.is_infinite())
    throw Error(Errc::InfiniteSlope, "slope pair has an infinite member");
  const bool reciprocal =
      detail::reciprocal_form(a, b) || detail::reciprocal_form(b, a);
  const bool product = detail::product_form(a, b) || detail::product_form(b, a);
  if (reciprocal && product) return FormClass::Both;
  if (reciprocal) return FormClass::Reciprocal;
  if (product) return FormClass::Product;
  return FormClass::Invalid;
}

// ---------------------------------------------------------------------------
// Text syntax: `p/q`, `-p/q`, `n`, `inf`; pairs as `(a,b)`.

inline std::string to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  if (s.is_integral()) return std::to_string(s.num());
  return std::to_string(s.num()) + "/" + std::to_string(s.den());
}

inline std::string to_string(const SlopePair& pair) {
  return "(" + to_string(pair.first()) + "," + to_string(pair.second()) + ")";
}

namespace detail {

inline Slope scan_slope(Scanner& in) {
  in.skip_ws();
  const std::size_t start = in.pos();
  if (in.accept("inf")) return Slope::infinity();
  const bool negative = in.accept('-');
  if (!negative && !is_digit(in.peek())) in.fail({"slope"});
  Int p = in.unsigned_integer();
  Int q = 1;
  if (in.accept('/')) q = in.unsigned_integer();
  if (negative) p = -p;
  if (p == 0 && q == 0) in.fail_at(start, Errc::ZeroOverZero, "slope 0/0 is undefined");
  return Slope(p, q);
}

}  // namespace detail

/// Parse a whole string as one slope; throws ParseError (line 0).
inline Slope parse_slope(std::string_view text) {
  detail::Scanner in(text);
  Slope s = detail::scan_slope(in);
  in.expect_end();
  return s;
}

inline SlopePair parse_slope_pair(std::string_view text) {
  detail::Scanner in(text);
  in.expect('(');
  const Slope a = detail::scan_slope(in);
  in.expect(',');
  const Slope b = detail::scan_slope(in);
  in.expect(')');
  in.expect_end();
  return SlopePair(a, b);
}

}  // namespace annulus

#endif  // ANNULUS_RATIONAL_HPP
