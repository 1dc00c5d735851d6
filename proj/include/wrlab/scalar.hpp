#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt(k)).
//
// A QuadScalar is x + y*sqrt(k) with rational x, y and a nonnegative integer
// radicand k. Values are normalized on construction: square factors of k found
// by trial division are pulled into y, a perfect-square radicand is folded into
// x, and every purely rational value is stored with y = 0 and k = 0. Two values
// combine arithmetically only if they are rational or share the same radicand;
// ordering works across fields.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "wrlab/errors.hpp"

namespace wrlab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
// Variable-precision binary float; the precision is fixed per value in bits.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(int v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long long v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Integer v) : x_(std::move(v)) {}  // NOLINT
  QuadScalar(Rational x) : x_(std::move(x)) {}  // NOLINT
  QuadScalar(Rational x, Rational y, Integer k);

  // sqrt(r) for a nonnegative rational, exactly.
  static QuadScalar sqrt_of(const Rational& r);
  // Parses "x+y*sqrt(k)" (also "x-y*sqrt(k)", "sqrt(k)", "x+sqrt(k)"), "p/q" or
  // an integer.
  static QuadScalar parse(std::string_view text);

  const Rational& rational_part() const { return x_; }
  const Rational& radical_coeff() const { return y_; }
  const Integer& radicand() const { return k_; }
  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  // True iff rational with denominator 1.
  bool is_integer() const;

  QuadScalar conjugate() const;
  // Field norm x^2 - k*y^2.
  Rational norm() const;
  int sign() const;
  QuadScalar abs() const { return sign() < 0 ? -*this : *this; }

  // If *this is a square in its field, returns the nonnegative root.
  std::optional<QuadScalar> exact_sqrt() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b);
  friend std::strong_ordering operator<=>(const QuadScalar& a,
                                          const QuadScalar& b);

  // "x+y*sqrt(k)" with x, y in lowest terms "p/q" (or "p" when q = 1).
  std::string to_string() const;
  double to_double() const;

 private:
  struct Raw {};
  QuadScalar(Raw, Rational x, Rational y, Integer k)
      : x_(std::move(x)), y_(std::move(y)), k_(std::move(k)) {
    if (y_ == 0) k_ = 0;
  }
  // Radicand shared by a and b; throws DomainError if they are incompatible.
  static const Integer& common_radicand(const QuadScalar& a,
                                        const QuadScalar& b);

  Rational x_;
  Rational y_;
  Integer k_;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& q);

int qs_sign(const QuadScalar& a);
inline QuadScalar abs(const QuadScalar& a) { return a.abs(); }

// Numeric embedding rounded to `precision_bits` (>= 53), within one ulp.
BigFloat qs_to_float(const QuadScalar& a, unsigned precision_bits);

// Rational helpers shared across modules.
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);
// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
// Nonnegative rational square root if it exists.
std::optional<Rational> rational_sqrt(const Rational& r);
Rational rational_pow(const Rational& base, long exponent);
// Largest s with s*s | k among primes up to the trial bound; returns k/s^2 and s.
std::pair<Integer, Integer> squarefree_split(const Integer& k);

// Decimal rendering with `digits` significant figures.
std::string format_significant(const BigFloat& v, int digits);

}  // namespace wrlab
