#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sandwich {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class: every arithmetic result is
/// canonicalized, so two Rationals compare equal iff their numerators and
/// denominators are equal.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// 2^exponent for any signed exponent.
  static Rational pow2(int exponent);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Lossy; for plotting only.
  double to_double() const { return value_.get_d(); }

  /// Returns n if this equals 1/2^n for some n >= 0.
  std::optional<unsigned> half_power_exponent() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);
Rational midpoint(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sandwich
