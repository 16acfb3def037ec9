#include "sandwich/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

static_assert(sizeof(long) == sizeof(long long), "LP64 target expected");

Rational::Rational(long long n) : value_(static_cast<long>(n)) {}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw ParameterError("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(num, den));
}

Rational Rational::pow2(int exponent) {
  mpz_class p = 1;
  const unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::optional<unsigned> Rational::half_power_exponent() const {
  if (numerator() != 1) return std::nullopt;
  const mpz_class& d = denominator();
  if (mpz_popcount(d.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParameterError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sandwich
