#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace crescent {

// Exact fraction over arbitrary-precision integers. Always canonical:
// denominator > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : v_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q", "-p/q" with decimal digits only; q must be nonzero.
  // Non-reduced input is reduced. Throws Error{Parse} otherwise.
  static Rational parse(std::string_view text);

  // Always "p/q" (q = 1 for integers).
  std::string to_string() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

}  // namespace crescent
