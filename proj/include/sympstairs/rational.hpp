#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sympstairs {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. The wrapper exists so that
/// expression templates never leak into `auto` variables and so that the
/// textual format ("p/q", or "p" when q = 1) is fixed in one place.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const Integer& n) : v_(n) {}
  explicit Rational(mpq_class v);

  /// Parses "p", "-p", "p/q". Throws DomainError on malformed input or q = 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;
  Rational reciprocal() const;
  double to_double() const;
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Exact square root if `x` is the square of a rational, else false.
bool rational_sqrt(const Rational& x, Rational& root);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Simplest rational (smallest denominator, then smallest |numerator|)
/// in the closed interval [lo, hi]; requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Nearest double to a multiprecision float.
double nearest_double(const mpf_class& x);

}  // namespace sympstairs
