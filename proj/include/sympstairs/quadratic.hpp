#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sympstairs/rational.hpp"

namespace sympstairs {

/// Exact element p + q*sqrt(D) of a real quadratic field.
///
/// The radicand is normalized on construction: its largest rational square
/// factor is pulled into q, so two irrational values share a field exactly
/// when their radicands compare equal. A value with q = 0 or a square radicand
/// collapses to a plain rational (q = 0, D = 0) that combines with any field.
///
/// Arithmetic between irrational values with different radicands throws
/// IncompatibleFieldError; only comparisons against rationals are supported
/// across fields.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rational r) : p_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QuadNum(long n) : p_(n) {}                 // NOLINT(google-explicit-constructor)
  QuadNum(int n) : p_(n) {}                  // NOLINT(google-explicit-constructor)

  /// p + q*sqrt(radicand); throws DomainError for a negative radicand.
  static QuadNum make(const Rational& p, const Rational& q, const Rational& radicand);
  static QuadNum sqrt(const Rational& x) { return make(0, 1, x); }

  /// Parses "p/q", "p/q+r/s*sqrt(u/v)", "r/s*sqrt(u/v)", "sqrt(u)", "-sqrt(u)".
  static QuadNum parse(std::string_view text);

  const Rational& rational_part() const { return p_; }
  const Rational& coefficient() const { return q_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return q_.is_zero(); }

  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);

  friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
  friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
  friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
  friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }

  friend bool operator==(const QuadNum& a, const QuadNum& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const QuadNum& a, const QuadNum& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Conjugate p - q*sqrt(D).
  QuadNum conjugate() const;

 private:
  QuadNum(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

  // Returns o's coefficient expressed over this value's radicand, or throws.
  Rational aligned_coefficient(const QuadNum& o) const;

  Rational p_;
  Rational q_;
  Rational d_;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

/// Square-free integer f and rational s with x = s^2 * f (x >= 0). f = 0 iff x = 0.
/// Factors are removed by trial division up to 2^20 followed by an exact
/// perfect-square test of the cofactor.
void split_square(const Rational& x, Rational& s, Integer& squarefree);

/// True if x and y (both >= 0) differ by a rational square factor, i.e.
/// sqrt(x) and sqrt(y) generate the same field.
bool same_field(const Rational& x, const Rational& y);

}  // namespace sympstairs
