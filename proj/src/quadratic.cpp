#include "sympstairs/quadratic.hpp"

#include <ostream>

#include "sympstairs/errors.hpp"

namespace sympstairs {
namespace {

constexpr unsigned long kTrialDivisionLimit = 1ul << 20;

// n = t^2 * f with f square-free (modulo the trial-division limit).
void split_square_integer(Integer n, Integer& t, Integer& f) {
  t = 1;
  f = 1;
  const auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        t *= p;
      } else {
        f *= p;
      }
    }
  };
  strip(2);
  unsigned long p = 3;
  for (; p <= kTrialDivisionLimit; p += 2) {
    if (Integer(p) * p > n) break;
    strip(p);
  }
  if (n == 1) return;
  if (p > kTrialDivisionLimit && mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    t *= isqrt(n);
    return;
  }
  f *= n;
}

}  // namespace

void split_square(const Rational& x, Rational& s, Integer& squarefree) {
  if (x.sign() < 0) throw DomainError("negative radicand " + x.str());
  if (x.is_zero()) {
    s = 0;
    squarefree = 0;
    return;
  }
  // sqrt(u/v) = sqrt(u*v)/v
  const Integer v = x.denominator();
  Integer t;
  split_square_integer(x.numerator() * v, t, squarefree);
  s = Rational(t, v);
}

bool same_field(const Rational& x, const Rational& y) {
  Rational root;
  return rational_sqrt(x * y, root);
}

QuadNum QuadNum::make(const Rational& p, const Rational& q, const Rational& radicand) {
  if (radicand.sign() < 0) throw DomainError("negative radicand " + radicand.str());
  if (q.is_zero() || radicand.is_zero()) return QuadNum(p);
  Rational s;
  Integer f;
  split_square(radicand, s, f);
  if (f == 1) return QuadNum(p + q * s);
  return QuadNum(p, q * s, Rational(f));
}

QuadNum QuadNum::parse(std::string_view text) {
  const auto pos = text.find("sqrt(");
  if (pos == std::string_view::npos) return QuadNum(Rational::parse(text));
  if (text.empty() || text.back() != ')' || pos + 5 >= text.size())
    throw DomainError("malformed quadratic number: '" + std::string(text) + "'");
  const Rational radicand = Rational::parse(text.substr(pos + 5, text.size() - pos - 6));
  std::string_view prefix = text.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  Rational p;
  std::string_view coef = prefix;
  if (split != std::string_view::npos) {
    p = Rational::parse(prefix.substr(0, split));
    coef = prefix.substr(split);
  }
  Rational q;
  if (coef.empty() || coef == "+") {
    q = 1;
  } else if (coef == "-") {
    q = -1;
  } else {
    if (coef.front() == '+') coef.remove_prefix(1);
    q = Rational::parse(coef);
  }
  return make(p, q, radicand);
}

int QuadNum::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with q^2 D.
  const auto c = p_ * p_ <=> q_ * q_ * d_;
  if (c > 0) return sp;
  if (c < 0) return sq;
  return 0;
}

double QuadNum::to_double() const {
  if (is_rational()) return p_.to_double();
  mpf_class d(d_.raw(), 256);
  mpf_class root(0, 256);
  mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  mpf_class value(p_.raw(), 256);
  value += mpf_class(q_.raw(), 256) * root;
  return nearest_double(value);
}

std::string QuadNum::str() const {
  if (is_rational()) return p_.str();
  std::string coef;
  if (q_ == 1) {
    coef = "sqrt(" + d_.str() + ")";
  } else if (q_ == -1) {
    coef = "-sqrt(" + d_.str() + ")";
  } else {
    coef = q_.str() + "*sqrt(" + d_.str() + ")";
  }
  if (p_.is_zero()) return coef;
  return p_.str() + (q_.sign() > 0 ? "+" : "") + coef;
}

QuadNum QuadNum::operator-() const { return QuadNum(-p_, -q_, d_); }

QuadNum QuadNum::conjugate() const { return QuadNum(p_, -q_, d_); }

Rational QuadNum::aligned_coefficient(const QuadNum& o) const {
  if (o.d_ == d_) return o.q_;
  Rational ratio_root;
  if (!rational_sqrt(o.d_ / d_, ratio_root))
    throw IncompatibleFieldError("sqrt(" + d_.str() + ") and sqrt(" + o.d_.str() +
                                 ") generate different fields");
  return o.q_ * ratio_root;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  p_ += o.p_;
  if (o.is_rational()) return *this;
  if (is_rational()) {
    q_ = o.q_;
    d_ = o.d_;
    return *this;
  }
  q_ += aligned_coefficient(o);
  if (q_.is_zero()) d_ = 0;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) { return *this += -o; }

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  if (o.is_rational()) {
    p_ *= o.p_;
    q_ *= o.p_;
    if (q_.is_zero()) d_ = 0;
    return *this;
  }
  if (is_rational()) {
    q_ = p_ * o.q_;
    p_ *= o.p_;
    d_ = q_.is_zero() ? Rational(0) : o.d_;
    return *this;
  }
  const Rational oq = aligned_coefficient(o);
  const Rational p = p_ * o.p_ + q_ * oq * d_;
  const Rational q = p_ * oq + q_ * o.p_;
  p_ = p;
  q_ = q;
  if (q_.is_zero()) d_ = 0;
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  if (o.is_rational()) {
    p_ /= o.p_;
    q_ /= o.p_;
    return *this;
  }
  // x / y = x * conj(y) / N(y) with N(y) = p^2 - q^2 D, nonzero since D is not a square.
  const Rational norm = o.p_ * o.p_ - o.q_ * o.q_ * o.d_;
  *this *= o.conjugate();
  p_ /= norm;
  q_ /= norm;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

}  // namespace sympstairs
