#include "sympstairs/rational.hpp"

#include <cstdlib>
#include <ostream>

#include "sympstairs/errors.hpp"

namespace sympstairs {

Rational::Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return DomainError("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto to_int = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw bad();
    return Rational(to_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw bad();
  return Rational(to_int(num), to_int(den));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  const Integer n = x.numerator();
  const Integer d = x.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

double Rational::to_double() const {
  return nearest_double(mpf_class(v_, 256));
}

double nearest_double(const mpf_class& x) {
  // mpf_get_d truncates, strtod rounds
  mp_exp_t exp = 0;
  char* raw = mpf_get_str(nullptr, &exp, 10, 40, x.get_mpf_t());
  std::string digits(raw);
  void (*release)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &release);
  release(raw, digits.size() + 1);
  if (digits.empty()) return 0.0;
  std::string text = digits[0] == '-' ? "-0." + digits.substr(1) : "0." + digits;
  text += "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("simplest_between: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  const Rational fl(lo.floor());
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // Both endpoints in (fl, fl+1): continue on the reciprocals of the fractional parts.
  return fl + simplest_between((hi - fl).reciprocal(), (lo - fl).reciprocal()).reciprocal();
}

}  // namespace sympstairs
