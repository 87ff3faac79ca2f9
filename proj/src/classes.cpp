#include "sympstairs/classes.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "sympstairs/errors.hpp"
#include "sympstairs/weights.hpp"

namespace sympstairs {

bool check_dio_polydisc(long d, long e, std::span<const long> m) {
  long sum = 0;
  long squares = 0;
  for (long x : m) {
    sum += x;
    squares += x * x;
  }
  return sum == 2 * (d + e) - 1 && squares == 2 * d * e + 1;
}

bool check_dio_ball(long d, std::span<const long> m) {
  if (d == 0) {
    return std::count(m.begin(), m.end(), -1L) == 1 &&
           std::count(m.begin(), m.end(), 0L) == static_cast<long>(m.size()) - 1;
  }
  if (d < 0 || std::any_of(m.begin(), m.end(), [](long x) { return x < 0; })) return false;
  long sum = 0;
  long squares = 0;
  for (long x : m) {
    sum += x;
    squares += x * x;
  }
  return sum == 3 * d - 1 && squares == d * d + 1;
}

BlowupVector<long> psi_push(long d, long e, std::span<const long> m) {
  if (!std::is_sorted(m.begin(), m.end(), std::greater<>()))
    throw DomainError("psi_push needs a non-increasing m");
  const long m1 = m.empty() ? 0 : m[0];
  BlowupVector<long> v;
  v.basis = Basis::homology;
  v.head = d + e - m1;
  v.tail = {d - m1, e - m1};
  if (m.size() > 1) v.tail.insert(v.tail.end(), m.begin() + 1, m.end());
  return v;
}

bool is_exceptional_terminal(const BlowupVector<long>& v) {
  if (v.head != 0) return false;
  return std::count(v.tail.begin(), v.tail.end(), -1L) == 1 &&
         std::all_of(v.tail.begin(), v.tail.end(), [](long x) { return x == 0 || x == -1; });
}

Certification certify(long d, long e, std::span<const long> m) {
  Certification out;
  out.diophantine = d >= 0 && e >= 0 && check_dio_polydisc(d, e, m) &&
                    std::all_of(m.begin(), m.end(), [](long x) { return x >= 0; });
  if (!out.diophantine) return out;
  const auto pushed = psi_push(d, e, m);
  if (pushed.head < 0) return out;
  out.trace = reduce_to_reduced(pushed);
  out.reduces = is_exceptional_terminal(out.trace.final);
  return out;
}

ExceptionalClass make_certified(std::string name, long d, long e, std::vector<long> m) {
  ExceptionalClass c{std::move(name), d, e, std::move(m), false, 0};
  const auto cert = certify(c.d, c.e, c.m);
  if (!cert.ok()) throw InternalInconsistency("class " + c.name + " failed certification");
  c.certified = true;
  c.reduction_steps = cert.trace.step_count();
  return c;
}

ExceptionalClass gen_E(long n) {
  if (n < 0) throw DomainError("E_n needs n >= 0");
  if (n == 0) return make_certified("E0", 1, 0, {1});
  return make_certified("E" + std::to_string(n), n, 1, std::vector<long>(2 * n + 1, 1));
}

ExceptionalClass gen_F(long n) {
  if (n < 1) throw DomainError("F_n needs n >= 1");
  std::vector<long> m{n + 1};
  m.insert(m.end(), 2 * n + 3, n);
  return make_certified("F" + std::to_string(n), n * (n + 1), n + 1, std::move(m));
}

ExceptionalClass gen_G(long b) {
  if (b < 1) throw DomainError("G_b needs b >= 1");
  std::vector<long> m(2 * b + 2, 2 * b);
  m.insert(m.end(), 2 * b + 1, 1);
  return make_certified("G" + std::to_string(b), b * (2 * b + 1), 2 * b + 1, std::move(m));
}

Rational obstruction_mu(const ExceptionalClass& c, const Rational& b, const Rational& a) {
  if (b < 1) throw DomainError("obstruction needs b >= 1");
  const auto w = weight_expansion(a);
  return weight_inner(c.m, w) / (Rational(c.d) + b * Rational(c.e));
}

Rational closed_form_mu_E(long b, long k, const Rational& a) {
  const long kmax = isqrt(Integer(2 * b)).get_si();
  if (b < 1 || k < 0 || k > kmax) throw DomainError("closed_form_mu_E: k out of range");
  if (a < 2 * b + 2 * k) throw DomainError("closed_form_mu_E needs a >= 2b + 2k");
  if (a <= 2 * b + 2 * k + 1) return a / Rational(2 * b + k);
  return Rational(2 * b + 2 * k + 1, 2 * b + k);
}

Rational closed_form_mu_F(long b, const Rational& a) {
  if (b < 1) throw DomainError("closed_form_mu_F needs b >= 1");
  if (a < 2 * b + 3) throw DomainError("closed_form_mu_F needs a >= 2b + 3");
  if (a <= 2 * b + 4) return (Rational(b) * a + 1) / Rational(2 * b * (b + 1));
  return 1 + Rational(2 * b + 1, 2 * b * (b + 1));
}

std::vector<Obstruction> real_b_obstructions(const Rational& b, const Rational& a) {
  if (b < 2) throw DomainError("real-b obstructions need b >= 2");
  std::vector<Obstruction> out;
  out.push_back({"E0", 1});

  // n runs while n - b <= sqrt(2b).
  const Rational two_b = 2 * b;
  for (long n = b.floor().get_si();; ++n) {
    const Rational gap = Rational(n) - b;
    if (gap.sign() > 0 && gap * gap > two_b) break;
    if (n == 0) continue;
    const ExceptionalClass en{"E" + std::to_string(n), n, 1, std::vector<long>(2 * n + 1, 1)};
    out.push_back({en.name, obstruction_mu(en, b, a)});
  }

  const long nearest = (b - Rational(1, 2)).ceil().get_si();
  const Rational eps = b - Rational(nearest);
  const Rational lower = -Rational(nearest, (nearest + 1) * (nearest + 1));
  const Rational upper(1, nearest + 2);
  if (nearest >= 1 && lower < eps && eps < upper) {
    std::vector<long> m{nearest + 1};
    m.insert(m.end(), 2 * nearest + 3, nearest);
    const ExceptionalClass f{"F" + std::to_string(nearest), nearest * (nearest + 1), nearest + 1, m};
    out.push_back({f.name, obstruction_mu(f, b, a)});
  }
  return out;
}

ErrorReport error_report(const ExceptionalClass& c, const Rational& b, const Rational& a) {
  if (b < 1) throw DomainError("error report needs b >= 1");
  const auto w = weight_expansion(a);
  const Rational weight = Rational(c.d) + b * Rational(c.e);
  const Rational mw = weight_inner(c.m, w);
  Rational mm;
  for (long x : c.m) mm += Rational(x) * Rational(x);

  // coef = (d + b e) / sqrt(2ba)
  const QuadNum coef = QuadNum(weight) / QuadNum::sqrt(2 * b * a);
  const Rational coef_sq = weight * weight / (2 * b * a);

  ErrorReport r;
  r.h = Rational(c.d) - b * Rational(c.e);
  r.eps_inner_w = QuadNum(mw) - coef * QuadNum(a);
  r.eps_norm_sq = QuadNum(mm) - coef * QuadNum(2 * mw) + QuadNum(coef_sq * a);
  r.obstructive = r.eps_inner_w.sign() > 0;
  return r;
}

namespace {

class DioSearch {
 public:
  DioSearch(std::size_t max_tail) : max_tail_(max_tail) {}

  void run(std::vector<long>& prefix, long cap, long linear, long quadratic) {
    if (linear == 0 && quadratic == 0) {
      found_.push_back(prefix);
      return;
    }
    if (linear <= 0 || quadratic <= 0) return;
    const long slots = static_cast<long>(max_tail_) - static_cast<long>(prefix.size());
    if (slots <= 0) return;
    // Positive integer entries: x <= x^2 <= cap * x.
    if (quadratic < linear || quadratic > cap * linear) return;
    if (linear > slots * cap) return;
    if (linear * linear > slots * quadratic) return;  // Cauchy-Schwarz
    const long top = std::min({cap, linear, isqrt(Integer(quadratic)).get_si()});
    for (long x = top; x >= 1; --x) {
      prefix.push_back(x);
      run(prefix, x, linear - x, quadratic - x * x);
      prefix.pop_back();
    }
  }

  std::vector<std::vector<long>> take() { return std::move(found_); }

 private:
  std::size_t max_tail_;
  std::vector<std::vector<long>> found_;
};

}  // namespace

std::vector<std::vector<long>> enumerate_dio_solutions(long d, long e, std::size_t max_tail) {
  if (d < 0 || e < 0) throw DomainError("enumeration needs d, e >= 0");
  const long linear = 2 * (d + e) - 1;
  const long quadratic = 2 * d * e + 1;
  if (linear <= 0 || max_tail == 0) return {};
  const long top = std::min(linear, isqrt(Integer(quadratic)).get_si());

  const auto branch = [=](long first) {
    DioSearch search(max_tail);
    std::vector<long> prefix{first};
    search.run(prefix, first, linear - first, quadratic - first * first);
    return search.take();
  };

  std::vector<std::vector<long>> out;
  if (linear < 48) {
    for (long first = top; first >= 1; --first) {
      auto part = branch(first);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::vector<std::future<std::vector<std::vector<long>>>> jobs;
  for (long first = top; first >= 1; --first) jobs.push_back(std::async(std::launch::async, branch, first));
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long intersection_product(const ExceptionalClass& x, const ExceptionalClass& y) {
  long inner = 0;
  const std::size_t n = std::min(x.m.size(), y.m.size());
  for (std::size_t i = 0; i < n; ++i) inner += x.m[i] * y.m[i];
  return x.d * y.e + y.d * x.e - inner;
}

std::string format_class(const ExceptionalClass& c) {
  std::string out = std::to_string(c.d) + "," + std::to_string(c.e) + ":";
  for (std::size_t i = 0; i < c.m.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(c.m[i]);
  }
  return out;
}

ExceptionalClass parse_class(std::string_view text) {
  const auto comma = text.find(',');
  const auto colon = text.find(':');
  if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma)
    throw DomainError("class needs the form 'd,e:m1 m2 ...'");
  ExceptionalClass c;
  c.d = std::stol(std::string(text.substr(0, comma)));
  c.e = std::stol(std::string(text.substr(comma + 1, colon - comma - 1)));
  std::istringstream in{std::string(text.substr(colon + 1))};
  long x = 0;
  while (in >> x) c.m.push_back(x);
  return c;
}

}  // namespace sympstairs
