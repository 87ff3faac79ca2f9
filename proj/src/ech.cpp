#include "sympstairs/ech.hpp"

#include <queue>
#include <utility>

#include "sympstairs/errors.hpp"

namespace sympstairs {

CapacitySequence ech_sequence(const Rational& a, std::size_t n) {
  if (a < 1) throw DomainError("ECH sequence needs a >= 1");
  if (n == 0) throw DomainError("ECH sequence needs N >= 1");
  const Integer p = a.numerator();
  const Integer q = a.denominator();

  // Entry: (q * (m + lane * a), lane). Ties pop the lower lane first.
  using Entry = std::pair<Integer, unsigned long>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(q, 0UL);
  heap.emplace(p, 1UL);
  unsigned long opened = 1;

  CapacitySequence out;
  out.a_param = a;
  out.values.reserve(n);
  while (out.values.size() < n) {
    auto [key, lane] = heap.top();
    heap.pop();
    out.values.emplace_back(key, q);
    if (lane == opened && key == p * lane) {
      ++opened;
      heap.emplace(p * opened, opened);
    }
    heap.emplace(key + q, lane);
  }
  return out;
}

CapacitySequence polydisc_ech_sequence(const Rational& b, std::size_t n) {
  if (b < 1) throw DomainError("polydisc ECH sequence needs b >= 1");
  if (n == 0) throw DomainError("ECH sequence needs N >= 1");
  const Integer p = b.numerator();
  const Integer q = b.denominator();
  CapacitySequence out;
  out.a_param = b;
  out.values.reserve(n);
  for (unsigned long k = 1; k <= n; ++k) {
    Integer best = q * k;
    for (unsigned long j = 1; p * j < best; ++j) {
      const Integer m = (k + 1 + j) / (j + 1) - 1;
      const Integer v = m * q + p * j;
      if (v < best) best = v;
    }
    out.values.emplace_back(best, q);
  }
  return out;
}

CapacitySequence ech_domain(const Rational& b, std::size_t n) {
  if (b < 1) throw DomainError("ECH bound needs b >= 1");
  return b.is_integer() ? ech_sequence(2 * b, n) : polydisc_ech_sequence(b, n);
}

EchBound ech_lower_bound_against(const CapacitySequence& domain, const Rational& a) {
  const std::size_t n = domain.values.size();
  const auto target = ech_sequence(a, n);
  EchBound best{Rational(0), 0};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational r = target.values[i] / domain.values[i];
    if (r > best.value) best = {r, i + 1};
  }
  return best;
}

EchBound ech_lower_bound_at(const Rational& b, const Rational& a, std::size_t n) {
  return ech_lower_bound_against(ech_domain(b, n), a);
}

Rational ech_lower_bound(const Rational& b, const Rational& a, std::size_t n) {
  return ech_lower_bound_at(b, a, n).value;
}

}  // namespace sympstairs
