#include "sympstairs/weights.hpp"

#include <algorithm>

#include "sympstairs/errors.hpp"

namespace sympstairs {

WeightExpansion::WeightExpansion(const Rational& a) : a_(a) {
  if (a < 1) throw DomainError("weight expansion needs a >= 1, got " + a.str());
  Rational longer = a;
  Rational side = 1;
  while (!side.is_zero()) {
    const Integer count = (longer / side).floor();
    blocks_.push_back({side, count.get_ui()});
    const Rational rest = longer - Rational(count) * side;
    longer = side;
    side = rest;
  }
  for (const auto& b : blocks_) flat_.insert(flat_.end(), b.multiplicity, b.weight);
}

WeightExpansion weight_expansion(const Rational& a) { return WeightExpansion(a); }

std::size_t flat_length(const Rational& a) { return WeightExpansion(a).flat_length(); }

Rational weight_inner(std::span<const long> m, const WeightExpansion& w) {
  const auto& flat = w.flat();
  const std::size_t n = std::min(m.size(), flat.size());
  Rational sum;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] != 0) sum += Rational(m[i]) * flat[i];
  return sum;
}

Rational weight_inner(std::span<const Rational> m, const WeightExpansion& w) {
  const auto& flat = w.flat();
  const std::size_t n = std::min(m.size(), flat.size());
  Rational sum;
  for (std::size_t i = 0; i < n; ++i) sum += m[i] * flat[i];
  return sum;
}

}  // namespace sympstairs
