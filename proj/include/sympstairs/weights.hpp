#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sympstairs/rational.hpp"

namespace sympstairs {

struct WeightBlock {
  Rational weight;
  std::size_t multiplicity = 0;

  friend bool operator==(const WeightBlock&, const WeightBlock&) = default;
};

/// Weight expansion (1^{x l0}, w1^{x l1}, ..., wN^{x lN}) of a rational a >= 1.
///
/// Produced by running Euclid's algorithm on the rectangle a x 1: take as
/// many squares of the current side as fit, the remainder becomes the next
/// side. Multiplicities are therefore the continued-fraction digits of a.
/// Both the run-length view and the flattened view are kept.
class WeightExpansion {
 public:
  explicit WeightExpansion(const Rational& a);

  const Rational& source() const { return a_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  const std::vector<Rational>& flat() const { return flat_; }

  /// l(a) = sum of multiplicities.
  std::size_t flat_length() const { return flat_.size(); }
  /// w_N, the smallest weight (1/q for a = p/q).
  const Rational& smallest() const { return blocks_.back().weight; }

 private:
  Rational a_;
  std::vector<WeightBlock> blocks_;
  std::vector<Rational> flat_;
};

/// Throws DomainError for a < 1.
WeightExpansion weight_expansion(const Rational& a);

std::size_t flat_length(const Rational& a);

/// <m, w(a)> with the shorter vector padded by zeros.
Rational weight_inner(std::span<const long> m, const WeightExpansion& w);
Rational weight_inner(std::span<const Rational> m, const WeightExpansion& w);

}  // namespace sympstairs
