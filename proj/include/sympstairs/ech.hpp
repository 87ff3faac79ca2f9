#pragma once

#include <cstddef>
#include <vector>

#include "sympstairs/rational.hpp"

namespace sympstairs {

/// First N ECH capacities of E(1,a): the numbers m + n a, m, n >= 0 and
/// (m, n) != (0, 0), sorted with multiplicity.
struct CapacitySequence {
  Rational a_param;
  std::vector<Rational> values;
};

/// Lanes n = 0, 1, ... (values m + n a) are merged through a min-heap keyed on
/// integers over the common denominator of a; lane n + 1 is opened once lane n
/// emits its first value.
CapacitySequence ech_sequence(const Rational& a, std::size_t n);

/// First N ECH capacities of the polydisc P(1,b):
/// c_k = min { m + n b : m, n >= 0, (m + 1)(n + 1) >= k + 1 }.
CapacitySequence polydisc_ech_sequence(const Rational& b, std::size_t n);

struct EchBound {
  Rational value;
  std::size_t k = 0;  // first index attaining the maximum, 1-based
};

/// max over k <= N of c_k(E(1,a)) / c_k(X); a lower bound for c_b(a).
/// X = E(1,2b) for integer b and X = P(1,b) otherwise.
EchBound ech_lower_bound_at(const Rational& b, const Rational& a, std::size_t n);

/// The domain sequence used by ech_lower_bound_at, for reuse across many a.
CapacitySequence ech_domain(const Rational& b, std::size_t n);
EchBound ech_lower_bound_against(const CapacitySequence& domain, const Rational& a);
Rational ech_lower_bound(const Rational& b, const Rational& a, std::size_t n);

}  // namespace sympstairs
