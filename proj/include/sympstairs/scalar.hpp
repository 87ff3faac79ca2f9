#pragma once

#include <cmath>
#include <string>

#include "sympstairs/quadratic.hpp"
#include "sympstairs/rational.hpp"

// Uniform access to the three entry types the engine runs on.
namespace sympstairs::scalar {

inline int sign(long x) { return (x > 0) - (x < 0); }
inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const QuadNum& x) { return x.sign(); }

inline std::string str(long x) { return std::to_string(x); }
inline std::string str(const Rational& x) { return x.str(); }
inline std::string str(const QuadNum& x) { return x.str(); }

inline double to_double(long x) { return static_cast<double>(x); }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(const QuadNum& x) { return x.to_double(); }

/// Smallest integer >= x, clamped below at 0. Only used for step budgets.
inline long ceil_nonneg(long x) { return x > 0 ? x : 0; }
inline long ceil_nonneg(const Rational& x) { return x.sign() > 0 ? x.ceil().get_si() : 0; }
inline long ceil_nonneg(const QuadNum& x) {
  const double d = x.to_double();
  return d > 0 ? static_cast<long>(std::ceil(d)) + 1 : 0;
}

}  // namespace sympstairs::scalar
