#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sympstairs/cremona.hpp"
#include "sympstairs/quadratic.hpp"
#include "sympstairs/rational.hpp"
#include "sympstairs/weights.hpp"

namespace sympstairs {

/// Breakpoints of the staircase of c_b for an integer b >= 2.
///
///   u_b(k) = (2b+k)^2 / (2b),  v_b(k) = 2b ((2b+2k+1)/(2b+k))^2,
///   alpha_b = (b^2 + 2b + sqrt((b^2+2b)^2 - 1)) / b,
///   beta_b  = 2b + 4 + 1/(2b(b+1)^2),
/// for k = 0, ..., floor(sqrt(2b)).
struct StepGeometry {
  long b = 0;
  long kmax = 0;
  std::vector<Rational> u;
  std::vector<Rational> v;
  QuadNum alpha;
  Rational beta;
  Rational gamma;   // u_b(2)
  Rational v_plus;  // v_b(kmax)
  std::vector<Rational> step_lengths;
};

/// Throws DomainError for b < 2 and InternalInconsistency if the ordering
/// of the intervals does not hold.
StepGeometry step_geometry(long b);

Rational u_b(long b, long k);
Rational v_b(long b, long k);
/// l_b(k) = v_b(k) - u_b(k).
Rational step_length(long b, long k);
QuadNum alpha_b(long b);
Rational beta_b(long b);
/// a >= alpha_b, decided in rational arithmetic.
bool at_least_alpha(long b, const Rational& a);

enum class Branch { nonsqueezing, linear_step, affine_step, volume };

struct CurveSample {
  Rational a;
  QuadNum value;
  Branch branch = Branch::volume;
  long k = -1;  // linear steps only
};

/// "nonsqueezing", "linear-step(k)", "affine-step" or "volume".
std::string branch_name(const CurveSample& s);

/// Closed form of c_b(a) for integer b >= 2 and a >= 1.
CurveSample cb_closed(long b, const Rational& a);

/// sqrt(a/(2b)).
QuadNum volume_bound(const Rational& b, const Rational& a);
/// f_b(a) = 2a / (a + 2b - 1).
Rational folding_bound(const Rational& b, const Rational& a);

/// Maximum of the volume constraint and the real-b obstructions; b >= 2.
QuadNum db_real(const Rational& b, const Rational& a);

/// 2b c_b(a + 2b) - 2b.
QuadNum rescaled_chat(long b, const Rational& a);
/// a - k on [2k, 2k+1], k + 1 on [2k+1, 2k+2].
Rational c_infty(const Rational& a);

/// ((b+1) lambda; b lambda, lambda, w(a)).
template <class T>
BlowupVector<T> capacity_vector(long b, const Rational& a, const T& lambda) {
  const auto w = weight_expansion(a);
  BlowupVector<T> v;
  v.head = T(b + 1) * lambda;
  v.tail.reserve(w.flat_length() + 2);
  v.tail.push_back(T(b) * lambda);
  v.tail.push_back(lambda);
  for (const auto& x : w.flat()) v.tail.push_back(T(x));
  return v;
}

/// Method-2 answer for E(1,a) into P(lambda, lambda b); T is Rational or
/// QuadNum.
template <class T>
Decision method2_cb_decide(long b, const Rational& a, const T& lambda,
                           std::optional<std::size_t> max_steps = std::nullopt) {
  if (b < 1) throw DomainError("method2_cb_decide needs b >= 1");
  if (scalar::sign(lambda) <= 0) throw DomainError("method2_cb_decide needs lambda > 0");
  const auto v = capacity_vector(b, a, lambda);
  return method2_decide(v.head, v.tail, max_steps);
}

struct Bracket {
  Rational lo;  // DoesNotEmbed
  Rational hi;  // Embeds
  std::size_t decisions = 0;
};

/// Shrinks a rational bracket around c_b(a) by repeated Method-2 decisions
/// until hi - lo <= tol. Each probe is the simplest rational in the middle
/// third of the current bracket.
Bracket cb_bisect(long b, const Rational& a, const Rational& tol,
                  std::optional<std::size_t> max_steps = std::nullopt);

/// Runs b - 1 standard moves on (2b lambda; (2b-1) lambda, lambda^{x(2b-1)}, w(a)),
/// checks that each has defect -lambda, and compares the result with the
/// ordered capacity vector. Requires lambda >= 1.
template <class T>
bool equivalence_chain(long b, const Rational& a, const T& lambda) {
  if (b < 1) throw DomainError("equivalence_chain needs b >= 1");
  if (lambda < T(1)) throw DomainError("equivalence_chain needs lambda >= 1");
  const auto w = weight_expansion(a);
  BlowupVector<T> v;
  v.head = T(2 * b) * lambda;
  v.tail.push_back(T(2 * b - 1) * lambda);
  for (long i = 0; i < 2 * b - 1; ++i) v.tail.push_back(lambda);
  for (const auto& x : w.flat()) v.tail.push_back(T(x));

  v = ordered(detail::padded(v));
  for (long i = 0; i < b - 1; ++i) {
    if (!(defect(v) == -lambda)) return false;
    v = standard_move(v);
  }
  return v == ordered(detail::padded(capacity_vector(b, a, lambda)));
}

}  // namespace sympstairs
