#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sympstairs/errors.hpp"
#include "sympstairs/quadratic.hpp"
#include "sympstairs/rational.hpp"
#include "sympstairs/scalar.hpp"

namespace sympstairs {

/// Which lattice coordinates a vector is written in.
///   ball:      (mu; a_1, ..., a_n), cohomology of the n-fold blow-up of CP^2
///   homology:  (d; m_1, ..., m_n), same lattice, homology side
///   polydisc:  (d, e; m_1, ..., m_k), blow-up of S^2 x S^2 (two head entries)
enum class Basis { ball, homology, polydisc };

/// A head value followed by a finite tail; the tail is implicitly continued by
/// zeros. Cremona operations are only defined in the ball/homology bases.
template <class T>
struct BlowupVector {
  Basis basis = Basis::ball;
  T head{};
  std::vector<T> tail;
  T head2{};  // polydisc basis only

  /// Equality up to trailing zeros of the tail.
  friend bool operator==(const BlowupVector& x, const BlowupVector& y) {
    if (x.basis != y.basis || !(x.head == y.head)) return false;
    if (x.basis == Basis::polydisc && !(x.head2 == y.head2)) return false;
    const std::size_t n = std::max(x.tail.size(), y.tail.size());
    for (std::size_t i = 0; i < n; ++i) {
      const T& a = i < x.tail.size() ? x.tail[i] : zero();
      const T& b = i < y.tail.size() ? y.tail[i] : zero();
      if (!(a == b)) return false;
    }
    return true;
  }

  static const T& zero() {
    static const T z{};
    return z;
  }
};

template <class T>
BlowupVector<T> make_vector(T head, std::vector<T> tail, Basis basis = Basis::ball) {
  BlowupVector<T> v;
  v.basis = basis;
  v.head = std::move(head);
  v.tail = std::move(tail);
  return v;
}

enum class Decision { embeds, does_not_embed };

inline const char* to_string(Decision d) {
  return d == Decision::embeds ? "Embeds" : "DoesNotEmbed";
}

template <class T>
struct ReductionStep {
  BlowupVector<T> before;  // ordered
  T defect{};
  /// permutation[i] = index (after the transform) of the entry moved to slot i.
  std::vector<std::size_t> permutation;
};

/// Orbit of a vector under standard Cremona moves, up to the first reduced
/// vector. The input is zero-padded to at least three tail entries and
/// ordered by `initial_permutation` before the first move.
template <class T>
struct ReductionTrace {
  BlowupVector<T> initial;
  std::vector<std::size_t> initial_permutation;
  std::vector<ReductionStep<T>> steps;
  BlowupVector<T> final;

  std::size_t step_count() const { return steps.size(); }
};

/// Thrown by reduce_to_reduced when the step budget runs out; carries the
/// trace computed so far.
template <class T>
class NonTerminationError : public std::runtime_error {
 public:
  NonTerminationError(const std::string& what, ReductionTrace<T> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const ReductionTrace<T>& partial() const { return partial_; }

 private:
  ReductionTrace<T> partial_;
};

namespace detail {

template <class T>
void require_lattice_basis(const BlowupVector<T>& v) {
  if (v.basis == Basis::polydisc)
    throw DomainError("Cremona moves act on ball/homology vectors; use psi_push first");
}

template <class T>
BlowupVector<T> padded(BlowupVector<T> v, std::size_t n = 3) {
  if (v.tail.size() < n) v.tail.resize(n);
  return v;
}

template <class T>
BlowupVector<T> permuted(const BlowupVector<T>& v, const std::vector<std::size_t>& perm) {
  BlowupVector<T> out = v;
  for (std::size_t i = 0; i < perm.size(); ++i) out.tail[i] = v.tail[perm[i]];
  return out;
}

}  // namespace detail

/// head - tail_1 - tail_2 - tail_3 (missing entries count as zero).
template <class T>
T defect(const BlowupVector<T>& v) {
  T d = v.head;
  for (std::size_t i = 0; i < 3 && i < v.tail.size(); ++i) d -= v.tail[i];
  return d;
}

/// Cr(x0; x) = (x0 + delta; x1 + delta, x2 + delta, x3 + delta, x4, ...).
/// An involution.
template <class T>
BlowupVector<T> cremona_transform(const BlowupVector<T>& v) {
  detail::require_lattice_basis(v);
  BlowupVector<T> out = detail::padded(v);
  const T delta = defect(out);
  out.head += delta;
  for (std::size_t i = 0; i < 3; ++i) out.tail[i] += delta;
  return out;
}

/// Stable descending order of the tail; returns the permutation applied.
template <class T>
std::vector<std::size_t> ordering(const BlowupVector<T>& v) {
  std::vector<std::size_t> perm(v.tail.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return v.tail[j] < v.tail[i]; });
  return perm;
}

template <class T>
BlowupVector<T> ordered(const BlowupVector<T>& v) {
  return detail::permuted(v, ordering(v));
}

/// Order, transform, order again.
template <class T>
BlowupVector<T> standard_move(const BlowupVector<T>& v) {
  detail::require_lattice_basis(v);
  return ordered(cremona_transform(ordered(detail::padded(v))));
}

/// Ordered with mu >= a_1 + a_2 + a_3.
template <class T>
bool is_reduced(const BlowupVector<T>& v) {
  for (std::size_t i = 1; i < v.tail.size(); ++i)
    if (v.tail[i - 1] < v.tail[i]) return false;
  return scalar::sign(defect(v)) >= 0;
}

/// 10 * (tail length + ceil(head)).
template <class T>
std::size_t default_max_steps(const BlowupVector<T>& v) {
  const std::size_t len = std::max<std::size_t>(v.tail.size(), 3);
  return 10 * (len + static_cast<std::size_t>(scalar::ceil_nonneg(v.head)));
}

/// Applies standard Cremona moves until the first reduced vector.
/// Throws NonTerminationError<T> once `max_steps` moves did not suffice.
template <class T>
ReductionTrace<T> reduce_to_reduced(const BlowupVector<T>& v,
                                    std::optional<std::size_t> max_steps = std::nullopt) {
  detail::require_lattice_basis(v);
  if (scalar::sign(v.head) < 0) throw DomainError("reduction needs a nonnegative head");
  const std::size_t budget = max_steps.value_or(default_max_steps(v));

  ReductionTrace<T> trace;
  trace.initial = v;
  const BlowupVector<T> start = detail::padded(v);
  trace.initial_permutation = ordering(start);
  BlowupVector<T> current = detail::permuted(start, trace.initial_permutation);

  while (!is_reduced(current)) {
    if (trace.steps.size() >= budget) {
      trace.final = current;
      throw NonTerminationError<T>(
          "no reduced vector after " + std::to_string(budget) + " standard Cremona moves",
          std::move(trace));
    }
    ReductionStep<T> step;
    step.defect = defect(current);
    const BlowupVector<T> transformed = cremona_transform(current);
    step.permutation = ordering(transformed);
    BlowupVector<T> next = detail::permuted(transformed, step.permutation);
    step.before = std::move(current);
    trace.steps.push_back(std::move(step));
    current = std::move(next);
  }
  trace.final = std::move(current);
  return trace;
}

/// Re-applies the recorded permutations and transforms to trace.initial.
template <class T>
BlowupVector<T> replay(const ReductionTrace<T>& trace) {
  BlowupVector<T> v = detail::permuted(detail::padded(trace.initial), trace.initial_permutation);
  for (const auto& step : trace.steps) v = detail::permuted(cremona_transform(v), step.permutation);
  return v;
}

/// Reduction at a point: alpha = (mu; a_1, ..., a_n) lies in the closure of the
/// symplectic cone iff alpha^2 >= 0 and the first reduced vector in its
/// standard-move orbit has no negative entry.
template <class T>
Decision method2_decide(const T& mu, const std::vector<T>& a_list,
                        std::optional<std::size_t> max_steps = std::nullopt) {
  if (scalar::sign(mu) < 0) throw DomainError("method 2 needs mu >= 0");
  T square = mu * mu;
  for (const auto& a : a_list) square -= a * a;
  if (scalar::sign(square) < 0) return Decision::does_not_embed;
  const auto trace = reduce_to_reduced(make_vector(mu, a_list), max_steps);
  for (const auto& x : trace.final.tail)
    if (scalar::sign(x) < 0) return Decision::does_not_embed;
  return Decision::embeds;
}

/// "head;t1,t2,..." with trailing zero entries dropped.
template <class T>
std::string format_vector(const BlowupVector<T>& v) {
  std::size_t n = v.tail.size();
  while (n > 0 && scalar::sign(v.tail[n - 1]) == 0) --n;
  std::string out = scalar::str(v.head);
  if (v.basis == Basis::polydisc) out += "," + scalar::str(v.head2);
  out += ';';
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ',';
    out += scalar::str(v.tail[i]);
  }
  return out;
}

/// One line per move, "<defect> <ordered vector before the move>", then
/// "= <final vector>".
template <class T>
std::string format_trace(const ReductionTrace<T>& trace) {
  std::string out;
  for (const auto& step : trace.steps)
    out += scalar::str(step.defect) + " " + format_vector(step.before) + "\n";
  out += "= " + format_vector(trace.final) + "\n";
  return out;
}

/// Parses "head;t1,t2,..." (optionally wrapped in parentheses, spaces
/// ignored) with entries in the exact-number format.
BlowupVector<QuadNum> parse_vector(std::string_view text);

/// Parses the output of format_trace back into (defect, vector) lines and the
/// final vector.
struct ParsedTrace {
  std::vector<std::pair<QuadNum, BlowupVector<QuadNum>>> steps;
  BlowupVector<QuadNum> final;
};
ParsedTrace parse_trace(std::string_view text);

}  // namespace sympstairs
