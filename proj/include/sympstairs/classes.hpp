#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympstairs/cremona.hpp"
#include "sympstairs/quadratic.hpp"
#include "sympstairs/rational.hpp"

namespace sympstairs {

/// A class d*S1 + e*S2 - sum m_i F_i in the blow-up of S^2 x S^2, written
/// (d, e; m). `certified` means it solves the polydisc Diophantine system
///   sum m_i = 2(d+e) - 1,  sum m_i^2 = 2de + 1
/// and its image under psi_* reduces to (0; -1, 0, ..., 0).
struct ExceptionalClass {
  std::string name;
  long d = 0;
  long e = 0;
  std::vector<long> m;  // non-increasing
  bool certified = false;
  std::size_t reduction_steps = 0;
};

bool check_dio_polydisc(long d, long e, std::span<const long> m);

/// sum m_i = 3d - 1, sum m_i^2 = d^2 + 1 over nonnegative entries, or the
/// vector (0; -1, 0, ..., 0) up to permutation.
bool check_dio_ball(long d, std::span<const long> m);

/// psi_*(d, e; m) = (d + e - m1; d - m1, e - m1, m2, ..., m_k), unordered,
/// in the homology basis. Requires m non-increasing.
BlowupVector<long> psi_push(long d, long e, std::span<const long> m);

/// (0; -1, 0, ..., 0) up to permutation of the tail.
bool is_exceptional_terminal(const BlowupVector<long>& v);

struct Certification {
  bool diophantine = false;
  bool reduces = false;
  ReductionTrace<long> trace;

  bool ok() const { return diophantine && reduces; }
};

Certification certify(long d, long e, std::span<const long> m);

/// Builds the class and certifies it; throws InternalInconsistency if the
/// certification fails.
ExceptionalClass make_certified(std::string name, long d, long e, std::vector<long> m);

/// E_n = (n, 1; 1^{x(2n+1)}) for n >= 1, and E_0 = (1, 0; 1).
ExceptionalClass gen_E(long n);
/// F_n = (n(n+1), n+1; n+1, n^{x(2n+3)}), n >= 1.
ExceptionalClass gen_F(long n);
/// G_b = (b(2b+1), 2b+1; (2b)^{x(2b+2)}, 1^{x(2b+1)}), b >= 1.
ExceptionalClass gen_G(long b);

/// mu_b(d,e;m)(a) = <m, w(a)> / (d + b e). b may be any rational >= 1.
Rational obstruction_mu(const ExceptionalClass& c, const Rational& b, const Rational& a);

/// Piecewise form of mu_b(E_{b+k}); domain a >= 2b + 2k, 0 <= k <= floor(sqrt(2b)).
Rational closed_form_mu_E(long b, long k, const Rational& a);
/// Piecewise form of mu_b(F_b); domain a >= 2b + 3.
Rational closed_form_mu_F(long b, const Rational& a);

struct Obstruction {
  std::string class_id;
  Rational value;
};

/// Obstructions of E_0, of E_n for n = floor(b), ..., floor(b + sqrt(2b)), and
/// of F_{bbar} (bbar the integer nearest b, ties down) when
/// b - bbar lies in (-bbar/(bbar+1)^2, 1/(bbar+2)). Requires b >= 2.
std::vector<Obstruction> real_b_obstructions(const Rational& b, const Rational& a);

/// Decomposition m = (d + b e)/sqrt(2ba) * w(a) + eps, evaluated exactly in
/// Q(sqrt(2ba)).
struct ErrorReport {
  Rational h;  // d - b e
  QuadNum eps_inner_w;
  QuadNum eps_norm_sq;
  bool obstructive = false;  // <eps, w(a)> > 0, i.e. mu_b(a) > sqrt(a/2b)
};

ErrorReport error_report(const ExceptionalClass& c, const Rational& b, const Rational& a);

/// All non-increasing positive integer vectors of length <= max_tail solving
/// the polydisc Diophantine system for (d, e), by backtracking with
/// partial-sum pruning. Output is in descending lexicographic order.
std::vector<std::vector<long>> enumerate_dio_solutions(long d, long e, std::size_t max_tail);

/// d1 e2 + d2 e1 - <m1, m2>.
long intersection_product(const ExceptionalClass& x, const ExceptionalClass& y);

/// "d,e:m1 m2 ..."
std::string format_class(const ExceptionalClass& c);
ExceptionalClass parse_class(std::string_view text);

}  // namespace sympstairs
