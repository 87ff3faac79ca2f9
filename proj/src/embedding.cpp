#include "sympstairs/embedding.hpp"

#include <algorithm>

#include "sympstairs/classes.hpp"
#include "sympstairs/errors.hpp"

namespace sympstairs {

namespace {

long kmax_of(long b) { return isqrt(Integer(2 * b)).get_si(); }

void require_b(long b) {
  if (b < 2) throw DomainError("integer b >= 2 required, got " + std::to_string(b));
}

}  // namespace

Rational u_b(long b, long k) { return Rational((2 * b + k) * (2 * b + k), 2 * b); }

Rational v_b(long b, long k) {
  const Rational r(2 * b + 2 * k + 1, 2 * b + k);
  return Rational(2 * b) * r * r;
}

Rational step_length(long b, long k) {
  const Integer bb(b);
  const Integer kk(k);
  const Integer num = (2 * bb - kk * kk) * (8 * bb * bb + kk * kk + (2 + 8 * kk) * bb);
  const Integer den = 2 * bb * (2 * bb + kk) * (2 * bb + kk);
  return Rational(num, den);
}

QuadNum alpha_b(long b) {
  const Rational s(b * b + 2 * b);
  return QuadNum::make(Rational(b + 2), Rational(1, b), s * s - 1);
}

Rational beta_b(long b) { return Rational(2 * b + 4) + Rational(1, 2 * b * (b + 1) * (b + 1)); }

bool at_least_alpha(long b, const Rational& a) {
  const Rational s(b * b + 2 * b);
  const Rational shifted = Rational(b) * a - s;
  return shifted.sign() >= 0 && shifted * shifted >= s * s - 1;
}

StepGeometry step_geometry(long b) {
  require_b(b);
  StepGeometry g;
  g.b = b;
  g.kmax = kmax_of(b);
  for (long k = 0; k <= g.kmax; ++k) {
    g.u.push_back(u_b(b, k));
    g.v.push_back(v_b(b, k));
    g.step_lengths.push_back(step_length(b, k));
  }
  g.alpha = alpha_b(b);
  g.beta = beta_b(b);
  g.gamma = u_b(b, 2);
  g.v_plus = g.v.back();

  const auto fail = [b](const std::string& what) {
    throw InternalInconsistency("step geometry b=" + std::to_string(b) + ": " + what);
  };
  for (long k = 0; k <= g.kmax; ++k) {
    const Rational edge(2 * b + 2 * k + 1);
    const bool square = k * k == 2 * b;
    if (square ? !(g.u[k] == edge && edge == g.v[k]) : !(g.u[k] < edge && edge < g.v[k]))
      fail("u <= 2b+2k+1 <= v fails at k=" + std::to_string(k));
    if (!(g.step_lengths[k] == g.v[k] - g.u[k])) fail("step length mismatch");
  }
  if (!(QuadNum(g.v[1]) < g.alpha && g.alpha < QuadNum(2 * b + 4) && Rational(2 * b + 4) < g.beta &&
        g.beta < g.gamma))
    fail("v(1) < alpha < 2b+4 < beta < u(2) fails");
  if (!(g.v[0] == g.u[1])) fail("I(0) does not touch I(1)");
  return g;
}

std::string branch_name(const CurveSample& s) {
  switch (s.branch) {
    case Branch::nonsqueezing:
      return "nonsqueezing";
    case Branch::linear_step:
      return "linear-step(" + std::to_string(s.k) + ")";
    case Branch::affine_step:
      return "affine-step";
    case Branch::volume:
      return "volume";
  }
  return "volume";
}

CurveSample cb_closed(long b, const Rational& a) {
  require_b(b);
  if (a < 1) throw DomainError("c_b(a) needs a >= 1");
  CurveSample s;
  s.a = a;
  if (a <= 2 * b) {
    s.value = Rational(1);
    s.branch = Branch::nonsqueezing;
    return s;
  }
  const long kmax = kmax_of(b);
  for (long k = 0; k <= kmax; ++k) {
    if (a < u_b(b, k) || a > v_b(b, k)) continue;
    const Rational edge(2 * b + 2 * k + 1);
    s.value = a <= edge ? a / Rational(2 * b + k) : edge / Rational(2 * b + k);
    s.branch = Branch::linear_step;
    s.k = k;
    return s;
  }
  if (at_least_alpha(b, a) && a <= beta_b(b)) {
    s.value = a <= 2 * b + 4 ? (Rational(b) * a + 1) / Rational(2 * b * (b + 1))
                             : 1 + Rational(2 * b + 1, 2 * b * (b + 1));
    s.branch = Branch::affine_step;
    return s;
  }
  s.value = volume_bound(b, a);
  s.branch = Branch::volume;
  return s;
}

QuadNum volume_bound(const Rational& b, const Rational& a) {
  if (b.sign() <= 0 || a.sign() < 0) throw DomainError("volume bound needs b > 0, a >= 0");
  return QuadNum::sqrt(a / (2 * b));
}

Rational folding_bound(const Rational& b, const Rational& a) {
  const Rational den = a + 2 * b - 1;
  if (den.sign() <= 0) throw DomainError("folding bound needs a + 2b > 1");
  return 2 * a / den;
}

QuadNum db_real(const Rational& b, const Rational& a) {
  Rational best(0);
  for (const auto& ob : real_b_obstructions(b, a)) best = max(best, ob.value);
  const QuadNum vol = volume_bound(b, a);
  return vol > QuadNum(best) ? vol : QuadNum(best);
}

QuadNum rescaled_chat(long b, const Rational& a) {
  if (a.sign() < 0) throw DomainError("rescaled c_b needs a >= 0");
  const Rational two_b(2 * b);
  return QuadNum(two_b) * cb_closed(b, a + two_b).value - QuadNum(two_b);
}

Rational c_infty(const Rational& a) {
  if (a.sign() < 0) throw DomainError("c_infty needs a >= 0");
  const Integer k = (a / 2).floor();
  const Rational kk(k);
  if (a <= 2 * kk + 1) return a - kk;
  return kk + 1;
}

Bracket cb_bisect(long b, const Rational& a, const Rational& tol,
                  std::optional<std::size_t> max_steps) {
  require_b(b);
  if (tol.sign() <= 0) throw DomainError("bisection needs tol > 0");
  const Rational vol_sq = a / Rational(2 * b);

  // lo: a rational strictly below the volume constraint, so alpha^2 < 0 there.
  const Integer scale = 1000000;
  Bracket br;
  br.lo = Rational(isqrt(Integer(vol_sq.numerator() * scale * scale / vol_sq.denominator())), scale);
  if (br.lo * br.lo >= vol_sq) br.lo -= Rational(1, 1000000);
  Rational root;
  const Integer ceil_vol = rational_sqrt(vol_sq, root) ? root.ceil() : isqrt(vol_sq.ceil()) + 1;
  br.hi = max(Rational(2), Rational(ceil_vol) + 1);

  const auto decide = [&](const Rational& lambda) {
    ++br.decisions;
    return method2_cb_decide(b, a, lambda, max_steps);
  };
  if (decide(br.lo) != Decision::does_not_embed)
    throw InternalInconsistency("Method 2 embeds below the volume constraint at a=" + a.str());
  if (decide(br.hi) != Decision::embeds)
    throw InternalInconsistency("initial upper bracket " + br.hi.str() + " does not embed at a=" + a.str());

  while (br.hi - br.lo > tol) {
    const Rational third = (br.hi - br.lo) / 3;
    const Rational probe = simplest_between(br.lo + third, br.hi - third);
    if (decide(probe) == Decision::embeds)
      br.hi = probe;
    else
      br.lo = probe;
  }
  return br;
}

}  // namespace sympstairs
