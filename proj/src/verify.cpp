#include "sympstairs/verify.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "sympstairs/classes.hpp"
#include "sympstairs/ech.hpp"
#include "sympstairs/embedding.hpp"
#include "sympstairs/errors.hpp"
#include "sympstairs/parallel.hpp"
#include "sympstairs/weights.hpp"

namespace sympstairs {

std::string format_check(const CheckLine& c) {
  return c.name + " " + c.expected + " " + c.got + " " + (c.pass ? "PASS" : "FAIL");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weights", "classes",  "edges", "method2",
                                              "equivalence", "ech", "geometry", "alarge"};
  return names;
}

namespace {

using Lines = std::vector<CheckLine>;

void expect_eq(Lines& out, std::string name, const std::string& expected, const std::string& got) {
  out.push_back({std::move(name), expected, got, expected == got});
}

void expect_true(Lines& out, std::string name, bool ok, const std::string& got = "") {
  out.push_back({std::move(name), "true", got.empty() ? (ok ? "true" : "false") : got, ok});
}

std::vector<long> b_values(const VerifyOptions& opt, std::vector<long> defaults) {
  if (opt.b) return {*opt.b};
  return defaults;
}

/// Rationals p/q in [lo, hi] with q <= max_den, sorted.
std::vector<Rational> farey_grid(long lo, long hi, long max_den) {
  std::vector<Rational> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = lo * q; p <= hi * q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

/// A rational r >= sqrt(x).
Rational sqrt_upper(const Rational& x) {
  const Integer scale = 1000000;
  return Rational(isqrt(Integer(x.numerator() * scale * scale / x.denominator())) + 1, scale);
}

Lines suite_weights() {
  Lines out;
  const auto w = weight_expansion(Rational(25, 9));
  std::string got;
  for (const auto& blk : w.blocks()) got += blk.weight.str() + "x" + std::to_string(blk.multiplicity) + ";";
  expect_eq(out, "expansion(25/9)", "1x2;7/9x1;2/9x3;1/9x2;", got);
  expect_eq(out, "flat_length(25/9)", "8", std::to_string(flat_length(Rational(25, 9))));
  expect_eq(out, "flat_length(7)", "7", std::to_string(flat_length(7)));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> den(1, 10000);
  long failures = 0;
  constexpr long samples = 1000;
  for (long i = 0; i < samples; ++i) {
    const long q = den(rng);
    std::uniform_int_distribution<long> num(q, 100 * q);
    const Rational a(num(rng), q);
    const auto e = weight_expansion(a);
    Rational s1, s2;
    for (const auto& x : e.flat()) {
      s1 += x;
      s2 += x * x;
    }
    const Rational qa(a.denominator(), Integer(1));
    if (!(s2 == a && s1 == a + 1 - qa.reciprocal() && e.smallest() == qa.reciprocal())) ++failures;
  }
  expect_eq(out, "identities.random", std::to_string(samples), std::to_string(samples - failures));
  return out;
}

Lines suite_classes(const VerifyOptions& opt) {
  Lines out;
  const auto e0 = gen_E(0);
  expect_true(out, "E0.certified", e0.certified);
  for (long n = 1; n <= opt.max_n; ++n) {
    const auto e = gen_E(n);
    expect_eq(out, "E" + std::to_string(n) + ".moves", std::to_string(n), std::to_string(e.reduction_steps));
    const auto f = gen_F(n);
    const long f_moves = n == 1 ? 2 : 2 * n + 1;
    expect_eq(out, "F" + std::to_string(n) + ".moves", std::to_string(f_moves), std::to_string(f.reduction_steps));
  }
  for (long b = 1; b <= opt.max_g; ++b) {
    const auto g = gen_G(b);
    expect_true(out, "G" + std::to_string(b) + ".certified", g.certified);
    expect_eq(out, "G" + std::to_string(b) + ".self", "-1", std::to_string(intersection_product(g, g)));
  }
  return out;
}

Lines suite_edges(const VerifyOptions& opt) {
  Lines out;
  expect_eq(out, "c_2(8)", "17/12", cb_closed(2, 8).value.str());
  expect_eq(out, "c_2(289/36)", "17/12", cb_closed(2, Rational(289, 36)).value.str());
  for (long b : b_values(opt, {2, 3, 4, 5, 6, 7, 8, 9})) {
    const std::string tag = "b=" + std::to_string(b);
    expect_eq(out, "c(2b)." + tag, "1", cb_closed(b, 2 * b).value.str());
    const Rational g_point = Rational(2 * b + 2) + Rational(1, 2 * b);
    const Rational g_value(2 * b + 1, 2 * b);
    expect_eq(out, "c(2b+2+1/2b)." + tag, g_value.str(), cb_closed(b, g_point).value.str());
    expect_eq(out, "mu(G).at(2b+2+1/2b)." + tag, g_value.str(), obstruction_mu(gen_G(b), b, g_point).str());
    expect_eq(out, "method2(2b+2+1/2b)." + tag, "Embeds", to_string(method2_cb_decide(b, g_point, g_value)));

    const long kmax = isqrt(Integer(2 * b)).get_si();
    for (long k = 0; k <= kmax; ++k) {
      const Rational a(2 * b + 2 * k + 1);
      const Rational c(2 * b + 2 * k + 1, 2 * b + k);
      const std::string ktag = tag + ",k=" + std::to_string(k);
      expect_eq(out, "c(2b+2k+1)." + ktag, c.str(), cb_closed(b, a).value.str());
      expect_eq(out, "folding(2b+2k+1)." + ktag, c.str(), folding_bound(b, a).str());
      expect_eq(out, "method2.at." + ktag, "Embeds", to_string(method2_cb_decide(b, a, c)));
      expect_eq(out, "method2.below." + ktag, "DoesNotEmbed",
                to_string(method2_cb_decide(b, a, c - Rational(1, 1000000))));
    }
  }
  return out;
}

Lines suite_method2(const VerifyOptions& opt) {
  Lines out;
  for (long b : b_values(opt, {2, 3})) {
    const auto grid = farey_grid(1, 2 * b + 12, opt.max_den);
    struct Result {
      bool at = false;
      bool below = true;
      std::string a;
    };
    const auto results = parallel_map(grid, [b](const Rational& a) {
      Result r;
      r.a = a.str();
      const auto s = cb_closed(b, a);
      if (s.value.is_rational()) {
        const Rational c = s.value.rational_part();
        r.at = method2_cb_decide(b, a, c) == Decision::embeds;
        const Rational vol_up = sqrt_upper(a / Rational(2 * b));
        const Rational ceiling = c - Rational(1, 1000000);
        if (vol_up < ceiling) {
          for (const Rational& lam : {ceiling - Rational(1, 1000000000), simplest_between(vol_up, ceiling - Rational(1, 1000000000))})
            if (method2_cb_decide(b, a, lam) != Decision::does_not_embed) r.below = false;
        }
      } else {
        r.at = method2_cb_decide(b, a, s.value) == Decision::embeds;
      }
      return r;
    });
    long at_ok = 0, below_ok = 0;
    for (const auto& r : results) {
      at_ok += r.at;
      below_ok += r.below;
      if (!r.at) expect_true(out, "method2.at.b=" + std::to_string(b) + ",a=" + r.a, false);
      if (!r.below) expect_true(out, "method2.below.b=" + std::to_string(b) + ",a=" + r.a, false);
    }
    const std::string n = std::to_string(grid.size());
    expect_eq(out, "method2.at.b=" + std::to_string(b), n, std::to_string(at_ok));
    expect_eq(out, "method2.below.b=" + std::to_string(b), n, std::to_string(below_ok));
  }
  return out;
}

Lines suite_equivalence(const VerifyOptions& opt) {
  Lines out;
  for (long b : b_values(opt, {2, 3, 4, 5, 6})) {
    const std::vector<Rational> as{Rational(2 * b), Rational(2 * b + 1), Rational(25, 9), Rational(7),
                                   Rational(2 * b + 2) + Rational(1, 2 * b), Rational(2 * b + 4),
                                   Rational(11), Rational(100, 7), Rational(31, 3), Rational(40)};
    for (std::size_t i = 0; i < as.size(); ++i) {
      const Rational& a = as[i];
      const QuadNum c = cb_closed(b, a).value;
      const std::string name = "chain.b=" + std::to_string(b) + ",a=" + a.str();
      if (c >= QuadNum(1))
        expect_true(out, name + ",lambda=c", equivalence_chain(b, a, c));
      expect_true(out, name + ",lambda=" + Rational(3 + long(i), 2).str(),
                  equivalence_chain(b, a, Rational(3 + long(i), 2)));
    }
  }
  return out;
}

Lines suite_ech(const VerifyOptions& opt) {
  Lines out;
  std::string seq;
  for (const auto& v : ech_sequence(1, 10).values) seq += v.str() + ",";
  expect_eq(out, "ech(E(1,1))", "1,1,2,2,2,3,3,3,3,4,", seq);
  for (long b : b_values(opt, {2, 3})) {
    std::vector<Rational> edges{Rational(2 * b + 4)};
    for (long k = 0; k <= isqrt(Integer(2 * b)).get_si(); ++k) edges.emplace_back(2 * b + 2 * k + 1);
    const auto bounds = parallel_map(edges, [&](const Rational& a) { return ech_lower_bound_at(b, a, opt.ech_n); });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const QuadNum c = cb_closed(b, edges[i]).value;
      const QuadNum e(bounds[i].value);
      const bool ok = e <= c && c - e <= QuadNum(Rational(1, 100));
      out.push_back({"ech.b=" + std::to_string(b) + ",a=" + edges[i].str(), c.str(),
                     bounds[i].value.str() + "@k=" + std::to_string(bounds[i].k), ok});
    }
  }
  return out;
}

Lines suite_geometry() {
  Lines out;
  long built = 0;
  for (long b = 2; b <= 50; ++b) {
    step_geometry(b);
    ++built;
  }
  expect_eq(out, "step_geometry.b=2..50", "49", std::to_string(built));
  bool mono0 = true, mono1 = true;
  Rational prev0 = step_length(2, 0);
  std::vector<Rational> prev_k;
  for (long b = 3; b <= 1000; ++b) {
    const Rational l0 = step_length(b, 0);
    if (!(l0 < prev0 && l0 > 2)) mono0 = false;
    prev0 = l0;
    const long kmax = isqrt(Integer(2 * b)).get_si();
    for (long k = 1; k <= kmax; ++k) {
      if (k * k == 2 * b) continue;
      const Rational lk = step_length(b, k);
      if (!(lk < 2)) mono1 = false;
      if (k * k < 2 * (b - 1) && !(step_length(b - 1, k) < lk)) mono1 = false;
    }
  }
  expect_true(out, "l_b(0).decreasing_to_2", mono0);
  expect_true(out, "l_b(k>=1).increasing_to_2", mono1);
  expect_eq(out, "u_2(2)", "9", u_b(2, 2).str());
  expect_eq(out, "beta_2", "289/36", beta_b(2).str());
  return out;
}

Lines suite_alarge(const VerifyOptions& opt) {
  Lines out;
  for (long b : b_values(opt, {2, 3, 4})) {
    // (sqrt(2b) + 1)^2 = 2b + 1 + 2 sqrt(2b)
    const QuadNum start = QuadNum(2 * b + 1) + QuadNum::make(0, 2, 2 * b);
    std::vector<Rational> as;
    const Rational a(static_cast<long>(std::ceil(start.to_double())));
    for (long j = 0; j < 20; ++j) as.push_back(a + Rational(7 * j, 3));
    long checked = 0, violations = 0;
    const long dmax_extra = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(b))));
    for (long e = 0; e <= 5; ++e) {
      for (long d = 0; d <= b * e + dmax_extra; ++d) {
        const auto sols = enumerate_dio_solutions(d, e, static_cast<std::size_t>(std::max(1L, 2 * (d + e) - 1)));
        for (const auto& m : sols) {
          const ExceptionalClass c{"", d, e, m, false, 0};
          for (const auto& x : as) {
            ++checked;
            const Rational mu = obstruction_mu(c, b, x);
            if (mu * mu > x / Rational(2 * b)) ++violations;
          }
        }
      }
    }
    expect_eq(out, "alarge.violations.b=" + std::to_string(b), "0", std::to_string(violations));
    expect_true(out, "alarge.checked.b=" + std::to_string(b), checked > 0, std::to_string(checked));
  }
  if (!opt.b || *opt.b == 2) {
    long ok = 0, total = 0;
    const Rational lo(289, 36);
    for (long j = 0; j <= 36; ++j) {
      const Rational a = lo + (Rational(9) - lo) * Rational(j, 36);
      ++total;
      const auto s = cb_closed(2, a);
      const bool vol = s.value == volume_bound(2, a);
      const bool embeds = method2_cb_decide(2, a, s.value) == Decision::embeds;
      if (vol && embeds) ++ok;
    }
    expect_eq(out, "alarge.b=2.[289/36,9]", std::to_string(total), std::to_string(ok));
  }
  return out;
}

}  // namespace

std::vector<CheckLine> run_suite(std::string_view suite, const VerifyOptions& opt) {
  if (suite == "weights") return suite_weights();
  if (suite == "classes") return suite_classes(opt);
  if (suite == "edges") return suite_edges(opt);
  if (suite == "method2") return suite_method2(opt);
  if (suite == "equivalence") return suite_equivalence(opt);
  if (suite == "ech") return suite_ech(opt);
  if (suite == "geometry") return suite_geometry();
  if (suite == "alarge") return suite_alarge(opt);
  throw DomainError("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace sympstairs
