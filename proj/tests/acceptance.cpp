// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sympstairs/classes.hpp"
#include "sympstairs/ech.hpp"
#include "sympstairs/embedding.hpp"
#include "sympstairs/parallel.hpp"
#include "sympstairs/report.hpp"
#include "sympstairs/weights.hpp"

#ifndef SYMPSTAIRS_GOLDEN_DIR
#error "SYMPSTAIRS_GOLDEN_DIR must point at tests/golden"
#endif

using namespace sympstairs;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

std::vector<Rational> farey(long lo, long hi, long max_den) {
  std::vector<Rational> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = lo * q; p <= hi * q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

// A rational >= sqrt(x).
Rational sqrt_upper(const Rational& x) {
  const Integer scale = 1000000000;
  return Rational(isqrt(Integer(x.numerator() * scale * scale / x.denominator())) + 1, scale);
}

long kmax(long b) { return isqrt(Integer(2 * b)).get_si(); }

// ---------------------------------------------------------------------------

Outcome weight_identities() {
  Outcome o;
  const auto w = weight_expansion(Rational(25, 9));
  std::ostringstream got;
  for (const auto& blk : w.blocks()) got << blk.weight.str() << "^" << blk.multiplicity << " ";
  o.require(got.str() == "1^2 7/9^1 2/9^3 1/9^2 ", "25/9 expansion: " + got.str());

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> den(1, 10000);
  for (int i = 0; i < 1000; ++i) {
    const long q0 = den(rng);
    std::uniform_int_distribution<long> num(q0, 100 * q0);
    const Rational a(num(rng), q0);
    const long p = a.numerator().get_si(), q = a.denominator().get_si();
    const auto e = weight_expansion(a);
    Rational s1, s2;
    for (const auto& x : e.flat()) {
      s1 += x;
      s2 += x * x;
    }
    o.require(s2 == a, "sum w^2 != a at " + a.str());
    o.require(s1 == a + 1 - Rational(1, q), "sum w != a+1-1/q at " + a.str());
    o.require(e.flat() == oracle::flat_weights(p, q), "flat weights differ from oracle at " + a.str());
  }
  o.detail = "1000 random a, 25/9 verbatim";
  return o;
}

Outcome family_certification() {
  Outcome o;
  const auto sums = [](const ExceptionalClass& c) {
    long s = 0, s2 = 0;
    for (long x : c.m) {
      s += x;
      s2 += x * x;
    }
    return s == 2 * (c.d + c.e) - 1 && s2 == 2 * c.d * c.e + 1;
  };
  const auto terminal = [](const BlowupVector<long>& v) {
    return v.head == 0 && std::count(v.tail.begin(), v.tail.end(), -1L) == 1 &&
           std::count(v.tail.begin(), v.tail.end(), 0L) == static_cast<long>(v.tail.size()) - 1;
  };
  for (long n = 1; n <= 30; ++n) {
    const ExceptionalClass e{"E", n, 1, std::vector<long>(2 * n + 1, 1), false, 0};
    std::vector<long> fm{n + 1};
    fm.insert(fm.end(), 2 * n + 3, n);
    const ExceptionalClass f{"F", n * (n + 1), n + 1, fm, false, 0};
    for (const auto& [c, moves] : {std::pair{e, n}, std::pair{f, n == 1 ? 2 : n + 1 + n}}) {
      const std::string tag = c.name + std::to_string(n);
      o.require(sums(c), tag + " Diophantine");
      const auto t = reduce_to_reduced(psi_push(c.d, c.e, c.m));
      o.require(terminal(t.final), tag + " does not reduce to (0;-1)");
      o.require(t.step_count() == static_cast<std::size_t>(moves),
                tag + " took " + std::to_string(t.step_count()) + " moves");
    }
    o.require(gen_E(n).m == e.m && gen_F(n).m == f.m, "generator mismatch at n=" + std::to_string(n));
  }
  for (long b = 1; b <= 20; ++b) {
    std::vector<long> gm(2 * b + 2, 2 * b);
    gm.insert(gm.end(), 2 * b + 1, 1);
    const ExceptionalClass g{"G", b * (2 * b + 1), 2 * b + 1, gm, false, 0};
    o.require(sums(g), "G" + std::to_string(b) + " Diophantine");
    o.require(terminal(reduce_to_reduced(psi_push(g.d, g.e, g.m)).final), "G" + std::to_string(b) + " reduction");
  }
  o.detail = "E_n, F_n for n <= 30, G_b for b <= 20";
  return o;
}

Outcome spot_values() {
  Outcome o;
  const auto eq = [&](const QuadNum& got, const Rational& want, const std::string& what) {
    o.require(got == QuadNum(want), what + " = " + got.str() + ", expected " + want.str());
  };
  eq(cb_closed(2, 8).value, Rational(17, 12), "c_2(8)");
  eq(cb_closed(2, Rational(289, 36)).value, Rational(17, 12), "c_2(8+1/36)");
  for (long b = 2; b <= 9; ++b) {
    const std::string tag = "b=" + std::to_string(b);
    eq(cb_closed(b, 2 * b).value, Rational(1), "c_b(2b) " + tag);
    const Rational g_point = Rational(2 * b + 2) + Rational(1, 2 * b);
    eq(cb_closed(b, g_point).value, Rational(2 * b + 1, 2 * b), "c_b(2b+2+1/2b) " + tag);
    std::vector<long> gm(2 * b + 2, 2 * b);
    gm.insert(gm.end(), 2 * b + 1, 1);
    const ExceptionalClass g{"G", b * (2 * b + 1), 2 * b + 1, gm, false, 0};
    o.require(obstruction_mu(g, b, g_point) == Rational(2 * b + 1, 2 * b), "mu_b(G_b) " + tag);
    for (long k = 0; k <= kmax(b); ++k)
      eq(cb_closed(b, 2 * b + 2 * k + 1).value, Rational(2 * b + 2 * k + 1, 2 * b + k),
         "c_b(2b+2k+1) " + tag + ",k=" + std::to_string(k));
  }
  o.detail = "b = 2..9, all k";
  return o;
}

Outcome method2_sweep() {
  Outcome o;
  long points = 0, below_checks = 0;
  for (long b : {2L, 3L}) {
    const auto grid = farey(1, 2 * b + 12, 12);
    struct Result {
      std::vector<std::string> bad;
      long below = 0;
    };
    const auto results = parallel_map(grid, [b](const Rational& a) {
      Result r;
      const std::string tag = "b=" + std::to_string(b) + ",a=" + a.str();
      const QuadNum c = cb_closed(b, a).value;
      if (method2_cb_decide(b, a, c) != Decision::embeds) r.bad.push_back(tag + ": no embedding at c=" + c.str());
      if (!c.is_rational()) return r;
      const Rational cr = c.rational_part();
      const Rational vol_sq = a / Rational(2 * b);
      const Rational ceiling = cr - Rational(1, 1000000) - Rational(1, 1000000000000L);
      std::vector<Rational> lams;
      Rational root;
      if (rational_sqrt(vol_sq, root)) lams.push_back(root);
      const Rational vol_up = sqrt_upper(vol_sq);
      lams.push_back(vol_up);
      lams.push_back(ceiling);
      if (vol_up <= ceiling) lams.push_back(simplest_between(vol_up, ceiling));
      lams.push_back((vol_up + ceiling) / 2);
      for (const auto& lam : lams) {
        if (lam * lam < vol_sq || lam > ceiling) continue;
        ++r.below;
        if (method2_cb_decide(b, a, lam) != Decision::does_not_embed)
          r.bad.push_back(tag + ": embeds at " + lam.str() + " < c - 1e-6");
      }
      return r;
    });
    points += static_cast<long>(grid.size());
    for (const auto& r : results) {
      below_checks += r.below;
      for (const auto& s : r.bad) o.require(false, s);
    }
  }
  o.detail = std::to_string(points) + " points, " + std::to_string(below_checks) + " sub-threshold decisions";
  return o;
}

Outcome ech_bounds() {
  Outcome o;
  constexpr std::size_t n = 20000;
  long samples = 0;
  for (long b : {2L, 3L}) {
    std::vector<Rational> tight{Rational(2 * b + 4)};
    for (long k = 0; k <= kmax(b); ++k) tight.emplace_back(2 * b + 2 * k + 1);
    std::vector<Rational> as = tight;
    for (long j = 0; as.size() < 50; ++j) as.push_back(Rational(1) + Rational(j * (2 * b + 11), 47));
    const auto bounds = parallel_map(as, [b](const Rational& a) { return ech_lower_bound(b, a, n); });
    for (std::size_t i = 0; i < as.size(); ++i) {
      const QuadNum c = cb_closed(b, as[i]).value;
      const std::string tag = "b=" + std::to_string(b) + ",a=" + as[i].str();
      o.require(QuadNum(bounds[i]) <= c, tag + ": ECH bound " + bounds[i].str() + " exceeds " + c.str());
      if (i < tight.size())
        o.require(c - QuadNum(bounds[i]) <= QuadNum(Rational(1, 100)), tag + ": ECH bound " + bounds[i].str() + " not within 1e-2");
    }
    samples += static_cast<long>(as.size());
  }
  o.detail = std::to_string(samples) + " samples, N = 20000";
  return o;
}

Outcome step_geometry_checks() {
  Outcome o;
  for (long b = 2; b <= 50; ++b) {
    const Rational bb(b);
    const auto u = [&](long k) { return Rational((2 * b + k) * (2 * b + k), 2 * b); };
    const auto v = [&](long k) {
      const Rational r(2 * b + 2 * k + 1, 2 * b + k);
      return 2 * bb * r * r;
    };
    const Rational s = bb * bb + 2 * bb;
    const QuadNum alpha = QuadNum::make(s / bb, Rational(1) / bb, s * s - 1);
    const Rational beta = 2 * bb + 4 + Rational(1) / (2 * bb * (bb + 1) * (bb + 1));
    const std::string tag = "b=" + std::to_string(b);
    o.require(QuadNum(v(1)) < alpha, tag + ": v(1) < alpha");
    o.require(alpha < QuadNum(2 * b + 4), tag + ": alpha < 2b+4");
    o.require(Rational(2 * b + 4) < beta, tag + ": 2b+4 < beta");
    o.require(beta < u(2), tag + ": beta < u(2)");
    for (long k = 0; k <= kmax(b); ++k) {
      const Rational edge(2 * b + 2 * k + 1);
      const bool square = k * k == 2 * b;
      o.require(u(k) <= edge && edge <= v(k), tag + ": u <= edge <= v");
      o.require((u(k) == edge) == square && (edge == v(k)) == square, tag + ": equality iff k^2 = 2b");
    }
    // library agrees with the formulas
    const auto g = step_geometry(b);
    o.require(g.alpha == alpha && g.beta == beta && g.u[1] == u(1) && g.v[1] == v(1), tag + ": library geometry");
  }
  const auto ell = [](long b, long k) {
    const Rational r(2 * b + 2 * k + 1, 2 * b + k);
    return Rational(2 * b) * r * r - Rational((2 * b + k) * (2 * b + k), 2 * b);
  };
  for (long b = 3; b <= 1000; ++b) {
    o.require(ell(b, 0) < ell(b - 1, 0) && ell(b, 0) > 2, "l_b(0) not decreasing to 2 at b=" + std::to_string(b));
    for (long k = 1; k * k < 2 * (b - 1); ++k) {
      o.require(ell(b, k) > ell(b - 1, k) && ell(b, k) < 2,
                "l_b(" + std::to_string(k) + ") not increasing to 2 at b=" + std::to_string(b));
      o.require(step_length(b, k) == ell(b, k), "step_length formula at b=" + std::to_string(b));
    }
  }
  o.detail = "b = 2..50, lengths to b = 1000";
  return o;
}

Outcome large_a() {
  Outcome o;
  long pairs = 0, classes = 0, certified = 0;
  const auto check_classes = [&](long b, long emax, long dextra, const std::vector<Rational>& as) {
    for (long e = 0; e <= emax; ++e)
      for (long d = 0; d <= b * e + dextra; ++d)
        for (const auto& m : enumerate_dio_solutions(d, e, static_cast<std::size_t>(std::max(1L, 2 * (d + e) - 1)))) {
          ++classes;
          const ExceptionalClass c{"", d, e, m, false, 0};
          if (certify(d, e, m).ok()) ++certified;
          for (const auto& a : as) {
            ++pairs;
            const Rational mu = obstruction_mu(c, b, a);
            o.require(mu * mu <= a / Rational(2 * b), "b=" + std::to_string(b) + ": " + format_class(c) +
                                                          " obstructs at a=" + a.str());
          }
        }
  };
  for (long b : {2L, 3L, 4L}) {
    // first integer above (sqrt(2b)+1)^2, then steps of 7/3
    const QuadNum start = QuadNum(2 * b + 1) + QuadNum::make(0, 2, 2 * b);
    Rational a0(static_cast<long>(std::ceil(start.to_double())));
    o.require(QuadNum(a0) >= start, "start point");
    std::vector<Rational> as;
    for (long j = 0; j < 20; ++j) as.push_back(a0 + Rational(7 * j, 3));
    const long dextra = static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(b))));
    check_classes(b, 5, dextra, as);
    for (const auto& a : as)
      o.require(cb_closed(b, a).value == volume_bound(b, a), "closed form not on volume at b=" + std::to_string(b));
  }
  std::vector<Rational> interval;
  for (long j = 0; j <= 36; ++j) interval.push_back(Rational(289, 36) + Rational(35, 36) * Rational(j, 36));
  check_classes(2, 5, 2, interval);
  for (const auto& a : interval) {
    o.require(cb_closed(2, a).value == volume_bound(2, a), "b=2 closed form off volume at " + a.str());
    o.require(method2_cb_decide(2, a, volume_bound(2, a)) == Decision::embeds, "b=2 no embedding at volume, a=" + a.str());
  }
  o.detail = std::to_string(classes) + " Diophantine solutions (" + std::to_string(certified) + " certified), " +
             std::to_string(pairs) + " (class, a) pairs";
  return o;
}

Outcome equivalence() {
  Outcome o;
  long runs = 0;
  for (long b = 2; b <= 6; ++b) {
    const std::vector<Rational> as{Rational(2 * b),    Rational(2 * b + 1), Rational(25, 9), Rational(2 * b + 3),
                                   Rational(2 * b + 2) + Rational(1, 2 * b), Rational(2 * b + 4), Rational(100, 7),
                                   Rational(31, 3),   Rational(61, 5),     Rational(40)};
    for (std::size_t i = 0; i < as.size(); ++i) {
      const QuadNum c = cb_closed(b, as[i]).value;
      const std::string tag = "b=" + std::to_string(b) + ",a=" + as[i].str();
      if (i % 2 == 0 && c >= QuadNum(1)) {
        o.require(equivalence_chain(b, as[i], c), tag + ",lambda=" + c.str());
      } else {
        const Rational lam = Rational(1) + Rational(static_cast<long>(i), 3);
        o.require(equivalence_chain(b, as[i], lam), tag + ",lambda=" + lam.str());
      }
      ++runs;
    }
  }
  o.detail = std::to_string(runs) + " (b, a, lambda) triples";
  return o;
}

Outcome folding_and_limit() {
  Outcome o;
  for (long b = 2; b <= 50; ++b)
    for (long k = 0; k <= kmax(b); ++k) {
      const Rational a(2 * b + 2 * k + 1);
      o.require(cb_closed(b, a).value == QuadNum(folding_bound(b, a)),
                "folding at edge b=" + std::to_string(b) + ",k=" + std::to_string(k));
    }
  std::vector<Rational> grid;
  for (long j = 0; j <= 160; ++j) grid.emplace_back(j, 8);
  const std::vector<long> bs{2, 3, 5, 10, 20, 50, 100, 200, 500};
  std::vector<std::vector<QuadNum>> gaps;
  for (long b : bs)
    gaps.push_back(parallel_map(grid, [b](const Rational& a) { return QuadNum(c_infty(a)) - rescaled_chat(b, a); }));
  double worst = 0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const QuadNum& g500 = gaps.back()[j];
    o.require(g500 <= QuadNum(Rational(1, 10)), "gap at b=500, a=" + grid[j].str() + " is " + g500.str());
    worst = std::max(worst, g500.to_double());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      o.require(gaps[i][j].sign() >= 0, "c_hat above c_infty at b=" + std::to_string(bs[i]) + ", a=" + grid[j].str());
      if (i > 0)
        o.require(oracle::compare_mixed(gaps[i][j], gaps[i - 1][j]) <= 0,
                  "gap grows from b=" + std::to_string(bs[i - 1]) + " to b=" + std::to_string(bs[i]) +
                      " at a=" + grid[j].str());
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max gap at b=500: %.4f", worst);
  o.detail = buf;
  return o;
}

Outcome golden_regression() {
  Outcome o;
  struct Golden {
    const char* file;
    long b;
    long lo, hi;
    std::size_t samples;
  };
  const std::vector<Golden> goldens{{"b2_a1-10.csv", 2, 1, 10, 181},
                                    {"b9_a1-30.csv", 9, 1, 30, 291},
                                    {"b5_a9-20.csv", 5, 9, 20, 221}};
  for (const auto& g : goldens) {
    const auto grid = merge_grid(a_grid(g.lo, g.hi, g.samples), rational_breakpoints(g.b, g.lo, g.hi));
    const std::string first = curve_csv(g.b, grid);
    const std::string second = curve_csv(g.b, grid);
    o.require(first == second, std::string(g.file) + ": output differs between runs");
    std::ifstream in(std::string(SYMPSTAIRS_GOLDEN_DIR) + "/" + g.file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    o.require(in.good() || in.eof(), std::string(g.file) + ": missing");
    o.require(ss.str() == first, std::string(g.file) + ": differs from golden file");
  }
  o.detail = "3 golden CSVs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "weight-identities", 5, weight_identities},
      {2, "family-certification", 30, family_certification},
      {3, "closed-form-spot-values", 60, spot_values},
      {4, "method2-sweep", 600, method2_sweep},
      {5, "ech-lower-bounds", 300, ech_bounds},
      {6, "step-geometry", 60, step_geometry_checks},
      {7, "large-a-volume", 300, large_a},
      {8, "equivalence-chain", 60, equivalence},
      {9, "folding-and-limit", 120, folding_and_limit},
      {10, "golden-regression", 60, golden_regression},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      out.pass = false;
      out.failures.push_back("runtime above " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << " " << c.name << " " << (out.pass ? "PASS" : "FAIL") << " (" << out.detail
              << "; " << timing << ")\n";
    for (const auto& f : out.failures) std::cout << "    " << f << "\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
