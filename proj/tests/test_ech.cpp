#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sympstairs/ech.hpp"
#include "sympstairs/embedding.hpp"
#include "sympstairs/errors.hpp"

using namespace sympstairs;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("ech") {
  TEST_CASE("sequences") {
    CHECK(ech_sequence(1, 10).values == ints({1, 1, 2, 2, 2, 3, 3, 3, 3, 4}));
    CHECK(ech_sequence(2, 6).values == ints({1, 2, 2, 3, 3, 4}));
    CHECK(ech_sequence(1, 1).values == ints({1}));
    CHECK_THROWS_AS(ech_sequence(Rational(1, 2), 3), DomainError);
    CHECK_THROWS_AS(ech_sequence(1, 0), DomainError);
  }

  TEST_CASE("sequences against brute force") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> den(1, 50);
    for (int i = 0; i < 20; ++i) {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(q, 12 * q);
      const Rational a(num(rng), q);
      CHECK(ech_sequence(a, 1000).values == oracle::ech_bruteforce(a, 1000));
    }
  }

  TEST_CASE("lower bounds") {
    CHECK(ech_lower_bound(2, 7, 1000) == Rational(7, 5));
    CHECK(ech_lower_bound(2, 4, 10) == 1);
    const Rational e = ech_lower_bound(2, 8, 10000);
    CHECK(e <= Rational(17, 12));
    CHECK(e >= Rational(17, 12) - Rational(1, 100));
  }

  TEST_CASE("monotone in N and below the closed form") {
    for (long b = 2; b <= 4; ++b)
      for (long j = 0; j < 12; ++j) {
        const Rational a = Rational(1) + Rational(j * 13, 7);
        Rational prev(0);
        for (std::size_t n : {10u, 100u, 1000u, 3000u}) {
          const Rational e = ech_lower_bound(b, a, n);
          CHECK(e >= prev);
          CHECK(QuadNum(e) <= cb_closed(b, a).value);
          prev = e;
        }
      }
  }

  TEST_CASE("polydisc sequences") {
    // P(1,1): 1, 2, 2, 3, 3, 4, 4, 4, ...
    CHECK(polydisc_ech_sequence(1, 8).values == ints({1, 2, 2, 3, 3, 4, 4, 4}));
    for (const Rational b : {Rational(1), Rational(2), Rational(5, 2), Rational(13, 2), Rational(17, 7)})
      CHECK(polydisc_ech_sequence(b, 150).values == oracle::polydisc_bruteforce(b, 150));
    CHECK_THROWS_AS(polydisc_ech_sequence(Rational(1, 2), 3), DomainError);
  }

  TEST_CASE("polydisc bound is valid at integer b") {
    for (long b = 2; b <= 4; ++b) {
      const auto domain = polydisc_ech_sequence(b, 3000);
      for (long j = 0; j < 12; ++j) {
        const Rational a = Rational(1) + Rational(j * 13, 7);
        const auto target = ech_sequence(a, 3000);
        for (std::size_t k = 0; k < 3000; ++k)
          CHECK(QuadNum(target.values[k] / domain.values[k]) <= cb_closed(b, a).value);
      }
    }
  }

  TEST_CASE("non-integer b uses the polydisc") {
    // E(1,5) would give 10/7 at a = 10, above d_b = sqrt(2)
    const Rational e = ech_lower_bound(Rational(5, 2), 10, 2000);
    CHECK(QuadNum(e) <= db_real(Rational(5, 2), 10));
  }
}
