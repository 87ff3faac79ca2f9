#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sympstairs {

struct CheckLine {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// "name expected got PASS|FAIL"
std::string format_check(const CheckLine& c);

struct VerifyOptions {
  std::optional<long> b;  // restricts b-dependent suites to one value
  long max_n = 30;        // classes: E_n, F_n for n <= max_n
  long max_g = 20;        // classes: G_b for b <= max_g
  long max_den = 12;      // method2: grid denominators
  std::size_t ech_n = 20000;
};

/// weights, classes, edges, method2, equivalence, ech, geometry, alarge.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
std::vector<CheckLine> run_suite(std::string_view suite, const VerifyOptions& opt);

}  // namespace sympstairs
