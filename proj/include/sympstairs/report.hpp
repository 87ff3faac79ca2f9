#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sympstairs/rational.hpp"

namespace sympstairs {

/// samples >= 2 equally spaced rationals from lo to hi inclusive.
std::vector<Rational> a_grid(const Rational& lo, const Rational& hi, std::size_t samples);

/// Rational breakpoints of c_b inside [lo, hi]: 2b, u_b(k), 2b+2k+1, v_b(k),
/// 2b+4 and beta_b.
std::vector<Rational> rational_breakpoints(long b, const Rational& lo, const Rational& hi);

/// Sorted union without duplicates.
std::vector<Rational> merge_grid(std::vector<Rational> x, const std::vector<Rational>& y);

/// Header plus one row per grid point:
///   a_num,a_den,branch,value_exact,value_float,volume_float,folding_float
/// Floats use %.15g.
std::string curve_csv(long b, const std::vector<Rational>& grid);

struct Overlays {
  bool closed = false;
  bool volume = false;
  bool folding = false;
  bool db_real = false;
  bool rescaled = false;
  std::optional<std::size_t> ech;  // N
};

struct PlotSpec {
  Rational b;
  Rational lo;
  Rational hi;
  std::size_t samples = 200;
  Overlays overlays;
};

/// Hand-written SVG: one polyline per overlay (volume only when no overlay is
/// selected) and circle markers at u_b(k), v_b(k), alpha_b, beta_b for
/// integer b. Throws DomainError if an overlay needs an integer b.
std::string render_svg(const PlotSpec& spec);

/// Scan rows:
///   b,a,db_real_exact,db_real_float,ech_lower_exact,ech_lower_float,consistent
/// `consistent` is 0 when the ECH lower bound exceeds d_b(a).
struct ScanResult {
  std::string csv;
  std::size_t inconsistencies = 0;
};
ScanResult scan_conjecture(const std::vector<Rational>& b_list, const std::vector<Rational>& grid,
                           std::size_t ech_n);

std::string format_float(double x);

}  // namespace sympstairs
