#include "sympstairs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sympstairs/ech.hpp"
#include "sympstairs/embedding.hpp"
#include "sympstairs/errors.hpp"
#include "sympstairs/parallel.hpp"

namespace sympstairs {

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace {

std::string coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

long integer_b(const Rational& b, const char* what) {
  if (!b.is_integer()) throw DomainError(std::string(what) + " needs an integer b");
  return b.numerator().get_si();
}

}  // namespace

std::vector<Rational> a_grid(const Rational& lo, const Rational& hi, std::size_t samples) {
  if (samples < 2) throw DomainError("a grid needs at least 2 samples");
  if (hi < lo) throw DomainError("a grid needs lo <= hi");
  std::vector<Rational> out;
  out.reserve(samples);
  const Rational step = (hi - lo) / Rational(static_cast<long>(samples - 1));
  for (std::size_t i = 0; i < samples; ++i) out.push_back(lo + Rational(static_cast<long>(i)) * step);
  return out;
}

std::vector<Rational> rational_breakpoints(long b, const Rational& lo, const Rational& hi) {
  const auto g = step_geometry(b);
  std::vector<Rational> pts{Rational(2 * b), Rational(2 * b + 4), g.beta};
  for (long k = 0; k <= g.kmax; ++k) {
    pts.push_back(g.u[k]);
    pts.push_back(Rational(2 * b + 2 * k + 1));
    pts.push_back(g.v[k]);
  }
  std::vector<Rational> out;
  for (const auto& p : pts)
    if (lo <= p && p <= hi) out.push_back(p);
  return merge_grid(std::move(out), {});
}

std::vector<Rational> merge_grid(std::vector<Rational> x, const std::vector<Rational>& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

std::string curve_csv(long b, const std::vector<Rational>& grid) {
  const auto rows = parallel_map(grid, [b](const Rational& a) {
    const auto s = cb_closed(b, a);
    return a.numerator().get_str() + "," + a.denominator().get_str() + "," + branch_name(s) + "," +
           s.value.str() + "," + format_float(s.value.to_double()) + "," +
           format_float(volume_bound(b, a).to_double()) + "," +
           format_float(folding_bound(b, a).to_double()) + "\n";
  });
  std::string out = "a_num,a_den,branch,value_exact,value_float,volume_float,folding_float\n";
  for (const auto& r : rows) out += r;
  return out;
}

std::string render_svg(const PlotSpec& spec) {
  const auto grid = a_grid(spec.lo, spec.hi, spec.samples);
  Overlays ov = spec.overlays;
  if (!ov.closed && !ov.volume && !ov.folding && !ov.db_real && !ov.rescaled && !ov.ech) ov.volume = true;

  struct Series {
    std::string name;
    std::string color;
    std::vector<double> y;
  };
  std::vector<Series> series;
  const auto add = [&](std::string name, std::string color, auto fn) {
    series.push_back({std::move(name), std::move(color), parallel_map(grid, fn)});
  };

  if (ov.volume)
    add("volume", "#888888", [&](const Rational& a) { return volume_bound(spec.b, a).to_double(); });
  if (ov.folding)
    add("folding", "#2a7fff", [&](const Rational& a) { return folding_bound(spec.b, a).to_double(); });
  if (ov.closed) {
    const long b = integer_b(spec.b, "closed-form overlay");
    add("closed", "#d62728", [b](const Rational& a) { return cb_closed(b, a).value.to_double(); });
  }
  if (ov.db_real)
    add("db_real", "#9467bd", [&](const Rational& a) { return db_real(spec.b, a).to_double(); });
  if (ov.ech) {
    const CapacitySequence domain = ech_domain(spec.b, *ov.ech);
    add("ech", "#2ca02c", [&](const Rational& a) { return ech_lower_bound_against(domain, a).value.to_double(); });
  }
  if (ov.rescaled) {
    const long b = integer_b(spec.b, "rescaled overlay");
    add("rescaled", "#ff7f0e", [b](const Rational& a) { return rescaled_chat(b, a).to_double(); });
    add("c_infty", "#8c564b", [](const Rational& a) { return c_infty(a).to_double(); });
  }

  struct Marker {
    double a;
    double y;
  };
  std::vector<Marker> markers;
  if (spec.b.is_integer() && spec.b >= 2 && !ov.rescaled) {
    const long b = spec.b.numerator().get_si();
    const auto g = step_geometry(b);
    std::vector<Rational> pts(g.u.begin(), g.u.end());
    pts.insert(pts.end(), g.v.begin(), g.v.end());
    pts.push_back(g.beta);
    for (const auto& p : pts)
      if (spec.lo <= p && p <= spec.hi) markers.push_back({p.to_double(), cb_closed(b, p).value.to_double()});
    if (QuadNum(spec.lo) <= g.alpha && g.alpha <= QuadNum(spec.hi)) {
      const double alpha = g.alpha.to_double();
      markers.push_back({alpha, std::sqrt(alpha / (2.0 * static_cast<double>(b)))});
    }
  }

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  for (const auto& s : series)
    for (double y : s.y) {
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(ymax > ymin)) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  constexpr double width = 800, height = 500, margin = 50;
  const double x0 = spec.lo.to_double();
  const double x1 = spec.hi.to_double();
  const auto px = [&](double a) { return margin + (a - x0) / (x1 - x0) * (width - 2 * margin); };
  const auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"50\" y1=\"450\" x2=\"750\" y2=\"450\"/>\n<line x1=\"50\" y1=\"50\" x2=\"50\" y2=\"450\"/>\n</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<text x=\"50\" y=\"468\" text-anchor=\"middle\">" + spec.lo.str() + "</text>\n";
  svg += "<text x=\"750\" y=\"468\" text-anchor=\"middle\">" + spec.hi.str() + "</text>\n";
  svg += "<text x=\"44\" y=\"" + coord(py(ymin + pad)) + "\" text-anchor=\"end\">" + coord(ymin + pad) + "</text>\n";
  svg += "<text x=\"44\" y=\"" + coord(py(ymax - pad)) + "\" text-anchor=\"end\">" + coord(ymax - pad) + "</text>\n";
  svg += "<text x=\"400\" y=\"490\" text-anchor=\"middle\">a (b = " + spec.b.str() + ")</text>\n";
  double legend_y = 20;
  for (const auto& s : series) {
    svg += "<text x=\"700\" y=\"" + coord(legend_y) + "\" fill=\"" + s.color + "\">" + s.name + "</text>\n";
    legend_y += 14;
  }
  svg += "</g>\n";

  for (const auto& s : series) {
    svg += "<polyline class=\"" + s.name + "\" fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += coord(px(grid[i].to_double())) + "," + coord(py(s.y[i]));
    }
    svg += "\"/>\n";
  }
  for (const auto& m : markers)
    svg += "<circle class=\"breakpoint\" cx=\"" + coord(px(m.a)) + "\" cy=\"" + coord(py(m.y)) +
           "\" r=\"3\" fill=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

ScanResult scan_conjecture(const std::vector<Rational>& b_list, const std::vector<Rational>& grid,
                           std::size_t ech_n) {
  struct Point {
    Rational b;
    Rational a;
    const CapacitySequence* domain;
  };
  std::vector<CapacitySequence> domains;
  domains.reserve(b_list.size());
  for (const auto& b : b_list) {
    if (b < 2) throw DomainError("conjecture scan needs b >= 2");
    domains.push_back(ech_domain(b, ech_n));
  }
  std::vector<Point> points;
  for (std::size_t i = 0; i < b_list.size(); ++i)
    for (const auto& a : grid) points.push_back({b_list[i], a, &domains[i]});
  struct Row {
    std::string line;
    bool consistent;
  };
  const auto rows = parallel_map(points, [](const Point& p) {
    const QuadNum d = db_real(p.b, p.a);
    const Rational e = ech_lower_bound_against(*p.domain, p.a).value;
    const bool ok = QuadNum(e) <= d;
    return Row{p.b.str() + "," + p.a.str() + "," + d.str() + "," + format_float(d.to_double()) + "," + e.str() +
                   "," + format_float(e.to_double()) + "," + (ok ? "1" : "0") + "\n",
               ok};
  });
  ScanResult out;
  out.csv = "b,a,db_real_exact,db_real_float,ech_lower_exact,ech_lower_float,consistent\n";
  for (const auto& r : rows) {
    out.csv += r.line;
    if (!r.consistent) ++out.inconsistencies;
  }
  return out;
}

}  // namespace sympstairs
