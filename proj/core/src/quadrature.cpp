#include "fmb/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "fmb/errors.hpp"

namespace fmb {

namespace {

double gk(const std::function<double(double)>& g, double a, double b, const QuadratureOptions& opts) {
  if (!(b > a)) return 0.0;
  auto safe = [&g](double x) {
    const double v = g(x);
    return std::isfinite(v) ? v : 0.0;
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(safe, a, b, opts.max_depth,
                                                                                 opts.tolerance, &err);
  return v;
}

// ∫ over [a, b] with the singular end at `a` (toward_a) or `b`. Pieces halve
// toward the singular end until they fall below the coordinate resolution; the
// remainder is extrapolated from the ratio of the last two pieces.
double geometric(const std::function<double(double)>& g, double a, double b, bool toward_a,
                 const QuadratureOptions& opts) {
  const double h = b - a;
  const double end = toward_a ? a : b;
  const double floor_width = 1e-4 * std::max(std::fabs(end), std::fabs(h));
  double width = h / 2.0;
  double total = toward_a ? gk(g, a + width, b, opts) : gk(g, a, b - width, opts);
  double last = total;
  double before = 0.0;
  for (int j = 0; j < opts.max_geometric_levels; ++j) {
    if (width / 2.0 < floor_width) {
      const double ratio = before != 0.0 ? last / before : 0.0;
      if (ratio > 0.0 && ratio < 1.0) total += last * ratio / (1.0 - ratio);
      break;
    }
    const double lo = toward_a ? a + width / 2.0 : b - width;
    const double hi = toward_a ? a + width : b - width / 2.0;
    const double piece = gk(g, lo, hi, opts);
    total += piece;
    before = last;
    last = piece;
    width /= 2.0;
    if (std::fabs(piece) <= 1e-17 * std::fabs(total) && j > 8) break;
  }
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& g, double a, double b, bool singular_a, bool singular_b,
                 const QuadratureOptions& opts) {
  if (b < a) return -integrate(g, b, a, singular_b, singular_a, opts);
  if (!(b > a)) return 0.0;
  double v = 0.0;
  if (singular_a && singular_b) {
    const double m = 0.5 * (a + b);
    v = geometric(g, a, m, true, opts) + geometric(g, m, b, false, opts);
  } else if (singular_a) {
    v = geometric(g, a, b, true, opts);
  } else if (singular_b) {
    v = geometric(g, a, b, false, opts);
  } else {
    v = gk(g, a, b, opts);
  }
  if (!std::isfinite(v))
    throw NumericalError("quadrature produced a non-finite value on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "]");
  return v;
}

double integrate_split(const FunSymbol& f, const std::function<double(double)>& g, double a, double b,
                       const QuadratureOptions& opts) {
  if (b < a) return -integrate_split(f, g, b, a, opts);
  std::vector<double> pts{a, b};
  for (const auto& h : f.singularities)
    if (h.location > a && h.location < b) pts.push_back(h.location);
  for (double x : f.breakpoints)
    if (x > a && x < b) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += integrate(g, pts[i], pts[i + 1], f.is_hint(pts[i]), f.is_hint(pts[i + 1]), opts);
  return total;
}

Complex integrate_symbol(const FunSymbol& f, double a, double b, const QuadratureOptions& opts) {
  const double re = integrate_split(f, [&f](double x) { return f(x).real(); }, a, b, opts);
  if (f.real_valued) return {re, 0.0};
  const double im = integrate_split(f, [&f](double x) { return f(x).imag(); }, a, b, opts);
  return {re, im};
}

}  // namespace fmb
