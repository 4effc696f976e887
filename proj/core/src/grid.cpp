#include "fmb/grid.hpp"

#include <algorithm>
#include <cmath>

#include "fmb/errors.hpp"

namespace fmb {

namespace {

void add_shells(std::vector<double>& pts, Interval iv, int span) {
  // ±2^j inside the interval
  const double m = std::max(std::fabs(iv.lo), std::fabs(iv.hi));
  if (m == 0.0) return;
  int top = 0;
  std::frexp(m, &top);
  double lowest = 0.0;
  if (iv.lo > 0.0) lowest = iv.lo;
  else if (iv.hi < 0.0) lowest = -iv.hi;
  int bottom = top - span;
  if (lowest > 0.0) {
    std::frexp(lowest, &bottom);
    bottom -= 1;
  }
  for (int j = bottom; j <= top; ++j) {
    const double s = std::ldexp(1.0, j);
    if (s > iv.lo && s < iv.hi) pts.push_back(s);
    if (-s > iv.lo && -s < iv.hi) pts.push_back(-s);
  }
}

bool near_hint(const FunSymbol& f, double x) {
  return std::any_of(f.singularities.begin(), f.singularities.end(),
                     [x](const SingularityHint& h) { return h.location == x; });
}

}  // namespace

std::vector<double> split_points(const FunSymbol& f, Interval iv, int shell_span) {
  if (!(iv.hi > iv.lo)) throw ConfigError("interval must have positive length");
  std::vector<double> pts{iv.lo, iv.hi};
  for (const auto& h : f.singularities)
    if (h.location > iv.lo && h.location < iv.hi) pts.push_back(h.location);
  for (double b : f.breakpoints)
    if (b > iv.lo && b < iv.hi) pts.push_back(b);
  if (iv.lo < 0.0 && iv.hi > 0.0) pts.push_back(0.0);
  add_shells(pts, iv, shell_span);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> grid_nodes(const FunSymbol& f, Interval iv, const Mesh& mesh) {
  if (!(mesh.relative > 0.0) || mesh.relative > 1.0) throw ConfigError("mesh must be in (0, 1]");
  const auto pts = split_points(f, iv, mesh.shell_span);
  const auto n = static_cast<int>(std::ceil(1.0 / mesh.relative - 1e-9));
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    const double h = (b - a) / n;
    const bool sa = near_hint(f, a);
    const bool sb = near_hint(f, b);
    out.push_back(a);
    if (sa)
      for (int j = mesh.grading_depth; j >= 1; --j) out.push_back(a + std::ldexp(h, -j));
    for (int c = 1; c < n; ++c) out.push_back(a + (b - a) * c / n);
    if (sb)
      for (int j = 1; j <= mesh.grading_depth; ++j) out.push_back(b - std::ldexp(h, -j));
  }
  out.push_back(pts.back());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> cells(const FunSymbol& f, const IntervalSet& domain, const Mesh& mesh) {
  f.require_integrable();
  std::vector<Cell> out;
  for (const auto& iv : domain) {
    if (!(iv.hi > iv.lo)) continue;
    const auto x = grid_nodes(f, iv, mesh);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i];
      const double b = x[i + 1];
      double lvl = kInf;
      const double eps = std::ldexp(b - a, -40);
      const double lo = std::max(a + eps, std::nextafter(a, b));
      const double hi = std::min(b - eps, std::nextafter(b, a));
      for (double s : {lo, 0.5 * (a + b), hi}) {
        const double v = std::abs(f(s));
        if (std::isfinite(v)) lvl = std::min(lvl, v);
      }
      if (!std::isfinite(lvl)) throw NumericalError("no finite sample in cell near " + std::to_string(a));
      out.push_back({a, b, lvl});
    }
  }
  return out;
}

}  // namespace fmb
