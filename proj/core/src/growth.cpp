#include "fmb/growth.hpp"

#include <cmath>
#include <vector>

namespace fmb {

bool is_divergent(std::span<const double> v, double inv_r) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (double x : v)
    if (!std::isfinite(x) || x < 0.0) return false;

  if (inv_r > 0.0) {
    const double thr = std::exp2(inv_r / 2.0);
    const double a = v[n - 3];
    const double b = v[n - 2];
    const double c = v[n - 1];
    if (a > 0.0 && b >= thr * a && c >= thr * b) return true;
  }

  if (n < 4) return false;
  std::vector<double> s(v.end() - 4, v.end());
  if (inv_r > 0.0)
    for (auto& x : s) x = std::pow(x, 1.0 / inv_r);
  const double floor = 1e-3 * s[3];
  double prev = 0.0;
  for (int i = 1; i < 4; ++i) {
    const double d = s[i] - s[i - 1];
    if (!(d > 0.0) || d < floor) return false;
    if (i > 1 && d < 0.9 * prev) return false;
    prev = d;
  }
  return true;
}

}  // namespace fmb
