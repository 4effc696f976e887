#include "fmb/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fmb/errors.hpp"

namespace fmb {

double StepRearrangement::operator()(double t) const {
  if (t < 0.0) return levels.empty() ? 0.0 : levels.front();
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints.begin());
  if (i == 0 || i > levels.size()) return 0.0;
  return levels[i - 1];
}

double StepRearrangement::distribution(double sigma) const {
  double d = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] >= sigma) d = breakpoints[i + 1];
  return d;
}

double StepRearrangement::weak_norm(double p) const {
  double best = 0.0;
  if (std::isinf(p)) {
    for (double l : levels) best = std::max(best, l);
    return best;
  }
  for (std::size_t i = 0; i < levels.size(); ++i)
    best = std::max(best, std::pow(breakpoints[i + 1], 1.0 / p) * levels[i]);
  return best;
}

StepRearrangement rearrange_cells(const std::vector<Cell>& cs) {
  std::vector<std::pair<double, double>> lw;
  lw.reserve(cs.size());
  StepRearrangement out;
  for (const auto& c : cs) {
    if (c.level > 0.0)
      lw.emplace_back(c.level, c.hi - c.lo);
    else
      out.tail_zero = true;
  }
  std::sort(lw.begin(), lw.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  double t = 0.0;
  for (std::size_t i = 0; i < lw.size();) {
    const double lvl = lw[i].first;
    while (i < lw.size() && lw[i].first == lvl) t += lw[i++].second;
    out.levels.push_back(lvl);
    out.breakpoints.push_back(t);
  }
  return out;
}

Index distribution_seq(const SeqSymbol& a, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("distribution_seq: sigma must be > 0");
  Index n = 0;
  for (const auto& v : a.values())
    if (std::abs(v) >= sigma) ++n;
  return n;
}

std::vector<double> rearrangement_seq(const SeqSymbol& a) {
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& v : a.values()) out.push_back(std::abs(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> rearrangement_seq(const SeqSymbol& a, const std::vector<IndexRange>& B) {
  std::vector<double> out;
  for (const auto& run : B) {
    const Index lo = std::max(run.lo, a.window_lo());
    const Index hi = std::min(run.hi, a.window_hi());
    for (Index m = lo; m <= hi; ++m) out.push_back(a.abs_at(m));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double lorentz_sorted(const std::vector<double>& s, double p, double q) {
  if (!(p > 0.0)) throw ConfigError("Lorentz norm needs p > 0");
  if (!(q > 0.0)) throw ConfigError("Lorentz norm needs q > 0");
  if (std::isinf(p)) {
    if (!std::isinf(q)) throw ConfigError("p = inf is only allowed with q = inf");
    return s.empty() ? 0.0 : s.front();
  }
  if (std::isinf(q)) {
    double best = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k)
      best = std::max(best, std::pow(static_cast<double>(k + 1), 1.0 / p) * s[k]);
    return best;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double kk = static_cast<double>(k + 1);
    sum += std::pow(std::pow(kk, 1.0 / p) * s[k], q) / kk;
  }
  return std::pow(sum, 1.0 / q);
}

double lorentz_seq_norm(const SeqSymbol& a, double p, double q, const std::optional<std::vector<IndexRange>>& B) {
  return lorentz_sorted(B ? rearrangement_seq(a, *B) : rearrangement_seq(a), p, q);
}

double lorentz_seq_block_norm(const SeqSymbol& a, double p, double q, int k) {
  return lorentz_sorted(rearrangement_seq(a, discrete_block_runs(k)), p, q);
}

StepRearrangement rearrangement_fun(const FunSymbol& f, const IntervalSet& domain, const Mesh& mesh) {
  return rearrange_cells(cells(f, domain, mesh));
}

double lorentz_fun_norm(const FunSymbol& f, double p, const IntervalSet& B, const Mesh& mesh,
                        const LorentzFunOptions& opts) {
  if (!(p > 0.0)) throw ConfigError("Lorentz norm needs p > 0");
  Mesh m = mesh;
  m.grading_depth = opts.start_depth;
  double prev = rearrangement_fun(f, B, m).weak_norm(p);
  if (f.singularities.empty()) return prev;
  while (m.grading_depth + opts.step_depth <= opts.max_depth) {
    m.grading_depth += opts.step_depth;
    const double cur = rearrangement_fun(f, B, m).weak_norm(p);
    const bool settled = std::fabs(cur - prev) <= opts.rel_tol * std::max(std::fabs(cur), 1e-300);
    prev = cur;
    if (settled) return cur;
  }
  return prev;
}

IntervalSet block_set(int k) {
  const auto [neg, pos] = continuous_block(k);
  return {neg, pos};
}

IntervalSet blocks_set(int kmin, int kmax) {
  if (kmax < kmin) return {};
  return {Interval{-exp2i(kmax + 1), -exp2i(kmin)}, Interval{exp2i(kmin), exp2i(kmax + 1)}};
}

}  // namespace fmb
