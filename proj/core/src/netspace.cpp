#include "fmb/netspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fmb/errors.hpp"

namespace fmb {

std::vector<IndexRange> pools(const IntervalFamily& W, IndexRange window) {
  std::vector<IndexRange> out;
  if (W.kind == IntervalFamily::Kind::all_intervals) {
    out.push_back(window);
    return out;
  }
  for (const auto& run : discrete_block_runs(W.k)) {
    IndexRange r{std::max(run.lo, window.lo), std::min(run.hi, window.hi)};
    if (!r.empty()) out.push_back(r);
  }
  return out;
}

IntervalSet pools(const IntervalFamily& M, const IntervalSet& domain) {
  if (M.kind == IntervalFamily::Kind::all_intervals) return domain;
  IntervalSet out;
  const auto [neg, pos] = continuous_block(M.k);
  for (const auto& half : {neg, pos})
    for (const auto& d : domain) {
      Interval r{std::max(half.lo, d.lo), std::min(half.hi, d.hi)};
      if (r.hi > r.lo) out.push_back(r);
    }
  return out;
}

double AveragedProfile::sup_form(double p) const {
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    best = std::max(best, std::pow(thresholds[i], 1.0 / p) * values[i]);
  return best;
}

std::string AveragedProfile::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "threshold,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) os << thresholds[i] << ',' << values[i] << '\n';
  return os.str();
}

std::vector<double> best_sums(const SeqSymbol& a, const IntervalFamily& W) {
  std::vector<double> best(1, 0.0);
  std::vector<Complex> P;
  for (const auto& pool : pools(W, a.window())) {
    const auto n = static_cast<std::size_t>(pool.size());
    P.assign(n + 1, Complex{});
    for (std::size_t i = 0; i < n; ++i) P[i + 1] = P[i] + a[pool.lo + static_cast<Index>(i)];
    if (best.size() < n + 1) best.resize(n + 1, 0.0);
    for (std::size_t L = 1; L <= n; ++L) {
      double m = best[L];
      for (std::size_t i = 0; i + L <= n; ++i) m = std::max(m, std::abs(P[i + L] - P[i]));
      best[L] = m;
    }
  }
  return best;
}

AvgSup interval_avg_sup_seq(const SeqSymbol& a, Index t, const IntervalFamily& W) {
  if (t < 1) throw ConfigError("interval_avg_sup_seq: t must be >= 1");
  const auto best = best_sums(a, W);
  const auto tt = static_cast<std::size_t>(t);
  if (tt >= best.size()) return {0.0, true};
  double v = 0.0;
  for (std::size_t L = tt; L < best.size(); ++L) v = std::max(v, best[L] / static_cast<double>(L));
  return {v, false};
}

double net_norm_seq(const SeqSymbol& a, double p, const IntervalFamily& W) {
  if (!(p > 0.0)) throw ConfigError("net_norm_seq: p must be > 0");
  const auto best = best_sums(a, W);
  double v = 0.0;
  for (std::size_t L = 1; L < best.size(); ++L) {
    const double Ld = static_cast<double>(L);
    v = std::max(v, std::pow(Ld, 1.0 / p) * (best[L] / Ld));
  }
  return v;
}

AveragedProfile averaged_profile_seq(const SeqSymbol& a, const IntervalFamily& W) {
  const auto best = best_sums(a, W);
  AveragedProfile prof;
  const std::size_t n = best.size() - 1;
  prof.thresholds.resize(n);
  prof.values.resize(n);
  prof.vacuous.assign(n, false);
  double run = 0.0;
  for (std::size_t L = n; L >= 1; --L) {
    run = std::max(run, best[L] / static_cast<double>(L));
    prof.thresholds[L - 1] = static_cast<double>(L);
    prof.values[L - 1] = run;
  }
  return prof;
}

double dyadic_profile_seq(const SeqSymbol& a, double p, double q, const IntervalFamily& W) {
  const auto prof = averaged_profile_seq(a, W);
  double acc = 0.0;
  for (std::size_t t = 1; t <= prof.values.size(); t *= 2) {
    const double term = std::pow(static_cast<double>(t), 1.0 / p) * prof.values[t - 1];
    if (std::isinf(q))
      acc = std::max(acc, term);
    else
      acc += std::pow(term, q);
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

PrefixIntegrals prefix_integrals(const FunSymbol& f, Interval pool, const Mesh& mesh, const QuadratureOptions& q) {
  f.require_integrable();
  PrefixIntegrals out;
  out.x = grid_nodes(f, pool, mesh);
  out.P.assign(out.x.size(), Complex{});
  auto re = [&f](double x) { return f(x).real(); };
  auto im = [&f](double x) { return f(x).imag(); };
  for (std::size_t i = 0; i + 1 < out.x.size(); ++i) {
    const double a = out.x[i];
    const double b = out.x[i + 1];
    const bool sa = f.is_hint(a);
    const bool sb = f.is_hint(b);
    Complex c{integrate(re, a, b, sa, sb, q), 0.0};
    if (!f.real_valued) c.imag(integrate(im, a, b, sa, sb, q));
    out.P[i + 1] = out.P[i] + c;
  }
  return out;
}

double net_norm_fun(const FunSymbol& f, double p, const IntervalFamily& M, const IntervalSet& domain,
                    const Mesh& mesh) {
  if (!(p > 0.0)) throw ConfigError("net_norm_fun: p must be > 0");
  const double s = 1.0 / p - 1.0;  // |e|^{-1/p'}
  double best = 0.0;
  for (const auto& pool : pools(M, domain)) {
    const auto pi = prefix_integrals(f, pool, mesh);
    const std::size_t n = pi.x.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double S = std::abs(pi.P[j] - pi.P[i]);
        if (S == 0.0) continue;
        best = std::max(best, S * std::pow(pi.x[j] - pi.x[i], s));
      }
  }
  return best;
}

AveragedProfile averaged_profile_fun(const FunSymbol& f, const IntervalFamily& M, const IntervalSet& domain,
                                     const std::vector<double>& thresholds, const Mesh& mesh) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw ConfigError("averaged_profile_fun: thresholds must be sorted");
  const std::size_t m = thresholds.size();
  std::vector<double> bucket(m, 0.0);
  std::vector<bool> hit(m, false);
  for (const auto& pool : pools(M, domain)) {
    const auto pi = prefix_integrals(f, pool, mesh);
    const std::size_t n = pi.x.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double L = pi.x[j] - pi.x[i];
        const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), L);
        if (it == thresholds.begin()) continue;
        const auto b = static_cast<std::size_t>(it - thresholds.begin()) - 1;
        bucket[b] = std::max(bucket[b], std::abs(pi.P[j] - pi.P[i]) / L);
        hit[b] = true;
      }
  }
  AveragedProfile prof;
  prof.thresholds = thresholds;
  prof.values.assign(m, 0.0);
  prof.vacuous.assign(m, true);
  double run = 0.0;
  bool any = false;
  for (std::size_t b = m; b-- > 0;) {
    run = std::max(run, bucket[b]);
    any = any || hit[b];
    prof.values[b] = run;
    prof.vacuous[b] = !any;
  }
  return prof;
}

double dyadic_profile_fun(const FunSymbol& f, double p, double q, const IntervalFamily& M,
                          const IntervalSet& domain, const Mesh& mesh) {
  double lmax = 0.0;
  for (const auto& iv : pools(M, domain)) lmax = std::max(lmax, iv.length());
  if (lmax == 0.0) return 0.0;
  int top = 0;
  std::frexp(lmax, &top);
  const int nmax = top - 1;
  const int nmin = nmax - 40;
  std::vector<double> ts;
  for (int n = nmin; n <= nmax; ++n) ts.push_back(exp2i(n));
  const auto prof = averaged_profile_fun(f, M, domain, ts, mesh);
  double acc = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double term = std::pow(ts[i], 1.0 / p) * prof.values[i];
    if (std::isinf(q))
      acc = std::max(acc, term);
    else
      acc += std::pow(term, q);
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

}  // namespace fmb
