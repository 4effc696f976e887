#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmb/grid.hpp"
#include "fmb/quadrature.hpp"
#include "fmb/symbols.hpp"

namespace fmb {

/// Intervals of Z (or R) used by net-space functionals. For within_block the two
/// half-lines of the block are separate pools.
struct IntervalFamily {
  enum class Kind { all_intervals, within_block };
  Kind kind = Kind::all_intervals;
  int k = 0;

  static IntervalFamily all() { return {}; }
  static IntervalFamily block(int k) { return {Kind::within_block, k}; }
};

/// Integer pools of a family on a window (each pool is a contiguous run).
std::vector<IndexRange> pools(const IntervalFamily& W, IndexRange window);
/// Real pools of a family on a domain.
IntervalSet pools(const IntervalFamily& M, const IntervalSet& domain);

struct AveragedProfile {
  std::vector<double> thresholds;  // increasing
  std::vector<double> values;      // non-increasing
  std::vector<bool> vacuous;

  /// sup_i t_i^{1/p} values[i]
  [[nodiscard]] double sup_form(double p) const;
  [[nodiscard]] std::string to_csv() const;
};

struct AvgSup {
  double value = 0.0;
  bool vacuous = false;
};

/// best[L] = max |sum over e| over intervals e of length L (L = 0..max pool size).
std::vector<double> best_sums(const SeqSymbol& a, const IntervalFamily& W);

AvgSup interval_avg_sup_seq(const SeqSymbol& a, Index t, const IntervalFamily& W = {});
/// sup_e |e|^{1/p - 1} |sum_e a|
double net_norm_seq(const SeqSymbol& a, double p, const IntervalFamily& W = {});
/// Profile at every threshold t = 1..max interval length.
AveragedProfile averaged_profile_seq(const SeqSymbol& a, const IntervalFamily& W = {});
/// sup (q = inf) or l_q sum over t = 2^n, n >= 0, of 2^{n/p} abar(2^n).
double dyadic_profile_seq(const SeqSymbol& a, double p, double q, const IntervalFamily& W = {});

/// Grid nodes and prefix integrals of f on one pool.
struct PrefixIntegrals {
  std::vector<double> x;
  std::vector<Complex> P;  // P[i] = ∫_{x_0}^{x_i} f
};
/// Cells are small, so per-cell quadrature uses a shallow subdivision budget.
inline constexpr QuadratureOptions kCellQuadrature{1e-9, 6, 200};
PrefixIntegrals prefix_integrals(const FunSymbol& f, Interval pool, const Mesh& mesh = {},
                                 const QuadratureOptions& q = kCellQuadrature);

double net_norm_fun(const FunSymbol& f, double p, const IntervalFamily& M, const IntervalSet& domain,
                    const Mesh& mesh = {});
/// Profile at thresholds given (sorted increasing); grid-endpoint intervals only.
AveragedProfile averaged_profile_fun(const FunSymbol& f, const IntervalFamily& M, const IntervalSet& domain,
                                     const std::vector<double>& thresholds, const Mesh& mesh = {});
/// Dyadic form over t = 2^n for n with 2^n within the domain scale.
double dyadic_profile_fun(const FunSymbol& f, double p, double q, const IntervalFamily& M,
                          const IntervalSet& domain, const Mesh& mesh = {});

}  // namespace fmb
