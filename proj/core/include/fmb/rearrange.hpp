#pragma once

#include <optional>
#include <vector>

#include "fmb/grid.hpp"
#include "fmb/symbols.hpp"

namespace fmb {

/// Non-increasing step function on [0, t_m): value levels[i] on [t_i, t_{i+1}).
/// breakpoints has levels.size() + 1 entries with breakpoints[0] = 0.
struct StepRearrangement {
  std::vector<double> breakpoints{0.0};
  std::vector<double> levels;
  bool tail_zero = false;

  [[nodiscard]] double total_measure() const { return breakpoints.back(); }
  /// f*(t), right-continuous.
  [[nodiscard]] double operator()(double t) const;
  /// |{|f| >= sigma}|
  [[nodiscard]] double distribution(double sigma) const;
  /// sup_t t^{1/p} f*(t), attained at right endpoints of steps.
  [[nodiscard]] double weak_norm(double p) const;
};

/// Builds the rearrangement of a list of (level, measure) pieces.
StepRearrangement rearrange_cells(const std::vector<Cell>& cells);

Index distribution_seq(const SeqSymbol& a, double sigma);
std::vector<double> rearrangement_seq(const SeqSymbol& a);
/// Restriction of a to the integer runs (zero elsewhere), then rearranged.
std::vector<double> rearrangement_seq(const SeqSymbol& a, const std::vector<IndexRange>& B);

/// Lorentz quasi-norm l_{p,q} of a sorted non-increasing array.
double lorentz_sorted(const std::vector<double>& sorted, double p, double q);
/// Lorentz quasi-norm of a (restricted to B when given). q = kInf for the weak norm;
/// p = kInf only with q = kInf.
double lorentz_seq_norm(const SeqSymbol& a, double p, double q,
                        const std::optional<std::vector<IndexRange>>& B = std::nullopt);
double lorentz_seq_block_norm(const SeqSymbol& a, double p, double q, int k);

StepRearrangement rearrangement_fun(const FunSymbol& f, const IntervalSet& domain, const Mesh& mesh = {});

struct LorentzFunOptions {
  int start_depth = 16;
  int step_depth = 8;
  int max_depth = 64;
  double rel_tol = 1e-3;
};

/// sup_t t^{1/p} f*(t) on the set B. The grading toward singularities is deepened
/// until the value changes by less than rel_tol.
double lorentz_fun_norm(const FunSymbol& f, double p, const IntervalSet& B, const Mesh& mesh = {},
                        const LorentzFunOptions& opts = {});

IntervalSet block_set(int k);
IntervalSet blocks_set(int kmin, int kmax);

}  // namespace fmb
