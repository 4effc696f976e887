#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace fmb {

using Complex = std::complex<double>;
using Index = std::int64_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval [lo, hi] of the real line. Endpoint inclusion never matters
/// for the measure-theoretic quantities computed here.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] double length() const { return hi - lo; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
};
using IntervalSet = std::vector<Interval>;

/// Inclusive range of integers.
struct IndexRange {
  Index lo = 0;
  Index hi = -1;
  [[nodiscard]] Index size() const { return hi >= lo ? hi - lo + 1 : 0; }
  [[nodiscard]] bool empty() const { return hi < lo; }
};

/// Finitely supported multiplier symbol on Z. Values outside the window are
/// exactly zero.
class SeqSymbol {
 public:
  SeqSymbol(Index window_lo, std::vector<Complex> values, bool decay_declared = false);

  static SeqSymbol from_real(Index window_lo, std::span<const double> values,
                             bool decay_declared = false);
  static SeqSymbol zero();

  [[nodiscard]] Index window_lo() const { return lo_; }
  [[nodiscard]] Index window_hi() const { return lo_ + static_cast<Index>(values_.size()) - 1; }
  [[nodiscard]] IndexRange window() const { return {window_lo(), window_hi()}; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::span<const Complex> values() const { return values_; }
  [[nodiscard]] bool decay_declared() const { return decay_declared_; }
  [[nodiscard]] bool is_real() const;

  /// Zero-extended access.
  [[nodiscard]] Complex operator[](Index k) const {
    return (k < lo_ || k > window_hi()) ? Complex{} : values_[static_cast<std::size_t>(k - lo_)];
  }
  [[nodiscard]] double abs_at(Index k) const { return std::abs((*this)[k]); }

  [[nodiscard]] SeqSymbol scaled(Complex c) const;
  /// Same symbol seen through the smaller window [lo, hi] ∩ window (must contain 0).
  [[nodiscard]] SeqSymbol truncated(Index lo, Index hi) const;

 private:
  Index lo_;
  std::vector<Complex> values_;
  bool decay_declared_;
};

/// Location where the evaluator (or its derivative) blows up like |x - location|^exponent.
struct SingularityHint {
  double location = 0.0;
  double exponent = -0.5;
};

/// Multiplier symbol on R given by evaluators.
struct FunSymbol {
  std::function<Complex(double)> evaluator;
  std::function<double(double)> derivative;  // empty when absent
  std::vector<SingularityHint> singularities;
  std::vector<double> breakpoints;  // kinks or jumps where quadrature should split
  bool real_valued = false;
  bool vanishes_at_infinity = false;

  [[nodiscard]] Complex operator()(double x) const { return evaluator(x); }
  [[nodiscard]] bool has_derivative() const { return static_cast<bool>(derivative); }

  /// Throws ConfigError when the invariants do not hold.
  void validate() const;
  /// Rejects singularity hints that are not locally integrable (exponent <= -1).
  void require_integrable() const;

  [[nodiscard]] FunSymbol scaled(double c) const;
  [[nodiscard]] bool is_hint(double x) const;
};

enum class BlockKind { continuous, discrete };

struct DyadicBlock {
  int k = 0;
  BlockKind kind = BlockKind::discrete;
};

enum class ExponentMode { hoermander, lizorkin };

/// (p, q) with 1/r = 1/p - 1/q and 1/r + 1/r' = 1.
struct ExponentTriple {
  double p = 2.0;
  double q = 2.0;
  double r = kInf;
  double r_conj = 1.0;
  double inv_r = 0.0;  // 1/p - 1/q, kept separately so r = inf stays exact
  ExponentMode mode = ExponentMode::hoermander;
};

ExponentTriple make_exponents(double p, double q, ExponentMode mode);

/// Continuous block (-2^{k+1}, -2^k] ∪ [2^k, 2^{k+1}) as (negative half, positive half).
std::pair<Interval, Interval> continuous_block(int k);

/// Discrete block: {-1, 0, 1} for k = 0, else {-2^{k+1}+1..-2^k} ∪ {2^k..2^{k+1}-1}.
std::vector<Index> discrete_block(int k);

/// The integer runs that make up δ_k: one run for k = 0, two (negative, positive) otherwise.
std::vector<IndexRange> discrete_block_runs(int k);

/// Block index k with m ∈ δ_k.
int discrete_block_of(Index m);

/// Block index k with x ∈ Δ_k (x != 0).
int continuous_block_of(double x);

SeqSymbol restrict_to_block(const SeqSymbol& s, DyadicBlock b);
FunSymbol restrict_to_block(const FunSymbol& s, DyadicBlock b);

/// Blocks meeting the window, and whether the window cuts through them.
struct BlockCoverage {
  int k = 0;
  bool partial = false;
};
std::vector<BlockCoverage> blocks_in_window(IndexRange window);

/// Largest k such that δ_k meets the window and is not cut by it (-1 if none).
int largest_full_block(IndexRange window);

double exp2i(int k);  // 2^k exactly

}  // namespace fmb
