#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fmb/symbols.hpp"

namespace fmb {

namespace detail {
struct FftPlans;
}

/// Multiplier operator on N samples. Periodic model: samples of (0,1), coefficient
/// index k on |k| < N/2, ‖f‖_p = ((1/N) Σ|f_j|^p)^{1/p}. Line model: samples of
/// [−L/2, L/2), frequencies 2πk/L, ‖f‖_p = (dx Σ|f_j|^p)^{1/p} with dx = L/N.
class DiscreteMultiplier {
 public:
  enum class Kind { periodic, line };

  static DiscreteMultiplier periodic(const SeqSymbol& l, std::size_t N);
  static DiscreteMultiplier line(const FunSymbol& l, std::size_t N, double L);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] double length() const { return L_; }
  [[nodiscard]] double frequency_step() const;  // 2π/L (line), 1 (periodic)
  /// Multiplier value per FFT bin (bin j ↔ frequency index j for j < N/2, j − N otherwise).
  [[nodiscard]] const std::vector<Complex>& spectrum() const { return spectrum_; }
  [[nodiscard]] static Index frequency_index(std::size_t bin, std::size_t N);
  [[nodiscard]] std::size_t argmax_bin() const;
  [[nodiscard]] double max_abs() const;

  [[nodiscard]] std::vector<Complex> apply(const std::vector<Complex>& f) const;
  [[nodiscard]] std::vector<Complex> apply_adjoint(const std::vector<Complex>& f) const;
  /// Fourier coefficients of the trigonometric interpolant (FFT / N), by bin.
  [[nodiscard]] std::vector<Complex> coefficients(const std::vector<Complex>& f) const;
  /// Samples from coefficients given by bin.
  [[nodiscard]] std::vector<Complex> synthesize(const std::vector<Complex>& coeffs) const;
  [[nodiscard]] double lp_norm(const std::vector<Complex>& f, double p) const;

 private:
  DiscreteMultiplier(Kind kind, std::size_t n, double L, std::vector<Complex> spectrum);
  [[nodiscard]] std::vector<Complex> multiply(const std::vector<Complex>& f, bool adjoint) const;

  Kind kind_;
  std::size_t n_;
  double L_;
  std::vector<Complex> spectrum_;
  std::shared_ptr<const detail::FftPlans> plans_;
};

std::vector<Complex> apply_multiplier(const DiscreteMultiplier& T, const std::vector<Complex>& f);
double lp_norm_periodic(const std::vector<Complex>& f, double p);

struct OpNormOptions {
  int iterations = 200;
  int restarts = 16;
  std::uint64_t seed = 0;
  double stagnation = 1e-8;
  std::function<void(int restart, int iteration, double ratio)> observer;
};

struct OpNormEstimate {
  double value = 0.0;
  int iterations = 0;  // total over restarts
  int restarts = 0;
  std::uint64_t seed = 0;
  std::vector<double> trajectory;  // best ratio per restart

  [[nodiscard]] std::string to_csv() const;
};

/// Lower estimate of the p → q norm by nonlinear power iteration. Restart 0
/// starts from the single mode where |λ| is largest; the others from seeded
/// complex Gaussian samples.
OpNormEstimate estimate_opnorm(const DiscreteMultiplier& T, double p, double q, const OpNormOptions& opts = {});

/// ‖T f‖_q / ‖f‖_p for f with Fourier coefficients 1 on e0 and 0 elsewhere.
double witness_ratio(const SeqSymbol& l, IndexRange e0, double p, double q, std::size_t N);

DiscreteMultiplier make_line_multiplier(const FunSymbol& l, std::size_t N, double L);

}  // namespace fmb
