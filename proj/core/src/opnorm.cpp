#include "fmb/opnorm.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fmb/errors.hpp"

namespace fmb {

namespace detail {

struct FftPlans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::size_t n = 0;

  explicit FftPlans(std::size_t N) : n(N) {
    std::vector<Complex> a(N), b(N);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const int ni = static_cast<int>(N);
    forward = fftw_plan_dft_1d(ni, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward = fftw_plan_dft_1d(ni, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!forward || !backward) throw NumericalError("FFTW plan creation failed");
  }
  ~FftPlans() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  void run(fftw_plan p, const std::vector<Complex>& in, std::vector<Complex>& out) const {
    std::vector<Complex> tmp(in);
    out.resize(n);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(tmp.data()), reinterpret_cast<fftw_complex*>(out.data()));
  }
};

}  // namespace detail

namespace {

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void require_size(std::size_t N) {
  if (!power_of_two(N)) throw ConfigError("N must be a power of two (>= 2)");
}

double lp_sum(const std::vector<Complex>& f, double p, double w) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : f) s += std::pow(std::abs(v), p);
  return std::pow(w * s, 1.0 / p);
}

// |g|^{s-1} g/|g|
void dual_map(std::vector<Complex>& g, double s) {
  for (auto& v : g) {
    const double a = std::abs(v);
    v = a > 0.0 ? v * std::pow(a, s - 2.0) : Complex{};
  }
}

}  // namespace

DiscreteMultiplier::DiscreteMultiplier(Kind kind, std::size_t n, double L, std::vector<Complex> spectrum)
    : kind_(kind), n_(n), L_(L), spectrum_(std::move(spectrum)), plans_(std::make_shared<detail::FftPlans>(n)) {}

Index DiscreteMultiplier::frequency_index(std::size_t bin, std::size_t N) {
  return bin < N / 2 ? static_cast<Index>(bin) : static_cast<Index>(bin) - static_cast<Index>(N);
}

DiscreteMultiplier DiscreteMultiplier::periodic(const SeqSymbol& l, std::size_t N) {
  require_size(N);
  const auto quarter = static_cast<Index>(N / 4);
  if (-l.window_lo() > quarter || l.window_hi() > quarter)
    throw ConfigError("aliasing guard: symbol window must satisfy max|k| <= N/4");
  std::vector<Complex> bins(N);
  for (std::size_t j = 0; j < N; ++j) bins[j] = l[frequency_index(j, N)];
  return DiscreteMultiplier(Kind::periodic, N, 1.0, std::move(bins));
}

DiscreteMultiplier DiscreteMultiplier::line(const FunSymbol& l, std::size_t N, double L) {
  require_size(N);
  if (!(L > 0.0) || !std::isfinite(L)) throw ConfigError("line model needs L > 0");
  l.validate();
  const double step = 2.0 * std::numbers::pi / L;
  std::vector<Complex> bins(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double xi = step * static_cast<double>(frequency_index(j, N));
    Complex v = l.is_hint(xi) ? Complex{kInf, 0.0} : l(xi);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) v = l(xi + 0.5 * step);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("symbol not finite near frequency " + std::to_string(xi));
    bins[j] = v;
  }
  return DiscreteMultiplier(Kind::line, N, L, std::move(bins));
}

DiscreteMultiplier make_line_multiplier(const FunSymbol& l, std::size_t N, double L) {
  return DiscreteMultiplier::line(l, N, L);
}

double DiscreteMultiplier::frequency_step() const {
  return kind_ == Kind::line ? 2.0 * std::numbers::pi / L_ : 1.0;
}

std::size_t DiscreteMultiplier::argmax_bin() const {
  std::size_t best = 0;
  for (std::size_t j = 1; j < n_; ++j)
    if (std::abs(spectrum_[j]) > std::abs(spectrum_[best])) best = j;
  return best;
}

double DiscreteMultiplier::max_abs() const { return std::abs(spectrum_[argmax_bin()]); }

std::vector<Complex> DiscreteMultiplier::coefficients(const std::vector<Complex>& f) const {
  if (f.size() != n_) throw ConfigError("input length must equal N");
  std::vector<Complex> c;
  plans_->run(plans_->forward, f, c);
  const double inv = 1.0 / static_cast<double>(n_);
  for (auto& v : c) v *= inv;
  return c;
}

std::vector<Complex> DiscreteMultiplier::synthesize(const std::vector<Complex>& coeffs) const {
  if (coeffs.size() != n_) throw ConfigError("coefficient length must equal N");
  std::vector<Complex> f;
  plans_->run(plans_->backward, coeffs, f);
  return f;
}

std::vector<Complex> DiscreteMultiplier::multiply(const std::vector<Complex>& f, bool adjoint) const {
  auto c = coefficients(f);
  for (std::size_t j = 0; j < n_; ++j) c[j] *= adjoint ? std::conj(spectrum_[j]) : spectrum_[j];
  return synthesize(c);
}

std::vector<Complex> DiscreteMultiplier::apply(const std::vector<Complex>& f) const { return multiply(f, false); }
std::vector<Complex> DiscreteMultiplier::apply_adjoint(const std::vector<Complex>& f) const {
  return multiply(f, true);
}

double DiscreteMultiplier::lp_norm(const std::vector<Complex>& f, double p) const {
  const double w = kind_ == Kind::periodic ? 1.0 / static_cast<double>(n_) : L_ / static_cast<double>(n_);
  return lp_sum(f, p, w);
}

std::vector<Complex> apply_multiplier(const DiscreteMultiplier& T, const std::vector<Complex>& f) {
  return T.apply(f);
}

double lp_norm_periodic(const std::vector<Complex>& f, double p) {
  if (!(p >= 1.0)) throw ConfigError("lp norm needs p >= 1");
  if (f.empty()) return 0.0;
  return lp_sum(f, p, 1.0 / static_cast<double>(f.size()));
}

std::string OpNormEstimate::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "restart,best_ratio\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) os << i << ',' << trajectory[i] << '\n';
  return os.str();
}

OpNormEstimate estimate_opnorm(const DiscreteMultiplier& T, double p, double q, const OpNormOptions& opts) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q))
    throw ConfigError("estimate_opnorm needs 1 < p, q < inf");
  if (opts.iterations < 1 || opts.restarts < 1) throw ConfigError("iterations and restarts must be >= 1");
  OpNormEstimate est;
  est.seed = opts.seed;
  est.restarts = opts.restarts;
  if (T.max_abs() == 0.0) {
    est.trajectory.assign(static_cast<std::size_t>(opts.restarts), 0.0);
    return est;
  }
  const std::size_t N = T.size();
  const double p_conj = p / (p - 1.0);
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;

  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<Complex> f(N);
    if (r == 0) {
      std::vector<Complex> c(N);
      c[T.argmax_bin()] = 1.0;
      f = T.synthesize(c);
    } else {
      for (auto& v : f) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v = {re, im};
      }
    }
    double best = 0.0;
    double prev = -1.0;
    for (int it = 0; it < opts.iterations; ++it) {
      const double nf = T.lp_norm(f, p);
      if (!(nf > 0.0)) break;
      for (auto& v : f) v /= nf;
      auto g = T.apply(f);
      const double ratio = T.lp_norm(g, q);
      ++est.iterations;
      if (opts.observer) opts.observer(r, it, ratio);
      best = std::max(best, ratio);
      if (prev >= 0.0 && std::fabs(ratio - prev) <= opts.stagnation * std::max(ratio, 1e-300)) break;
      prev = ratio;
      if (ratio == 0.0) break;
      dual_map(g, q);
      f = T.apply_adjoint(g);
      dual_map(f, p_conj);
    }
    est.trajectory.push_back(best);
    est.value = std::max(est.value, best);
  }
  return est;
}

double witness_ratio(const SeqSymbol& l, IndexRange e0, double p, double q, std::size_t N) {
  require_size(N);
  if (e0.empty()) throw ConfigError("witness interval is empty");
  if (e0.lo < l.window_lo() || e0.hi > l.window_hi()) throw ConfigError("witness interval must lie in the window");
  const Index m = std::max(std::abs(e0.lo), std::abs(e0.hi));
  if (static_cast<Index>(N) < 8 * m) throw ConfigError("aliasing guard: N must be >= 8 max|e0|");
  const auto T = DiscreteMultiplier::periodic(l.truncated(std::min<Index>(e0.lo, 0), std::max<Index>(e0.hi, 0)), N);
  std::vector<Complex> c(N);
  for (Index k = e0.lo; k <= e0.hi; ++k) c[static_cast<std::size_t>(k < 0 ? k + static_cast<Index>(N) : k)] = 1.0;
  const auto f = T.synthesize(c);
  const auto g = T.apply(f);
  return T.lp_norm(g, q) / T.lp_norm(f, p);
}

}  // namespace fmb
