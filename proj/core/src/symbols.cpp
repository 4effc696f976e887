#include "fmb/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmb/errors.hpp"

namespace fmb {

SeqSymbol::SeqSymbol(Index window_lo, std::vector<Complex> values, bool decay_declared)
    : lo_(window_lo), values_(std::move(values)), decay_declared_(decay_declared) {
  if (values_.empty()) throw ConfigError("SeqSymbol: empty value array");
  if (lo_ > 0 || window_hi() < 0)
    throw ConfigError("SeqSymbol: window must contain 0 (got [" + std::to_string(lo_) + ", " +
                      std::to_string(window_hi()) + "])");
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ConfigError("SeqSymbol: non-finite value");
}

SeqSymbol SeqSymbol::from_real(Index window_lo, std::span<const double> values, bool decay_declared) {
  std::vector<Complex> c(values.begin(), values.end());
  return SeqSymbol(window_lo, std::move(c), decay_declared);
}

SeqSymbol SeqSymbol::zero() { return SeqSymbol(0, {Complex{}}, true); }

bool SeqSymbol::is_real() const {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& c) { return c.imag() == 0.0; });
}

SeqSymbol SeqSymbol::scaled(Complex c) const {
  std::vector<Complex> v(values_);
  for (auto& x : v) x *= c;
  return SeqSymbol(lo_, std::move(v), decay_declared_);
}

SeqSymbol SeqSymbol::truncated(Index lo, Index hi) const {
  lo = std::max(lo, window_lo());
  hi = std::min(hi, window_hi());
  if (lo > 0 || hi < 0) throw ConfigError("SeqSymbol::truncated: window must contain 0");
  std::vector<Complex> v(values_.begin() + (lo - lo_), values_.begin() + (hi - lo_) + 1);
  return SeqSymbol(lo, std::move(v), decay_declared_);
}

void FunSymbol::validate() const {
  if (!evaluator) throw ConfigError("FunSymbol: missing evaluator");
  if (derivative && !real_valued)
    throw ConfigError("FunSymbol: a derivative requires a real-valued symbol");
  require_integrable();
}

void FunSymbol::require_integrable() const {
  for (const auto& h : singularities)
    if (!(h.exponent > -1.0))
      throw ConfigError("FunSymbol: singularity at " + std::to_string(h.location) +
                        " is not integrable (exponent " + std::to_string(h.exponent) + ")");
}

FunSymbol FunSymbol::scaled(double c) const {
  FunSymbol out = *this;
  auto ev = evaluator;
  out.evaluator = [ev, c](double x) { return c * ev(x); };
  if (derivative) {
    auto d = derivative;
    out.derivative = [d, c](double x) { return c * d(x); };
  }
  return out;
}

bool FunSymbol::is_hint(double x) const {
  return std::any_of(singularities.begin(), singularities.end(),
                     [x](const SingularityHint& h) { return h.location == x; });
}

ExponentTriple make_exponents(double p, double q, ExponentMode mode) {
  if (!std::isfinite(p) || !std::isfinite(q) || !(p > 1.0) || !(q > 1.0))
    throw ConfigError("exponents must be finite and > 1");
  if (mode == ExponentMode::hoermander) {
    if (!(p <= 2.0 && 2.0 <= q))
      throw ConfigError("hoermander mode needs 1 < p <= 2 <= q < inf");
  } else if (!(p < q)) {
    throw ConfigError("lizorkin mode needs 1 < p < q < inf");
  }
  ExponentTriple e;
  e.p = p;
  e.q = q;
  e.mode = mode;
  e.inv_r = 1.0 / p - 1.0 / q;
  if (p == q) {
    e.inv_r = 0.0;
    e.r = kInf;
    e.r_conj = 1.0;
  } else {
    e.r = 1.0 / e.inv_r;
    e.r_conj = 1.0 / (1.0 - e.inv_r);
  }
  return e;
}

double exp2i(int k) { return std::ldexp(1.0, k); }

std::pair<Interval, Interval> continuous_block(int k) {
  const double a = exp2i(k);
  const double b = exp2i(k + 1);
  return {Interval{-b, -a}, Interval{a, b}};
}

std::vector<IndexRange> discrete_block_runs(int k) {
  if (k < 0) throw ConfigError("discrete blocks start at k = 0");
  if (k == 0) return {IndexRange{-1, 1}};
  const Index a = Index{1} << k;
  return {IndexRange{-2 * a + 1, -a}, IndexRange{a, 2 * a - 1}};
}

std::vector<Index> discrete_block(int k) {
  std::vector<Index> out;
  for (const auto& run : discrete_block_runs(k))
    for (Index m = run.lo; m <= run.hi; ++m) out.push_back(m);
  return out;
}

int discrete_block_of(Index m) {
  const Index a = m < 0 ? -m : m;
  if (a <= 1) return 0;
  int k = 0;
  while ((Index{2} << k) <= a) ++k;
  return k;
}

int continuous_block_of(double x) {
  if (x == 0.0 || !std::isfinite(x)) throw ConfigError("continuous_block_of: x must be finite and nonzero");
  int e = 0;
  std::frexp(std::fabs(x), &e);  // |x| = m 2^e, m in [0.5, 1)
  return e - 1;
}

SeqSymbol restrict_to_block(const SeqSymbol& s, DyadicBlock b) {
  if (b.kind != BlockKind::discrete) throw ConfigError("restrict_to_block: sequence needs a discrete block");
  std::vector<Complex> v(s.size(), Complex{});
  for (const auto& run : discrete_block_runs(b.k)) {
    const Index lo = std::max(run.lo, s.window_lo());
    const Index hi = std::min(run.hi, s.window_hi());
    for (Index m = lo; m <= hi; ++m) v[static_cast<std::size_t>(m - s.window_lo())] = s[m];
  }
  return SeqSymbol(s.window_lo(), std::move(v), s.decay_declared());
}

FunSymbol restrict_to_block(const FunSymbol& s, DyadicBlock b) {
  if (b.kind != BlockKind::continuous) throw ConfigError("restrict_to_block: function needs a continuous block");
  const auto [neg, pos] = continuous_block(b.k);
  auto inside = [neg, pos](double x) { return (x > neg.lo && x <= neg.hi) || (x >= pos.lo && x < pos.hi); };
  FunSymbol out = s;
  auto ev = s.evaluator;
  out.evaluator = [ev, inside](double x) { return inside(x) ? ev(x) : Complex{}; };
  if (s.derivative) {
    auto d = s.derivative;
    out.derivative = [d, inside](double x) { return inside(x) ? d(x) : 0.0; };
  }
  out.breakpoints.insert(out.breakpoints.end(), {neg.lo, neg.hi, pos.lo, pos.hi});
  std::erase_if(out.singularities, [neg, pos](const SingularityHint& h) {
    return !(neg.contains(h.location) || pos.contains(h.location));
  });
  out.vanishes_at_infinity = true;
  return out;
}

std::vector<BlockCoverage> blocks_in_window(IndexRange window) {
  std::vector<BlockCoverage> out;
  for (int k = 0; k < 62; ++k) {
    bool meets = false;
    bool partial = false;
    for (const auto& run : discrete_block_runs(k)) {
      const Index lo = std::max(run.lo, window.lo);
      const Index hi = std::min(run.hi, window.hi);
      if (lo > hi) continue;
      meets = true;
      if (lo != run.lo || hi != run.hi) partial = true;
    }
    if (meets) out.push_back({k, partial});
    const Index a = Index{1} << k;
    if (a > -window.lo && a > window.hi) break;
  }
  return out;
}

int largest_full_block(IndexRange window) {
  int best = -1;
  for (const auto& b : blocks_in_window(window))
    if (!b.partial || b.k == 0) best = b.k;
  return best;
}

}  // namespace fmb
