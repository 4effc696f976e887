#include "fmb/monotone.hpp"

#include <algorithm>
#include <cmath>

#include "fmb/errors.hpp"
#include "fmb/netspace.hpp"
#include "fmb/rearrange.hpp"

namespace fmb {

namespace {

double ratio(double star, double bar, bool& violated) {
  if (bar == 0.0) {
    if (star == 0.0) return 1.0;
    violated = true;
    return kInf;
  }
  return star / bar;
}

void summarize(MonotoneCertificate& c) {
  c.constant_C = 0.0;
  c.constant_C_half = 0.0;
  const std::size_t half = (c.ratios.size() + 1) / 2;
  for (std::size_t i = 0; i < c.ratios.size(); ++i) {
    if (c.ratios[i] > c.constant_C) {
      c.constant_C = c.ratios[i];
      c.witness = c.checked_thresholds[i];
    }
    if (i < half) c.constant_C_half = std::max(c.constant_C_half, c.ratios[i]);
  }
  c.stable = !c.violated && std::isfinite(c.constant_C) &&
             std::fabs(c.constant_C - c.constant_C_half) < 0.05 * c.constant_C;
}

}  // namespace

MonotoneCertificate monotone_constant_seq(const SeqSymbol& a, Index kmax) {
  const auto star = rearrangement_seq(a);
  const auto prof = averaged_profile_seq(a, IntervalFamily::all());
  const auto n = static_cast<Index>(star.size());
  if (kmax < 0 || kmax > n) kmax = n;
  MonotoneCertificate c;
  for (Index k = 1; k <= kmax; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    c.checked_thresholds.push_back(static_cast<double>(k));
    c.ratios.push_back(ratio(star[i], prof.values[i], c.violated));
  }
  summarize(c);
  return c;
}

MonotoneCertificate monotone_constant_fun(const FunSymbol& f, const IntervalSet& domain,
                                          const std::vector<double>& tgrid, const Mesh& mesh) {
  if (tgrid.empty()) throw ConfigError("monotone_constant_fun: empty t-grid");
  const auto star = rearrangement_fun(f, domain, mesh);
  const auto prof = averaged_profile_fun(f, IntervalFamily::all(), domain, tgrid, mesh);
  MonotoneCertificate c;
  for (std::size_t i = 0; i < tgrid.size(); ++i) {
    if (prof.vacuous[i]) continue;  // no interval that long
    c.checked_thresholds.push_back(tgrid[i]);
    c.ratios.push_back(ratio(star(tgrid[i]), prof.values[i], c.violated));
  }
  summarize(c);
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bounded: return "bounded";
    case Verdict::unbounded: return "unbounded";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

Verdict criteria_verdict(const BoundValue& lower, const MonotoneCertificate& cert) {
  if (cert.violated || !cert.stable || !std::isfinite(cert.constant_C)) return Verdict::inapplicable;
  return lower.divergent ? Verdict::unbounded : Verdict::bounded;
}

Verdict criteria_verdict(const SeqSymbol& l, const ExponentTriple& e, const MonotoneCertificate& cert) {
  if (e.mode != ExponentMode::hoermander) throw ConfigError("criteria_verdict needs hoermander-mode exponents");
  return criteria_verdict(necessary_lower_seq(l, e), cert);
}

Verdict criteria_verdict(const FunSymbol& l, const ExponentTriple& e, const MonotoneCertificate& cert,
                         BlockRange range) {
  if (e.mode != ExponentMode::hoermander) throw ConfigError("criteria_verdict needs hoermander-mode exponents");
  return criteria_verdict(necessary_lower_fun(l, e, range), cert);
}

}  // namespace fmb
