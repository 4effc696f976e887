#pragma once

#include <string>
#include <vector>

#include "fmb/bounds.hpp"
#include "fmb/grid.hpp"
#include "fmb/symbols.hpp"

namespace fmb {

struct MonotoneCertificate {
  double constant_C = 1.0;  // max ratio f*(t) / fbar(t), 0/0 counted as 1
  std::vector<double> checked_thresholds;
  std::vector<double> ratios;
  bool violated = false;     // fbar(t) = 0 while f*(t) > 0 somewhere
  double witness = 0.0;      // threshold with the largest ratio
  double constant_C_half = 1.0;  // same over the first half of the thresholds
  bool stable = false;       // |C − C_half| < 5% of C
};

/// Sequence certificate over all finite intervals in the window, t = 1..kmax
/// (kmax < 0: the window size).
MonotoneCertificate monotone_constant_seq(const SeqSymbol& a, Index kmax = -1);

/// Function certificate over all intervals inside the domain pieces. Thresholds
/// longer than every piece are skipped.
MonotoneCertificate monotone_constant_fun(const FunSymbol& f, const IntervalSet& domain,
                                          const std::vector<double>& tgrid, const Mesh& mesh = {1.0 / 64.0, 16});

enum class Verdict { bounded, unbounded, inapplicable };
std::string to_string(Verdict v);

/// bounded iff the certificate is usable and the necessary lower value does not diverge.
Verdict criteria_verdict(const BoundValue& lower, const MonotoneCertificate& cert);
Verdict criteria_verdict(const SeqSymbol& l, const ExponentTriple& e, const MonotoneCertificate& cert);
Verdict criteria_verdict(const FunSymbol& l, const ExponentTriple& e, const MonotoneCertificate& cert,
                         BlockRange range = {});

}  // namespace fmb
