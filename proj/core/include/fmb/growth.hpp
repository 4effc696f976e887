#pragma once

#include <span>

namespace fmb {

/// Divergence evidence from values computed on successively doubled windows.
///
/// Flags growth when either the last two ratios are both >= 2^{inv_r / 2}, or
/// s = v^{1/inv_r} keeps increasing by a non-shrinking amount per doubling
/// (logarithmic blow-up): over the last four values every increment of s is at
/// least 1e-3 of the last s and at least 0.9 times the one before. For
/// inv_r = 0, s = v.
bool is_divergent(std::span<const double> values, double inv_r);

}  // namespace fmb
