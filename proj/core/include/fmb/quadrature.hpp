#pragma once

#include <functional>

#include "fmb/symbols.hpp"

namespace fmb {

struct QuadratureOptions {
  double tolerance = 1e-10;  // relative, per smooth piece
  unsigned max_depth = 15;
  int max_geometric_levels = 200;
};

/// ∫_a^b g with geometric subdivision toward endpoints flagged singular and
/// Gauss-Kronrod on every piece.
double integrate(const std::function<double(double)>& g, double a, double b, bool singular_a,
                 bool singular_b, const QuadratureOptions& opts = {});

/// ∫_a^b g for a symbol-aware integrand: splits at the symbol's hints and
/// breakpoints and treats hints as singular endpoints.
double integrate_split(const FunSymbol& f, const std::function<double(double)>& g, double a, double b,
                       const QuadratureOptions& opts = {});

Complex integrate_symbol(const FunSymbol& f, double a, double b, const QuadratureOptions& opts = {});

}  // namespace fmb
