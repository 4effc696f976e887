#pragma once

#include <vector>

#include "fmb/symbols.hpp"

namespace fmb {

/// Discretization controls for function symbols. Every piece between consecutive
/// split points gets ceil(1 / relative) uniform cells; cells touching a declared
/// singularity are further split geometrically `grading_depth` times.
struct Mesh {
  double relative = 1.0 / 1024.0;
  int grading_depth = 16;
  int shell_span = 24;  // dyadic shells kept below the top scale when a piece contains 0
};

/// Sorted split points inside [iv.lo, iv.hi]: endpoints, hints, breakpoints, and
/// ±2^j shells so every cell stays within one dyadic block.
std::vector<double> split_points(const FunSymbol& f, Interval iv, int shell_span = 24);

/// Grid nodes on one interval (sorted, endpoints included).
std::vector<double> grid_nodes(const FunSymbol& f, Interval iv, const Mesh& mesh);

struct Cell {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.0;  // |f| approximant on the cell
};

/// Piecewise-constant approximant of |f|. The level of a cell is the smallest
/// finite value of |f| at its midpoint and just inside both ends, which makes the
/// approximant exact in distribution for monotone power-law cells.
std::vector<Cell> cells(const FunSymbol& f, const IntervalSet& domain, const Mesh& mesh);

}  // namespace fmb
