#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmb/grid.hpp"
#include "fmb/symbols.hpp"

namespace fmb {

/// A computed quantity with divergence evidence. `growth` holds the values on
/// successively doubled windows (the last entry equals `value`) and
/// `growth_scales` the matching window sizes.
struct BoundValue {
  double value = 0.0;
  bool divergent = false;
  std::vector<double> growth;
  std::vector<double> growth_scales;
  std::vector<std::string> flags;
};

struct BlockEntry {
  int k = 0;
  double value = 0.0;
  bool partial = false;
};

struct BlockBound {
  double value = 0.0;
  int argmax_k = 0;
  bool divergent = false;
  std::vector<BlockEntry> blocks;
  std::vector<std::string> flags;
};

struct LizorkinBlock {
  int k = 0;
  double positive = 0.0;  // 2^{k/r} × variation over the positive half
  double negative = 0.0;  // same over the negative half
  double value = 0.0;     // positive + negative
};

struct LizorkinBound {
  double value = 0.0;
  int argmax_k = 0;
  std::vector<LizorkinBlock> blocks;
  std::vector<std::string> flags;
};

/// Continuous block range k in [kmin, kmax].
struct BlockRange {
  int kmin = -8;
  int kmax = 12;
};

inline constexpr int kGrowthLevels = 8;

BlockBound hoermander_upper_seq(const SeqSymbol& l, const ExponentTriple& e);
BlockBound hoermander_upper_fun(const FunSymbol& l, const ExponentTriple& e, BlockRange range = {},
                                const Mesh& mesh = {});

BoundValue hoermander_classic_seq(const SeqSymbol& l, const ExponentTriple& e);
BoundValue hoermander_classic_fun(const FunSymbol& l, const ExponentTriple& e, BlockRange range = {},
                                  const Mesh& mesh = {});

/// kmax < 0 selects the largest block not cut by the window.
LizorkinBound lizorkin_upper_seq(const SeqSymbol& l, const ExponentTriple& e, int kmax = -1);
LizorkinBound lizorkin_upper_fun(const FunSymbol& l, const ExponentTriple& e, BlockRange range = {});

struct ClassicTerm {
  double size = 0.0;        // |n|^{1/r} |λ_n|
  double difference = 0.0;  // |n|^{1/r + 1} |λ_n − λ_{n+1}|
  [[nodiscard]] double total() const { return size + difference; }
};
ClassicTerm lizorkin_classic_term(const SeqSymbol& l, Index n, const ExponentTriple& e);
ClassicTerm lizorkin_classic_term(const FunSymbol& l, double x, const ExponentTriple& e);

BoundValue lizorkin_classic_seq(const SeqSymbol& l, const ExponentTriple& e);
BoundValue lizorkin_classic_fun(const FunSymbol& l, const ExponentTriple& e, BlockRange range = {},
                                const Mesh& mesh = {});

BoundValue necessary_lower_seq(const SeqSymbol& l, const ExponentTriple& e);
BoundValue necessary_lower_fun(const FunSymbol& l, const ExponentTriple& e, BlockRange range = {},
                               const Mesh& mesh = {1.0 / 32.0, 16});

BlockBound tau_to_tau_upper(const SeqSymbol& l, double tau);

/// V_n = Σ_{m=2^n}^{2^{n+1}-1} (|λ_m − λ_{m−1}| + |λ_{−m} − λ_{−m+1}|) for n = 0..nmax;
/// growth holds the running sup.
BoundValue marcinkiewicz_variation(const SeqSymbol& l, int nmax = -1);

struct SandwichOptions {
  BlockRange range;
  Mesh mesh;
  Mesh lower_mesh{1.0 / 32.0, 16};
};

struct SandwichReport {
  ExponentTriple exponents;
  BoundValue lower_necessary;
  BlockBound upper_hoermander_block;
  BoundValue upper_hoermander_classic;
  std::optional<LizorkinBound> upper_lizorkin_dyadic;
  std::optional<BoundValue> upper_lizorkin_classic;
  std::optional<double> empirical_opnorm;
  std::vector<BlockEntry> per_block_table;
  double ratio = 0.0;  // lower / block upper (0 when the upper bound is 0)

  [[nodiscard]] std::string per_block_csv() const;
};

SandwichReport sandwich(const SeqSymbol& l, const ExponentTriple& e, const SandwichOptions& opts = {});
SandwichReport sandwich(const FunSymbol& l, const ExponentTriple& e, const SandwichOptions& opts = {});

}  // namespace fmb
