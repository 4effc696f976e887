#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fmb/bounds.hpp"
#include "fmb/symbols.hpp"

namespace fmb {

using AnySymbol = std::variant<SeqSymbol, FunSymbol>;

struct Observed {
  double value = 0.0;
  bool divergent = false;
};

struct NamedExample;

struct ExpectedEntry {
  enum class Kind { exact, quadrature, divergence };
  enum class Basis { literature, closed_form };
  std::string quantity;
  std::optional<double> value;  // empty for divergence entries
  Kind kind = Kind::exact;
  Basis basis = Basis::literature;
  std::function<Observed(const NamedExample&)> compute;
};

struct NamedExample {
  std::string name;
  std::map<std::string, double> parameters;
  AnySymbol symbol;
  ExponentTriple exponents;
  BlockRange range;
  std::vector<ExpectedEntry> expected;

  [[nodiscard]] const SeqSymbol& seq() const { return std::get<SeqSymbol>(symbol); }
  [[nodiscard]] const FunSymbol& fun() const { return std::get<FunSymbol>(symbol); }
  [[nodiscard]] bool is_seq() const { return std::holds_alternative<SeqSymbol>(symbol); }
};

/// Exponents with 1/p = 1/2 + 1/(2r), 1/q = 1/2 − 1/(2r).
ExponentTriple exponents_for_r(double r, ExponentMode mode);

/// Even; λ(ξ) = (|ξ| − 2^k)^{−1/r} for |ξ| ∈ (2^k, 2^{k+1}), every k ∈ Z.
NamedExample example_exmH1(double r = 2.0, BlockRange range = {});
/// λ_j = (j + 1 − 2^k)^{−1/r} for j ∈ [2^k, 2^{k+1}), k = 0..K; zero for j ≤ 0.
NamedExample example_examH2(double r = 2.0, int K = 12);
/// Even; λ(ξ) = (2 − |ξ|)^α for |ξ| ≤ 2, zero beyond.
NamedExample example_examL1(double alpha = 0.5, double r = 6.0, BlockRange range = {});
/// λ_0 = γ = 1/(1 − 2^{−1/r}), λ = γ − Σ_{j≤k} 2^{−j/r} on [2^k, 2^{k+1}), even.
NamedExample example_examL2(double r = 6.0, int K = 12);
/// 2^{−k/r}(2 − |2^k + 2 − x|)^γ on [2^k, 2^k + 4], k ≥ 2.
NamedExample example_laz1(double r = 6.0, double gamma = 0.5, BlockRange range = {});
/// λ_m = 2^{−k/r} at m = 2^k + 1, k = 2..K.
NamedExample example_laz2(double r = 6.0, int K = 12);
/// λ_0 = 0, λ_{±k} = (−1)^k k^{−|τ−2|/(2τ)} for 1 ≤ k < 2^{K+1}.
NamedExample example_osc(double tau = 3.0, int K = 13);

std::vector<std::string> example_names();
/// Builds a named example; unknown parameter keys or names throw ConfigError.
NamedExample make_example(const std::string& name, const std::map<std::string, double>& params = {});

struct CheckRow {
  std::string example;
  std::string quantity;
  std::optional<double> expected;
  Observed observed;
  ExpectedEntry::Kind kind = ExpectedEntry::Kind::exact;
  ExpectedEntry::Basis basis = ExpectedEntry::Basis::literature;
  bool pass = false;
};

inline constexpr double kExactTolerance = 1e-12;

/// Exact rows: relative error <= 1e-12. Quadrature rows: relative error < tolerance.
/// Divergence rows: divergence flag set.
std::vector<CheckRow> validate_example(const NamedExample& ex, double tolerance = 0.02);

std::string to_string(ExpectedEntry::Kind k);
std::string to_string(ExpectedEntry::Basis b);

}  // namespace fmb
