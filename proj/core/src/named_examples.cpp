#include "fmb/named_examples.hpp"

#include <cmath>
#include <numbers>

#include "fmb/errors.hpp"
#include "fmb/rearrange.hpp"

namespace fmb {

namespace {

using Kind = ExpectedEntry::Kind;
using Basis = ExpectedEntry::Basis;

ExpectedEntry entry(std::string q, std::optional<double> v, Kind k, Basis b,
                    std::function<Observed(const NamedExample&)> f) {
  return ExpectedEntry{std::move(q), v, k, b, std::move(f)};
}

Observed of(const BoundValue& b) { return {b.value, b.divergent}; }

int floor_log2(double x) {
  int e = 0;
  std::frexp(x, &e);
  return e - 1;
}

void check_r(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) throw ConfigError("r must be finite and > 1");
}

void check_K(int K, int hi) {
  if (K < 1 || K > hi) throw ConfigError("K must be in [1, " + std::to_string(hi) + "]");
}

}  // namespace

ExponentTriple exponents_for_r(double r, ExponentMode mode) {
  check_r(r);
  const double p = 1.0 / (0.5 + 0.5 / r);
  const double q = 1.0 / (0.5 - 0.5 / r);
  return make_exponents(p, q, mode);
}

NamedExample example_exmH1(double r, BlockRange range) {
  check_r(r);
  FunSymbol f;
  f.evaluator = [r](double x) -> Complex {
    const double a = std::fabs(x);
    if (a == 0.0) return kInf;
    const double d = a - exp2i(floor_log2(a));
    return d == 0.0 ? kInf : std::pow(d, -1.0 / r);
  };
  for (int k = range.kmin; k <= range.kmax + 1; ++k) {
    f.singularities.push_back({exp2i(k), -1.0 / r});
    f.singularities.push_back({-exp2i(k), -1.0 / r});
  }
  f.real_valued = true;

  NamedExample ex{"exmH1", {{"r", r}, {"kmin", range.kmin}, {"kmax", range.kmax}}, f,
                  exponents_for_r(r, ExponentMode::hoermander), range, {}};
  ex.expected.push_back(entry("lorentz_fun_norm_positive_half", 1.0, Kind::quadrature, Basis::literature,
                              [](const NamedExample& e) {
                                double m = 0.0;
                                for (int k = e.range.kmin; k <= e.range.kmax; ++k)
                                  m = std::max(m, lorentz_fun_norm(e.fun(), e.exponents.r,
                                                                   {continuous_block(k).second}));
                                return Observed{m, false};
                              }));
  ex.expected.push_back(entry("upper_hoermander_block", std::exp2(1.0 / r), Kind::quadrature, Basis::closed_form,
                              [](const NamedExample& e) {
                                const auto b = hoermander_upper_fun(e.fun(), e.exponents, e.range);
                                return Observed{b.value, b.divergent};
                              }));
  ex.expected.push_back(entry("upper_hoermander_classic", std::nullopt, Kind::divergence, Basis::literature,
                              [](const NamedExample& e) {
                                return of(hoermander_classic_fun(e.fun(), e.exponents, e.range));
                              }));
  return ex;
}

NamedExample example_examH2(double r, int K) {
  check_r(r);
  check_K(K, 24);
  const Index n = (Index{1} << (K + 1));
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k <= K; ++k) {
    const Index a = Index{1} << k;
    for (Index j = a; j < 2 * a; ++j) v[static_cast<std::size_t>(j)] = std::pow(static_cast<double>(j + 1 - a), -1.0 / r);
  }
  NamedExample ex{"examH2", {{"r", r}, {"K", K}}, SeqSymbol::from_real(0, v),
                  exponents_for_r(r, ExponentMode::hoermander), {}, {}};
  ex.expected.push_back(entry("upper_hoermander_block", 1.0, Kind::exact, Basis::literature, [](const NamedExample& e) {
    const auto b = hoermander_upper_seq(e.seq(), e.exponents);
    return Observed{b.value, b.divergent};
  }));
  ex.expected.push_back(entry("upper_hoermander_classic", std::nullopt, Kind::divergence, Basis::literature,
                              [](const NamedExample& e) { return of(hoermander_classic_seq(e.seq(), e.exponents)); }));
  ex.expected.push_back(entry("lorentz_seq_norm_window", std::pow(K + 1.0, 1.0 / r), Kind::exact, Basis::closed_form,
                              [](const NamedExample& e) {
                                return Observed{lorentz_seq_norm(e.seq(), e.exponents.r, kInf), false};
                              }));
  return ex;
}

NamedExample example_examL1(double alpha, double r, BlockRange range) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0, 1)");
  check_r(r);
  FunSymbol f;
  f.evaluator = [alpha](double x) -> Complex {
    const double a = std::fabs(x);
    return a <= 2.0 ? std::pow(2.0 - a, alpha) : 0.0;
  };
  f.derivative = [alpha](double x) {
    const double a = std::fabs(x);
    if (a >= 2.0 || x == 0.0) return 0.0;
    const double d = alpha * std::pow(2.0 - a, alpha - 1.0);
    return x > 0.0 ? -d : d;
  };
  f.singularities = {{2.0, alpha - 1.0}, {-2.0, alpha - 1.0}};
  f.breakpoints = {0.0};
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  NamedExample ex{"examL1", {{"alpha", alpha}, {"r", r}, {"kmin", range.kmin}, {"kmax", range.kmax}}, f,
                  exponents_for_r(r, ExponentMode::lizorkin), range, {}};
  ex.expected.push_back(entry("upper_lizorkin_dyadic", 2.0, Kind::quadrature, Basis::closed_form,
                              [](const NamedExample& e) {
                                return Observed{lizorkin_upper_fun(e.fun(), e.exponents, e.range).value, false};
                              }));
  ex.expected.push_back(entry("upper_lizorkin_classic", std::nullopt, Kind::divergence, Basis::literature,
                              [](const NamedExample& e) { return of(lizorkin_classic_fun(e.fun(), e.exponents, e.range)); }));
  ex.expected.push_back(entry("sup_abs", std::pow(2.0, alpha), Kind::exact, Basis::closed_form,
                              [](const NamedExample& e) { return Observed{std::abs(e.fun()(0.0)), false}; }));
  return ex;
}

NamedExample example_examL2(double r, int K) {
  check_r(r);
  check_K(K, 24);
  const double rho = std::exp2(-1.0 / r);
  const double gamma = 1.0 / (1.0 - rho);
  const Index hi = (Index{1} << (K + 1)) - 1;
  std::vector<double> v(static_cast<std::size_t>(2 * hi + 1));
  auto at = [&](Index m) -> double& { return v[static_cast<std::size_t>(m + hi)]; };
  at(0) = gamma;
  for (int k = 0; k <= K; ++k) {
    const double tail = std::exp2(-(k + 1.0) / r) / (1.0 - rho);
    const Index a = Index{1} << k;
    for (Index m = a; m < 2 * a; ++m) at(m) = at(-m) = tail;
  }
  NamedExample ex{"examL2", {{"r", r}, {"K", K}}, SeqSymbol::from_real(-hi, v, true),
                  exponents_for_r(r, ExponentMode::lizorkin), {}, {}};
  ex.expected.push_back(entry("lizorkin_block_positive_max", 1.0, Kind::exact, Basis::literature,
                              [](const NamedExample& e) {
                                const auto b = lizorkin_upper_seq(e.seq(), e.exponents);
                                double worst = 1.0;
                                for (const auto& blk : b.blocks)
                                  if (std::fabs(blk.positive - 1.0) > std::fabs(worst - 1.0)) worst = blk.positive;
                                return Observed{worst, false};
                              }));
  ex.expected.push_back(entry("upper_lizorkin_dyadic", 2.0, Kind::exact, Basis::closed_form, [](const NamedExample& e) {
    return Observed{lizorkin_upper_seq(e.seq(), e.exponents).value, false};
  }));
  ex.expected.push_back(entry("upper_lizorkin_classic", std::nullopt, Kind::divergence, Basis::literature,
                              [](const NamedExample& e) { return of(lizorkin_classic_seq(e.seq(), e.exponents)); }));
  return ex;
}

NamedExample example_laz1(double r, double gamma, BlockRange range) {
  check_r(r);
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must be in (0, 1)");
  FunSymbol f;
  f.evaluator = [r, gamma](double x) -> Complex {
    if (x < 4.0) return 0.0;
    const int k = floor_log2(x);
    const double y = std::fabs(exp2i(k) + 2.0 - x);
    if (y > 2.0) return 0.0;
    return std::exp2(-k / r) * std::pow(2.0 - y, gamma);
  };
  f.derivative = [r, gamma](double x) {
    if (x < 4.0) return 0.0;
    const int k = floor_log2(x);
    const double s = x - (exp2i(k) + 2.0);
    const double y = std::fabs(s);
    if (y >= 2.0 || s == 0.0) return 0.0;
    const double d = std::exp2(-k / r) * gamma * std::pow(2.0 - y, gamma - 1.0);
    return s > 0.0 ? -d : d;
  };
  for (int k = std::max(2, range.kmin); k <= range.kmax; ++k) {
    f.singularities.push_back({exp2i(k), gamma - 1.0});
    f.singularities.push_back({exp2i(k) + 4.0, gamma - 1.0});
    f.breakpoints.push_back(exp2i(k) + 2.0);
  }
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  NamedExample ex{"Laz1", {{"r", r}, {"gamma", gamma}, {"kmin", range.kmin}, {"kmax", range.kmax}}, f,
                  exponents_for_r(r, ExponentMode::lizorkin), range, {}};
  ex.expected.push_back(entry("upper_lizorkin_dyadic", std::exp2(1.0 + gamma), Kind::quadrature, Basis::closed_form,
                              [](const NamedExample& e) {
                                return Observed{lizorkin_upper_fun(e.fun(), e.exponents, e.range).value, false};
                              }));
  return ex;
}

NamedExample example_laz2(double r, int K) {
  check_r(r);
  check_K(K, 24);
  const Index n = Index{1} << (K + 1);
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (int k = 2; k <= K; ++k) v[static_cast<std::size_t>((Index{1} << k) + 1)] = std::exp2(-k / r);
  NamedExample ex{"Laz2", {{"r", r}, {"K", K}}, SeqSymbol::from_real(0, v, true),
                  exponents_for_r(r, ExponentMode::lizorkin), {}, {}};
  ex.expected.push_back(entry("upper_lizorkin_dyadic", 2.0, Kind::exact, Basis::literature, [](const NamedExample& e) {
    return Observed{lizorkin_upper_seq(e.seq(), e.exponents).value, false};
  }));
  return ex;
}

NamedExample example_osc(double tau, int K) {
  if (!(tau > 1.0) || !std::isfinite(tau) || tau == 2.0) throw ConfigError("tau must be in (1, inf) and != 2");
  check_K(K, 24);
  const double s = std::fabs(tau - 2.0) / (2.0 * tau);
  const Index hi = (Index{1} << (K + 1)) - 1;
  std::vector<double> v(static_cast<std::size_t>(2 * hi + 1), 0.0);
  for (Index k = 1; k <= hi; ++k) {
    const double x = (k % 2 == 0 ? 1.0 : -1.0) * std::pow(static_cast<double>(k), -s);
    v[static_cast<std::size_t>(hi + k)] = x;
    v[static_cast<std::size_t>(hi - k)] = x;
  }
  NamedExample ex{"osc", {{"tau", tau}, {"K", K}}, SeqSymbol::from_real(-hi, v, true),
                  make_exponents(2.0, 2.0, ExponentMode::hoermander), {}, {}};
  ex.expected.push_back(entry("tau_to_tau_upper", std::exp2(s), Kind::exact, Basis::closed_form,
                              [tau](const NamedExample& e) {
                                const auto b = tau_to_tau_upper(e.seq(), tau);
                                return Observed{b.value, b.divergent};
                              }));
  ex.expected.push_back(entry("marcinkiewicz_variation", std::nullopt, Kind::divergence, Basis::literature,
                              [](const NamedExample& e) { return of(marcinkiewicz_variation(e.seq())); }));
  return ex;
}

std::vector<std::string> example_names() { return {"exmH1", "examH2", "examL1", "examL2", "Laz1", "Laz2", "osc"}; }

NamedExample make_example(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&](const std::string& key, double def) {
    const auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const char* a : keys) ok = ok || k == a;
      if (!ok) throw ConfigError("parameter '" + k + "' does not apply to " + name);
    }
  };
  auto as_int = [](double x, const char* what) {
    if (x != std::floor(x)) throw ConfigError(std::string(what) + " must be an integer");
    return static_cast<int>(x);
  };
  auto range = [&]() {
    return BlockRange{as_int(get("kmin", -8), "kmin"), as_int(get("kmax", 12), "kmax")};
  };
  if (name == "exmH1") {
    allow({"r", "kmin", "kmax"});
    return example_exmH1(get("r", 2.0), range());
  }
  if (name == "examH2") {
    allow({"r", "K"});
    return example_examH2(get("r", 2.0), as_int(get("K", 12), "K"));
  }
  if (name == "examL1") {
    allow({"alpha", "r", "kmin", "kmax"});
    return example_examL1(get("alpha", 0.5), get("r", 6.0), range());
  }
  if (name == "examL2") {
    allow({"r", "K"});
    return example_examL2(get("r", 6.0), as_int(get("K", 12), "K"));
  }
  if (name == "Laz1") {
    allow({"r", "gamma", "kmin", "kmax"});
    return example_laz1(get("r", 6.0), get("gamma", 0.5), range());
  }
  if (name == "Laz2") {
    allow({"r", "K"});
    return example_laz2(get("r", 6.0), as_int(get("K", 12), "K"));
  }
  if (name == "osc") {
    allow({"tau", "K"});
    return example_osc(get("tau", 3.0), as_int(get("K", 13), "K"));
  }
  throw ConfigError("unknown example '" + name + "'");
}

std::vector<CheckRow> validate_example(const NamedExample& ex, double tolerance) {
  if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be >= 0");
  std::vector<CheckRow> rows;
  for (const auto& e : ex.expected) {
    CheckRow row;
    row.example = ex.name;
    row.quantity = e.quantity;
    row.expected = e.value;
    row.kind = e.kind;
    row.basis = e.basis;
    row.observed = e.compute(ex);
    const double obs = row.observed.value;
    switch (e.kind) {
      case Kind::divergence:
        row.pass = row.observed.divergent;
        break;
      case Kind::exact:
        row.pass = !row.observed.divergent && std::fabs(obs - *e.value) <= kExactTolerance * std::fabs(*e.value);
        break;
      case Kind::quadrature:
        row.pass = !row.observed.divergent && std::fabs(obs - *e.value) < tolerance * std::fabs(*e.value);
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(ExpectedEntry::Kind k) {
  switch (k) {
    case Kind::exact: return "exact";
    case Kind::quadrature: return "quadrature";
    case Kind::divergence: return "divergence";
  }
  return "exact";
}

std::string to_string(ExpectedEntry::Basis b) {
  return b == Basis::literature ? "literature" : "closed_form";
}

}  // namespace fmb
