#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fmb/bounds.hpp"
#include "fmb/named_examples.hpp"
#include "fmb/netspace.hpp"
#include "fmb/opnorm.hpp"
#include "fmb/rearrange.hpp"
#include "oracles.hpp"

using namespace fmb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool close(double x, double y, double rel) { return std::fabs(x - y) <= rel * std::max(std::fabs(y), 1e-300); }

FunSymbol gaussian(double a) {
  FunSymbol f;
  f.evaluator = [a](double x) { return Complex{std::exp(-a * x * x), 0.0}; };
  f.derivative = [a](double x) { return -2.0 * a * x * std::exp(-a * x * x); };
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  return f;
}

// (1 + (x/s)^2)^{-2}
FunSymbol bump(double s) {
  FunSymbol f;
  f.evaluator = [s](double x) {
    const double u = 1.0 + (x / s) * (x / s);
    return Complex{1.0 / (u * u), 0.0};
  };
  f.derivative = [s](double x) {
    const double u = 1.0 + (x / s) * (x / s);
    return -4.0 * x / (s * s * u * u * u);
  };
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  return f;
}

// x^m e^{-x/s} on x > 0
FunSymbol one_sided(int m, double s) {
  FunSymbol f;
  f.evaluator = [m, s](double x) { return Complex{x > 0.0 ? std::pow(x, m) * std::exp(-x / s) : 0.0, 0.0}; };
  f.derivative = [m, s](double x) {
    return x > 0.0 ? (m * std::pow(x, m - 1) - std::pow(x, m) / s) * std::exp(-x / s) : 0.0;
  };
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  return f;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double r = 2.0;
  const auto ex = example_exmH1(r, {-5, 10});
  const auto b = hoermander_upper_fun(ex.fun(), ex.exponents, ex.range);
  bool blocks_ok = true;
  for (const auto& blk : b.blocks) blocks_ok = blocks_ok && close(blk.value, 1.0, 0.02);
  const auto c = hoermander_classic_fun(ex.fun(), ex.exponents, ex.range);
  const double secs = seconds_since(t0);
  double half_dev = 0.0;
  for (int k = -5; k <= 10; ++k)
    half_dev = std::max(half_dev, std::fabs(lorentz_fun_norm(ex.fun(), r, {continuous_block(k).second}) - 1.0));
  const bool growth_ok = c.growth.size() >= 2 && c.growth_scales.back() / c.growth_scales.front() >= 100.0;
  Outcome o;
  o.pass = blocks_ok && c.divergent && growth_ok && secs < 5.0;
  o.detail = "block sup " + fmt("%.6f", b.value) + " (target 1 +- 2%), classic divergent=" +
             (c.divergent ? "yes" : "no") + ", runtime " + fmt("%.2fs", secs) + "; positive half max |v-1| " +
             fmt("%.2e", half_dev);
  return o;
}

Outcome c2() {
  const auto t0 = std::chrono::steady_clock::now();
  const double r = 2.0;
  const int K = 12;
  const auto ex = example_examH2(r, K);
  const auto b = hoermander_upper_seq(ex.seq(), ex.exponents);
  bool blocks_ok = !b.blocks.empty();
  for (const auto& blk : b.blocks) blocks_ok = blocks_ok && blk.k <= K && close(blk.value, 1.0, 1e-12);
  const auto c = hoermander_classic_seq(ex.seq(), ex.exponents);
  const auto ex2 = example_examH2(r, K + static_cast<int>(r));
  const auto c2v = hoermander_classic_seq(ex2.seq(), ex2.exponents);
  const double secs = seconds_since(t0);
  double support = 0.0;
  for (const auto& v : ex.seq().values()) support += (v != Complex{}) ? 1.0 : 0.0;
  const double target = std::pow(support, 1.0 / r);
  const bool global_ok = close(c.value, target, 1e-12);
  const bool doubling_ok = close(c2v.value / c.value, 2.0, 1e-12);
  Outcome o;
  o.pass = blocks_ok && global_ok && doubling_ok && c.divergent && secs < 1.0;
  o.detail = std::string("blocks=1: ") + (blocks_ok ? "yes" : "no") + ", global " + fmt("%.6f", c.value) +
             " vs N^(1/r) " + fmt("%.6f", target) + ", K->K+r ratio " + fmt("%.6f", c2v.value / c.value) +
             " (target 2), divergent=" + (c.divergent ? "yes" : "no") + ", runtime " + fmt("%.3fs", secs);
  return o;
}

Outcome c3() {
  const auto t0 = std::chrono::steady_clock::now();
  const double r = 6.0;
  const int K = 20;
  const auto ex = example_examL2(r, K);
  const auto b = lizorkin_upper_seq(ex.seq(), ex.exponents);
  bool blocks_ok = b.blocks.size() == static_cast<std::size_t>(K + 1);
  double two_sided = 0.0;
  for (const auto& blk : b.blocks) {
    blocks_ok = blocks_ok && close(blk.positive, 1.0, 1e-12) && close(blk.negative, 1.0, 1e-12);
    two_sided = std::max(two_sided, blk.value);
  }
  const auto c = lizorkin_classic_seq(ex.seq(), ex.exponents);
  bool terms_ok = true;
  for (int k = 1; k <= K; ++k) {
    const double n = std::exp2(k) - 1.0;
    const auto t = lizorkin_classic_term(ex.seq(), static_cast<Index>(n), ex.exponents);
    terms_ok = terms_ok && close(t.difference, std::pow(n / std::exp2(k), 1.0 / r) * n, 1e-12);
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = blocks_ok && terms_ok && c.divergent && secs < 1.0;
  o.detail = std::string("one-sided block terms=1: ") + (blocks_ok ? "yes" : "no") + " (two-sided total " +
             fmt("%.12f", two_sided) + "), classic divergent=" + (c.divergent ? "yes" : "no") +
             ", difference terms match: " + (terms_ok ? "yes" : "no") + ", runtime " + fmt("%.3fs", secs);
  return o;
}

Outcome c4() {
  const auto ex = example_laz2(6.0, 12);
  const auto b = lizorkin_upper_seq(ex.seq(), ex.exponents);
  bool blocks_ok = true;
  for (const auto& blk : b.blocks)
    if (blk.k >= 2) blocks_ok = blocks_ok && close(blk.value, 2.0, 1e-12);
  Outcome o;
  o.pass = blocks_ok && close(b.value, 2.0, 1e-12);
  o.detail = "value " + fmt("%.15f", b.value) + ", blocks k>=2 equal 2: " + (blocks_ok ? "yes" : "no");
  return o;
}

Outcome c5() {
  const double tau = 3.0;
  const auto ex = example_osc(tau, 13);
  const auto b = tau_to_tau_upper(ex.seq(), tau);
  const auto v = marcinkiewicz_variation(ex.seq(), 12);
  const bool growth_ok = v.growth.size() == 13 && v.growth[12] >= 10.0 * v.growth[4];
  Outcome o;
  o.pass = b.value <= 1.0 + 1e-12 && growth_ok;
  o.detail = "tau-to-tau block sup " + fmt("%.12f", b.value) + " at k=" + std::to_string(b.argmax_k) +
             " (target <= 1), V_12/V_4 = " + fmt("%.2f", v.growth.size() == 13 ? v.growth[12] / v.growth[4] : 0.0);
  return o;
}

Outcome c6() {
  std::mt19937_64 rng(6001);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto l = oracle::random_seq(rng, -200, 401, trial % 2 == 0);
    const auto T = DiscreteMultiplier::periodic(l, 1024);
    double mx = 0.0;
    for (const auto& z : l.values()) mx = std::max(mx, std::abs(z));
    OpNormOptions opt;
    opt.seed = 1000 + static_cast<std::uint64_t>(trial);
    const auto est = estimate_opnorm(T, 2.0, 2.0, opt);
    worst = std::max(worst, std::fabs(est.value - mx) / mx);
  }
  return {worst <= 1e-9, "50 symbols, worst relative gap " + fmt("%.2e", worst)};
}

Outcome c7() {
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<int> len(1, 128);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = oracle::dyadic_values(rng, static_cast<std::size_t>(len(rng)));
    const auto a = SeqSymbol::from_real(-static_cast<Index>(v.size() / 2), v);
    const auto prof = averaged_profile_seq(a);
    for (double p : {1.25, 4.0 / 3.0, 2.0, 3.0, 6.0})
      if (prof.sup_form(p) != net_norm_seq(a, p)) ++mismatches;
  }
  return {mismatches == 0, "100 sequences x 5 exponents, mismatches " + std::to_string(mismatches)};
}

Outcome c8() {
  std::mt19937_64 rng(8001);
  std::uniform_int_distribution<int> len(1, 64);
  int avg_bad = 0;
  int net_bad = 0;
  int sort_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = oracle::dyadic_values(rng, static_cast<std::size_t>(len(rng)));
    const auto a = SeqSymbol::from_real(0, v);
    for (std::size_t t = 1; t <= v.size(); ++t)
      if (interval_avg_sup_seq(a, static_cast<Index>(t)).value != oracle::brute_avg_sup(v, t)) ++avg_bad;
    for (double p : {1.5, 2.0, 4.0})
      if (net_norm_seq(a, p) != oracle::brute_net_norm(v, p)) ++net_bad;
    std::vector<Complex> c(v.begin(), v.end());
    if (rearrangement_seq(a) != oracle::sorted_abs(c)) ++sort_bad;
  }
  return {avg_bad + net_bad + sort_bad == 0, "200 sequences, mismatches avg=" + std::to_string(avg_bad) +
                                                 " net=" + std::to_string(net_bad) + " sort=" + std::to_string(sort_bad)};
}

Outcome c9() {
  std::mt19937_64 rng(9001);
  std::uniform_int_distribution<int> len(1, 300);
  int bad = 0;
  double tightest = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(len(rng));
    const auto a = oracle::random_seq(rng, -static_cast<Index>(n / 3), n, trial % 2 == 1);
    for (double p : {2.0, 6.0}) {
      const double global = lorentz_seq_norm(a, p, kInf);
      for (const auto& blk : blocks_in_window({a.window_lo(), a.window_hi()})) {
        const double local = lorentz_seq_block_norm(a, p, kInf, blk.k);
        if (local > global) ++bad;
        if (global > 0.0) tightest = std::max(tightest, local / global);
      }
    }
  }
  return {bad == 0, "100 symbols, violations " + std::to_string(bad) + ", max block/global " + fmt("%.6f", tightest)};
}

Outcome c10() {
  std::vector<FunSymbol> fs;
  for (int m : {1, 2, 3, 4, 5})
    for (double s : {1.0, 3.0}) fs.push_back(one_sided(m, s));
  for (double a : {0.02, 0.05, 0.1, 0.3, 1.0, 2.0, 4.0}) fs.push_back(gaussian(a));
  for (double s : {0.5, 1.0, 2.0}) fs.push_back(bump(s));
  const double r = 6.0;
  const auto e = exponents_for_r(r, ExponentMode::lizorkin);
  const double stated = r * (1.0 - std::exp2(-1.0 / r));
  int fail_stated = 0;
  int fail_double = 0;
  double worst = 0.0;
  for (const auto& f : fs) {
    const double dy = lizorkin_upper_fun(f, e, {-8, 8}).value;
    const double cl = lizorkin_classic_fun(f, e, {-8, 8}).value;
    worst = std::max(worst, dy / (cl * stated));
    if (dy > cl * stated * (1.0 + 1e-6)) ++fail_stated;
    if (dy > cl * 2.0 * stated * (1.0 + 1e-6)) ++fail_double;
  }
  return {fail_stated == 0, std::to_string(fs.size()) + " symbols, over r(1-2^(-1/r)): " + std::to_string(fail_stated) +
                                ", max ratio " + fmt("%.4f", worst) + "; over 2r(1-2^(-1/r)): " + std::to_string(fail_double)};
}

Outcome c11() {
  const double r = 2.0;
  const auto e = exponents_for_r(r, ExponentMode::hoermander);
  const std::size_t N = 4096;
  std::vector<SeqSymbol> syms{example_examH2(r, 8).seq()};
  std::mt19937_64 rng(11001);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> v(512);
    for (auto& x : v) x = u(rng);
    syms.push_back(SeqSymbol::from_real(0, v));
  }
  double lo = kInf;
  double hi = 0.0;
  int tested = 0;
  for (const auto& l : syms) {
    for (int k = 0; k <= 8; ++k) {
      const Index a = Index{1} << k;
      for (Index len = 1; len <= a; len *= 2) {
        for (Index start : {a, 2 * a - len}) {
          const IndexRange e0{start, start + len - 1};
          double s = 0.0;
          for (Index m = e0.lo; m <= e0.hi; ++m) s += l[m].real();
          const double formula = std::pow(static_cast<double>(len), -1.0 / e.r_conj) * std::fabs(s);
          if (formula == 0.0) continue;
          const double q = witness_ratio(l, e0, e.p, e.q, N) / formula;
          lo = std::min(lo, q);
          hi = std::max(hi, q);
          ++tested;
        }
      }
    }
  }
  return {lo >= 0.1 && hi <= 10.0, std::to_string(tested) + " intervals, ratio range [" + fmt("%.4f", lo) + ", " +
                                      fmt("%.4f", hi) + "]"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome c12() {
  std::mt19937_64 rng(12001);
  const auto eh = make_exponents(4.0 / 3.0, 4.0, ExponentMode::hoermander);
  const auto el = exponents_for_r(6.0, ExponentMode::lizorkin);
  int exact_bad = 0;
  double generic_worst = 0.0;
  auto all_bounds = [&](const SeqSymbol& a) {
    std::vector<double> v{hoermander_upper_seq(a, eh).value, hoermander_classic_seq(a, eh).value,
                          necessary_lower_seq(a, eh).value, tau_to_tau_upper(a, 3.0).value};
    if (a.is_real()) {
      v.push_back(lizorkin_upper_seq(a, el).value);
      v.push_back(lizorkin_classic_seq(a, el).value);
    }
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_seq(rng, -40, 81, trial % 2 == 0);
    const auto base = all_bounds(a);
    for (double c : {2.0, -0.25, 8.0}) {
      const auto scaled = all_bounds(a.scaled(c));
      for (std::size_t i = 0; i < base.size(); ++i)
        if (scaled[i] != std::fabs(c) * base[i]) ++exact_bad;
    }
    const double c = -1.7;
    const auto scaled = all_bounds(a.scaled(c));
    for (std::size_t i = 0; i < base.size(); ++i)
      generic_worst = std::max(generic_worst, std::fabs(scaled[i] - 1.7 * base[i]) / std::max(1.7 * base[i], 1e-300));
  }
  {
    const auto f = gaussian(0.3);
    for (double c : {2.0, -0.5}) {
      const auto fc = f.scaled(c);
      const double m = std::fabs(c);
      if (hoermander_upper_fun(fc, eh, {-4, 4}).value != m * hoermander_upper_fun(f, eh, {-4, 4}).value) ++exact_bad;
      if (lizorkin_upper_fun(fc, el, {-4, 4}).value != m * lizorkin_upper_fun(f, el, {-4, 4}).value) ++exact_bad;
      if (lizorkin_classic_fun(fc, el, {-4, 4}).value != m * lizorkin_classic_fun(f, el, {-4, 4}).value) ++exact_bad;
    }
  }
  bool cli_ok = true;
  std::string cli_note = "CLI not built";
#ifdef FMB_CLI
  {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "fmb_acceptance";
    fs::create_directories(dir);
    const std::string base = std::string(FMB_CLI) +
                             " report --example examH2 --K 7 --opnorm --N 1024 --iters 40 --restarts 4 --seed 5 --out ";
    const auto a = dir / "a.json";
    const auto b = dir / "b.json";
    const int ra = std::system((base + a.string() + " 2>/dev/null").c_str());
    const int rb = std::system((base + b.string() + " 2>/dev/null").c_str());
    const std::string sa = slurp(a);
    cli_ok = ra == 0 && rb == 0 && !sa.empty() && sa == slurp(b);
    cli_note = std::string("CLI repeat identical: ") + (cli_ok ? "yes" : "no");
  }
#endif
  const bool pass = exact_bad == 0 && generic_worst <= 1e-12 && cli_ok;
  return {pass, "power-of-two scaling mismatches " + std::to_string(exact_bad) + ", generic c worst " +
                    fmt("%.2e", generic_worst) + ", " + cli_note};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exmH1 block weak norm and classic divergence", c1},
      {"examH2 block values, global growth, divergence", c2},
      {"examL2 Lizorkin block terms and classic divergence", c3},
      {"Laz2 Lizorkin value", c4},
      {"oscillating symbol tau-to-tau bound and variation growth", c5},
      {"p = q = 2 estimate equals max modulus", c6},
      {"profile sup form equals net norm", c7},
      {"brute-force and sorting oracles", c8},
      {"block Lorentz norm below global", c9},
      {"Lizorkin dyadic below classic with r(1-2^(-1/r))", c10},
      {"witness ratio band", c11},
      {"homogeneity and CLI determinism", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
