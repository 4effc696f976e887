#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "fmb/errors.hpp"
#include "fmb/io.hpp"
#include "fmb/monotone.hpp"
#include "fmb/netspace.hpp"
#include "fmb/rearrange.hpp"

namespace {

using fmb::io::Json;

struct SymbolArgs {
  std::string example;
  std::string file;
  std::map<std::string, double> params;
  std::optional<double> r, alpha, gamma, tau;
  std::optional<int> K, kmin, kmax;
};

struct ReportArgs {
  SymbolArgs sym;
  std::string p = "4/3";
  std::string q = "4";
  double mesh = 1.0 / 1024.0;
  bool opnorm = false;
  std::size_t N = 1024;
  double L = 256.0;
  int iters = 200;
  int restarts = 16;
  std::uint64_t seed = 0;
  std::string out;
  std::string blocks_csv;
  std::string trajectory_csv;
  std::string family = "all";
  int block_k = 0;
};

void add_symbol_options(CLI::App* cmd, SymbolArgs& s) {
  auto* ex = cmd->add_option("--example", s.example, "builtin example name");
  auto* file = cmd->add_option("--symbol", s.file, "symbol description file (JSON)");
  ex->excludes(file);
  cmd->add_option("--r", s.r, "example parameter r");
  cmd->add_option("--alpha", s.alpha, "example parameter alpha");
  cmd->add_option("--gamma", s.gamma, "example parameter gamma");
  cmd->add_option("--tau", s.tau, "example parameter tau");
  cmd->add_option("--K", s.K, "truncation depth");
  cmd->add_option("--kmin", s.kmin, "lowest continuous block");
  cmd->add_option("--kmax", s.kmax, "highest continuous block");
}

std::map<std::string, double> example_params(const SymbolArgs& s) {
  std::map<std::string, double> p;
  if (s.r) p["r"] = *s.r;
  if (s.alpha) p["alpha"] = *s.alpha;
  if (s.gamma) p["gamma"] = *s.gamma;
  if (s.tau) p["tau"] = *s.tau;
  if (s.K) p["K"] = *s.K;
  if (s.kmin) p["kmin"] = *s.kmin;
  if (s.kmax) p["kmax"] = *s.kmax;
  return p;
}

fmb::io::LoadedSymbol load(const SymbolArgs& s, Json& echo) {
  if (s.example.empty() == s.file.empty()) throw fmb::ConfigError("give exactly one of --example or --symbol");
  if (!s.example.empty()) {
    const auto params = example_params(s);
    Json d = {{"kind", "builtin"}, {"builtin", s.example}, {"parameters", params}};
    auto ex = fmb::make_example(s.example, params);
    echo["symbol"] = d;
    return fmb::io::LoadedSymbol{ex.symbol, ex, d};
  }
  if (s.r || s.alpha || s.gamma || s.tau || s.K)
    throw fmb::ConfigError("example parameters need --example");
  auto loaded = fmb::io::load_symbol_file(s.file);
  echo["symbol"] = {{"kind", "file"}, {"path", s.file}, {"description", loaded.description}};
  return loaded;
}

fmb::BlockRange range_for(const SymbolArgs& s, const fmb::io::LoadedSymbol& l) {
  fmb::BlockRange r = l.example ? l.example->range : fmb::BlockRange{};
  if (s.kmin) r.kmin = *s.kmin;
  if (s.kmax) r.kmax = *s.kmax;
  return r;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fmb::ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_opnorm_args(const ReportArgs& a) {
  if (a.iters < 1 || a.restarts < 1) throw fmb::ConfigError("--iters and --restarts must be >= 1");
  if (a.N < 2 || (a.N & (a.N - 1)) != 0) throw fmb::ConfigError("--N must be a power of two");
  if (!(a.L > 0.0)) throw fmb::ConfigError("--L must be > 0");
}

fmb::OpNormEstimate run_opnorm(const fmb::AnySymbol& s, double p, double q, const ReportArgs& a) {
  fmb::OpNormOptions o;
  o.iterations = a.iters;
  o.restarts = a.restarts;
  o.seed = a.seed;
  if (const auto* seq = std::get_if<fmb::SeqSymbol>(&s))
    return fmb::estimate_opnorm(fmb::DiscreteMultiplier::periodic(*seq, a.N), p, q, o);
  return fmb::estimate_opnorm(fmb::make_line_multiplier(std::get<fmb::FunSymbol>(s), a.N, a.L), p, q, o);
}

Json opnorm_config(const ReportArgs& a, const fmb::AnySymbol& s) {
  Json c = {{"N", a.N}, {"iters", a.iters}, {"restarts", a.restarts}, {"seed", a.seed}};
  if (std::holds_alternative<fmb::FunSymbol>(s)) c["L"] = a.L;
  c["model"] = std::holds_alternative<fmb::SeqSymbol>(s) ? "periodic" : "line";
  return c;
}

int cmd_report(const ReportArgs& a) {
  Json out;
  out["schema_version"] = fmb::io::kSchemaVersion;
  out["command"] = "report";
  Json config;
  const auto loaded = load(a.sym, config);
  const double p = fmb::io::parse_number(a.p);
  const double q = fmb::io::parse_number(a.q);
  const auto e = fmb::make_exponents(p, q, fmb::ExponentMode::hoermander);
  if (!(a.mesh > 0.0 && a.mesh <= 1.0)) throw fmb::ConfigError("--mesh must be in (0, 1]");
  if (a.opnorm) check_opnorm_args(a);
  config["p"] = a.p;
  config["q"] = a.q;
  config["mesh"] = a.mesh;
  const auto range = range_for(a.sym, loaded);
  const bool fun = std::holds_alternative<fmb::FunSymbol>(loaded.symbol);
  if (fun) config["block_range"] = {range.kmin, range.kmax};
  if (a.opnorm) config["opnorm"] = opnorm_config(a, loaded.symbol);
  out["config"] = config;

  fmb::SandwichOptions so;
  so.range = range;
  so.mesh.relative = a.mesh;
  fmb::SandwichReport rep;
  fmb::MonotoneCertificate cert;
  if (fun) {
    const auto& f = std::get<fmb::FunSymbol>(loaded.symbol);
    rep = fmb::sandwich(f, e, so);
    std::vector<double> tg;
    for (int k = range.kmin; k <= range.kmax + 1; ++k) tg.push_back(fmb::exp2i(k));
    cert = fmb::monotone_constant_fun(f, fmb::blocks_set(range.kmin, range.kmax), tg);
  } else {
    const auto& s = std::get<fmb::SeqSymbol>(loaded.symbol);
    rep = fmb::sandwich(s, e, so);
    cert = fmb::monotone_constant_seq(s);
  }
  if (a.opnorm) {
    const auto est = run_opnorm(loaded.symbol, p, q, a);
    rep.empirical_opnorm = est.value;
  }
  out["report"] = fmb::io::to_json(rep);
  auto c = fmb::io::to_json(cert);
  c["provenance"] = {{"module", "monotone"}, {"operation", fun ? "monotone_constant_fun" : "monotone_constant_seq"}};
  out["monotone_certificate"] = c;
  out["verdict"] = fmb::to_string(fmb::criteria_verdict(rep.lower_necessary, cert));
  write_text(a.out, dump(out));
  if (!a.blocks_csv.empty()) write_text(a.blocks_csv, rep.per_block_csv());
  return 0;
}

int cmd_opnorm(const ReportArgs& a) {
  Json out;
  out["schema_version"] = fmb::io::kSchemaVersion;
  out["command"] = "opnorm";
  Json config;
  const auto loaded = load(a.sym, config);
  const double p = fmb::io::parse_number(a.p);
  const double q = fmb::io::parse_number(a.q);
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q))
    throw fmb::ConfigError("opnorm needs 1 < p, q < inf");
  check_opnorm_args(a);
  config["p"] = a.p;
  config["q"] = a.q;
  config["opnorm"] = opnorm_config(a, loaded.symbol);
  out["config"] = config;
  const auto est = run_opnorm(loaded.symbol, p, q, a);
  auto j = fmb::io::to_json(est);
  j["N"] = a.N;
  j["provenance"] = {{"module", "opnorm"}, {"operation", "estimate_opnorm"}};
  out["estimate"] = j;
  write_text(a.out, dump(out));
  if (!a.trajectory_csv.empty()) write_text(a.trajectory_csv, est.to_csv());
  return 0;
}

int cmd_profile(const ReportArgs& a) {
  Json config;
  const auto loaded = load(a.sym, config);
  fmb::IntervalFamily fam;
  if (a.family == "block")
    fam = fmb::IntervalFamily::block(a.block_k);
  else if (a.family != "all")
    throw fmb::ConfigError("--family must be 'all' or 'block'");
  fmb::AveragedProfile prof;
  if (const auto* s = std::get_if<fmb::SeqSymbol>(&loaded.symbol)) {
    if (fam.kind == fmb::IntervalFamily::Kind::within_block && fam.k < 0)
      throw fmb::ConfigError("discrete blocks need k >= 0");
    prof = fmb::averaged_profile_seq(*s, fam);
  } else {
    const auto range = range_for(a.sym, loaded);
    std::vector<double> tg;
    for (int k = range.kmin; k <= range.kmax + 1; ++k) tg.push_back(fmb::exp2i(k));
    fmb::Mesh m;
    m.relative = a.mesh;
    prof = fmb::averaged_profile_fun(std::get<fmb::FunSymbol>(loaded.symbol), fam,
                                     fmb::blocks_set(range.kmin, range.kmax), tg, m);
  }
  write_text(a.out, prof.to_csv());
  return 0;
}

int cmd_validate(double tolerance, const std::vector<std::string>& only, const std::string& json_out) {
  const auto names = fmb::example_names();
  for (const auto& n : only)
    if (std::find(names.begin(), names.end(), n) == names.end()) throw fmb::ConfigError("unknown example '" + n + "'");
  bool all = true;
  Json rows = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(8) << "example" << ' ' << std::setw(32) << "quantity" << ' ' << std::setw(11) << "kind"
     << ' ' << std::setw(12) << "basis" << ' ' << std::setw(22) << "expected" << ' ' << std::setw(22) << "observed"
     << " result\n";
  for (const auto& name : names) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    for (const auto& r : fmb::validate_example(fmb::make_example(name), tolerance)) {
      std::ostringstream ex, ob;
      ex << std::setprecision(15);
      ob << std::setprecision(15);
      if (r.expected)
        ex << *r.expected;
      else
        ex << "divergent";
      ob << r.observed.value << (r.observed.divergent ? " (div)" : "");
      os << std::setw(8) << r.example << ' ' << std::setw(32) << r.quantity << ' ' << std::setw(11)
         << fmb::to_string(r.kind) << ' ' << std::setw(12) << fmb::to_string(r.basis) << ' ' << std::setw(22)
         << ex.str() << ' ' << std::setw(22) << ob.str() << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
      all = all && r.pass;
      rows.push_back(fmb::io::to_json(r));
    }
  }
  std::cout << os.str();
  if (!json_out.empty()) {
    Json out = {{"schema_version", fmb::io::kSchemaVersion},
                {"command", "validate-examples"},
                {"config", {{"tolerance", tolerance}, {"only", only}}},
                {"rows", rows}};
    write_text(json_out, dump(out));
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and empirical norms for Fourier multipliers"};
  app.require_subcommand(1);

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "sandwich report for a symbol");
  add_symbol_options(report, rep.sym);
  report->add_option("--p", rep.p, "source exponent (fractions allowed)");
  report->add_option("--q", rep.q, "target exponent (fractions allowed)");
  report->add_option("--mesh", rep.mesh, "relative cell width for function symbols");
  report->add_flag("--opnorm", rep.opnorm, "add an empirical operator-norm estimate");
  report->add_option("--N", rep.N, "sample count (power of two)");
  report->add_option("--L", rep.L, "line-model domain length");
  report->add_option("--iters", rep.iters, "iterations per restart");
  report->add_option("--restarts", rep.restarts, "restarts");
  report->add_option("--seed", rep.seed, "random seed");
  report->add_option("--out", rep.out, "report JSON path (default stdout)");
  report->add_option("--blocks-csv", rep.blocks_csv, "per-block table CSV path");

  double tolerance = 0.02;
  std::vector<std::string> only;
  std::string validate_json;
  auto* validate = app.add_subcommand("validate-examples", "check every named example");
  validate->add_option("--tolerance", tolerance, "relative tolerance for quadrature rows");
  validate->add_option("--only", only, "restrict to these examples");
  validate->add_option("--json", validate_json, "also write rows as JSON");

  ReportArgs op;
  op.p = "2";
  op.q = "2";
  auto* opn = app.add_subcommand("opnorm", "empirical Lp -> Lq norm estimate");
  add_symbol_options(opn, op.sym);
  opn->add_option("--p", op.p, "source exponent");
  opn->add_option("--q", op.q, "target exponent");
  opn->add_option("--N", op.N, "sample count (power of two)");
  opn->add_option("--L", op.L, "line-model domain length");
  opn->add_option("--iters", op.iters, "iterations per restart");
  opn->add_option("--restarts", op.restarts, "restarts");
  opn->add_option("--seed", op.seed, "random seed");
  opn->add_option("--out", op.out, "estimate JSON path (default stdout)");
  opn->add_option("--trajectory-csv", op.trajectory_csv, "per-restart best ratios CSV path");

  ReportArgs pr;
  auto* prof = app.add_subcommand("profile", "averaged profile CSV");
  add_symbol_options(prof, pr.sym);
  prof->add_option("--family", pr.family, "all | block");
  prof->add_option("--k", pr.block_k, "block index for --family block");
  prof->add_option("--mesh", pr.mesh, "relative cell width for function symbols");
  prof->add_option("--out", pr.out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*report) return cmd_report(rep);
    if (*validate) return cmd_validate(tolerance, only, validate_json);
    if (*opn) return cmd_opnorm(op);
    if (*prof) return cmd_profile(pr);
  } catch (const fmb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const fmb::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
