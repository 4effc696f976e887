#include "fmb/io.hpp"

#include <cmath>
#include <fstream>

#include "fmb/errors.hpp"

namespace fmb::io {

namespace {

Complex parse_complex(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError("symbol values must be numbers or [re, im] pairs");
}

Json provenance(const char* module, const char* operation) {
  Json p;
  p["module"] = module;
  p["operation"] = operation;
  return p;
}

FunSymbol sampled_function(double a, double b, std::vector<double> v) {
  if (!(b > a)) throw ConfigError("domain must satisfy a < b");
  if (v.size() < 2) throw ConfigError("a sampled function needs at least two values");
  const double h = (b - a) / static_cast<double>(v.size() - 1);
  auto slot = [a, b, h, n = v.size()](double x, std::size_t& i, double& t) {
    if (x < a || x > b) return false;
    const double s = (x - a) / h;
    i = std::min(static_cast<std::size_t>(s), n - 2);
    t = s - static_cast<double>(i);
    return true;
  };
  FunSymbol f;
  f.evaluator = [v, slot](double x) -> Complex {
    std::size_t i = 0;
    double t = 0.0;
    if (!slot(x, i, t)) return 0.0;
    return v[i] + t * (v[i + 1] - v[i]);
  };
  f.derivative = [v, slot, h](double x) {
    std::size_t i = 0;
    double t = 0.0;
    if (!slot(x, i, t)) return 0.0;
    return (v[i + 1] - v[i]) / h;
  };
  for (std::size_t i = 0; i < v.size(); ++i) f.breakpoints.push_back(a + h * static_cast<double>(i));
  f.real_valued = true;
  f.vanishes_at_infinity = true;
  return f;
}

}  // namespace

double parse_number(const std::string& s) {
  auto one = [](const std::string& t) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      throw ConfigError("not a number: '" + t + "'");
    }
    if (pos != t.size()) throw ConfigError("not a number: '" + t + "'");
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return one(s);
  const double d = one(s.substr(slash + 1));
  if (d == 0.0) throw ConfigError("zero denominator in '" + s + "'");
  return one(s.substr(0, slash)) / d;
}

LoadedSymbol parse_symbol(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("symbol description needs a 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "seq" && kind != "fun") throw ConfigError("symbol kind must be 'seq' or 'fun'");
  LoadedSymbol out{SeqSymbol::zero(), std::nullopt, j};
  try {
    if (j.contains("builtin")) {
      std::map<std::string, double> params;
      if (j.contains("parameters"))
        for (const auto& [k, v] : j.at("parameters").items()) params[k] = v.get<double>();
      auto ex = make_example(j.at("builtin").get<std::string>(), params);
      if ((kind == "seq") != ex.is_seq()) throw ConfigError("builtin '" + ex.name + "' is not of kind " + kind);
      out.symbol = ex.symbol;
      out.example = std::move(ex);
      return out;
    }
    if (kind == "seq") {
      const auto w = j.at("window");
      const auto& vals = j.at("values");
      if (!w.is_array() || w.size() != 2) throw ConfigError("window must be [lo, hi]");
      const auto lo = w[0].get<Index>();
      const auto hi = w[1].get<Index>();
      if (!vals.is_array() || static_cast<Index>(vals.size()) != hi - lo + 1)
        throw ConfigError("values must have hi - lo + 1 entries");
      std::vector<Complex> v;
      for (const auto& x : vals) v.push_back(parse_complex(x));
      out.symbol = SeqSymbol(lo, std::move(v), j.value("decay_declared", false));
      return out;
    }
    const auto d = j.at("domain");
    if (!d.is_array() || d.size() != 2) throw ConfigError("domain must be [a, b]");
    out.symbol = sampled_function(d[0].get<double>(), d[1].get<double>(), j.at("values").get<std::vector<double>>());
    return out;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed symbol description: ") + e.what());
  }
}

LoadedSymbol load_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read symbol file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("symbol file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_symbol(j);
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json to_json(const ExponentTriple& e) {
  Json j;
  j["p"] = e.p;
  j["q"] = e.q;
  j["r"] = number(e.r);
  j["r_infinite"] = std::isinf(e.r);
  j["r_conj"] = e.r_conj;
  j["mode"] = e.mode == ExponentMode::hoermander ? "hoermander" : "lizorkin";
  return j;
}

Json to_json(const BoundValue& b) {
  Json j;
  j["value"] = number(b.value);
  j["divergent"] = b.divergent;
  Json g = Json::array();
  for (double x : b.growth) g.push_back(number(x));
  j["growth"] = g;
  j["growth_scales"] = b.growth_scales;
  j["flags"] = b.flags;
  return j;
}

Json to_json(const BlockBound& b) {
  Json j;
  j["value"] = number(b.value);
  j["divergent"] = b.divergent;
  j["argmax_k"] = b.argmax_k;
  Json blocks = Json::array();
  for (const auto& e : b.blocks) blocks.push_back({{"k", e.k}, {"value", number(e.value)}, {"partial", e.partial}});
  j["blocks"] = blocks;
  j["flags"] = b.flags;
  return j;
}

Json to_json(const LizorkinBound& b) {
  Json j;
  j["value"] = number(b.value);
  j["divergent"] = false;
  j["argmax_k"] = b.argmax_k;
  Json blocks = Json::array();
  for (const auto& e : b.blocks)
    blocks.push_back({{"k", e.k},
                      {"positive", number(e.positive)},
                      {"negative", number(e.negative)},
                      {"value", number(e.value)}});
  j["blocks"] = blocks;
  j["flags"] = b.flags;
  return j;
}

Json to_json(const MonotoneCertificate& c) {
  Json j;
  j["constant_C"] = number(c.constant_C);
  j["constant_C_half"] = number(c.constant_C_half);
  j["stable"] = c.stable;
  j["violated"] = c.violated;
  j["witness"] = c.witness;
  j["checked_thresholds"] = {{"min", c.checked_thresholds.empty() ? 0.0 : c.checked_thresholds.front()},
                             {"max", c.checked_thresholds.empty() ? 0.0 : c.checked_thresholds.back()},
                             {"count", c.checked_thresholds.size()}};
  return j;
}

Json to_json(const OpNormEstimate& e) {
  Json j;
  j["value"] = number(e.value);
  j["iterations"] = e.iterations;
  j["restarts"] = e.restarts;
  j["seed"] = e.seed;
  j["trajectory"] = e.trajectory;
  return j;
}

Json to_json(const CheckRow& r) {
  Json j;
  j["example"] = r.example;
  j["quantity"] = r.quantity;
  if (r.expected)
    j["expected"] = *r.expected;
  else
    j["expected"] = {{"divergent", true}};
  j["observed"] = {{"value", number(r.observed.value)}, {"divergent", r.observed.divergent}};
  j["kind"] = to_string(r.kind);
  j["basis"] = to_string(r.basis);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const SandwichReport& r) {
  Json j;
  j["exponents"] = to_json(r.exponents);
  auto with = [](Json v, const char* module, const char* op) {
    v["provenance"] = provenance(module, op);
    return v;
  };
  j["lower_necessary"] = with(to_json(r.lower_necessary), "bounds", "necessary_lower");
  j["upper_hoermander_block"] = with(to_json(r.upper_hoermander_block), "bounds", "hoermander_upper");
  j["upper_hoermander_classic"] = with(to_json(r.upper_hoermander_classic), "bounds", "hoermander_classic");
  j["upper_lizorkin_dyadic"] =
      r.upper_lizorkin_dyadic ? with(to_json(*r.upper_lizorkin_dyadic), "bounds", "lizorkin_upper") : Json(nullptr);
  j["upper_lizorkin_classic"] =
      r.upper_lizorkin_classic ? with(to_json(*r.upper_lizorkin_classic), "bounds", "lizorkin_classic") : Json(nullptr);
  j["empirical_opnorm"] = r.empirical_opnorm ? number(*r.empirical_opnorm) : Json(nullptr);
  Json table = Json::array();
  for (const auto& b : r.per_block_table) table.push_back({{"k", b.k}, {"value", number(b.value)}, {"partial", b.partial}});
  j["per_block_table"] = table;
  j["ratio"] = number(r.ratio);
  return j;
}

}  // namespace fmb::io
