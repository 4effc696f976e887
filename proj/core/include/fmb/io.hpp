#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fmb/bounds.hpp"
#include "fmb/monotone.hpp"
#include "fmb/named_examples.hpp"
#include "fmb/opnorm.hpp"

namespace fmb::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Symbol description. Forms:
///   {"kind": "seq", "window": [lo, hi], "values": [v, [re, im], ...], "decay_declared": bool}
///   {"kind": "fun", "domain": [a, b], "values": [...]}   piecewise linear, zero outside
///   {"kind": "seq" | "fun", "builtin": name, "parameters": {...}}
struct LoadedSymbol {
  AnySymbol symbol;
  std::optional<NamedExample> example;  // set for builtin references
  Json description;
};

LoadedSymbol parse_symbol(const Json& j);
LoadedSymbol load_symbol_file(const std::string& path);

/// Parses "4/3", "2", "1.5".
double parse_number(const std::string& s);

Json to_json(const ExponentTriple& e);
Json to_json(const BoundValue& b);
Json to_json(const BlockBound& b);
Json to_json(const LizorkinBound& b);
Json to_json(const MonotoneCertificate& c);
Json to_json(const OpNormEstimate& e);
Json to_json(const CheckRow& r);
Json to_json(const SandwichReport& r);

/// Finite doubles as numbers, non-finite as null.
Json number(double x);

}  // namespace fmb::io
