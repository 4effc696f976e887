#include <gtest/gtest.h>

#include <cmath>

#include "fmb/errors.hpp"
#include "fmb/io.hpp"

using namespace fmb;
using fmb::io::Json;

TEST(ParseNumber, Forms) {
  EXPECT_EQ(io::parse_number("2"), 2.0);
  EXPECT_EQ(io::parse_number("1.5"), 1.5);
  EXPECT_EQ(io::parse_number("4/3"), 4.0 / 3.0);
  EXPECT_THROW(io::parse_number("4/0"), ConfigError);
  EXPECT_THROW(io::parse_number("abc"), ConfigError);
  EXPECT_THROW(io::parse_number("2x"), ConfigError);
}

TEST(ParseSymbol, Sequence) {
  const auto j = Json::parse(R"({"kind":"seq","window":[-1,1],"values":[1,[0,2],3],"decay_declared":true})");
  const auto s = io::parse_symbol(j);
  const auto& a = std::get<SeqSymbol>(s.symbol);
  EXPECT_EQ(a.window_lo(), -1);
  EXPECT_EQ(a[0], (Complex{0.0, 2.0}));
  EXPECT_TRUE(a.decay_declared());
  EXPECT_FALSE(s.example.has_value());
}

TEST(ParseSymbol, SampledFunctionIsPiecewiseLinear) {
  const auto j = Json::parse(R"({"kind":"fun","domain":[0,2],"values":[0,2,0]})");
  const auto s = io::parse_symbol(j);
  const auto& f = std::get<FunSymbol>(s.symbol);
  EXPECT_EQ(f(0.5).real(), 1.0);
  EXPECT_EQ(f(1.0).real(), 2.0);
  EXPECT_EQ(f(1.5).real(), 1.0);
  EXPECT_EQ(f(-1.0).real(), 0.0);
  EXPECT_EQ(f(3.0).real(), 0.0);
  EXPECT_EQ(f.derivative(0.5), 2.0);
  EXPECT_EQ(f.derivative(1.5), -2.0);
  EXPECT_TRUE(f.vanishes_at_infinity);
}

TEST(ParseSymbol, Builtin) {
  const auto j = Json::parse(R"({"kind":"seq","builtin":"examH2","parameters":{"K":4}})");
  const auto s = io::parse_symbol(j);
  ASSERT_TRUE(s.example.has_value());
  EXPECT_EQ(s.example->name, "examH2");
  EXPECT_EQ(std::get<SeqSymbol>(s.symbol).window_hi(), 31);
  EXPECT_THROW(io::parse_symbol(Json::parse(R"({"kind":"fun","builtin":"examH2"})")), ConfigError);
}

TEST(ParseSymbol, Malformed) {
  for (const char* text : {R"({"window":[0,1]})", R"({"kind":"tensor"})",
                           R"({"kind":"seq","window":[0,1],"values":[1]})",
                           R"({"kind":"seq","window":[1,2],"values":[1,2]})",
                           R"({"kind":"seq","window":[0,0],"values":["x"]})",
                           R"({"kind":"fun","domain":[1,0],"values":[1,2]})",
                           R"({"kind":"seq","window":[0,0]})"})
    EXPECT_THROW(io::parse_symbol(Json::parse(text)), ConfigError) << text;
}

TEST(LoadSymbolFile, ShippedExamples) {
  for (const char* name : {"zero.json", "custom_seq.json", "sampled_fun.json", "builtin_examH2.json"}) {
    const auto s = io::load_symbol_file(std::string(FMB_DATA_DIR) + "/" + name);
    EXPECT_TRUE(s.description.contains("kind")) << name;
  }
  EXPECT_THROW(io::load_symbol_file(std::string(FMB_DATA_DIR) + "/missing.json"), ConfigError);
}

TEST(Json, NonFiniteIsNull) {
  EXPECT_TRUE(io::number(kInf).is_null());
  EXPECT_TRUE(io::number(std::nan("")).is_null());
  EXPECT_EQ(io::number(1.5).get<double>(), 1.5);
}

TEST(Json, ExponentsWithInfiniteR) {
  const auto j = io::to_json(make_exponents(2.0, 2.0, ExponentMode::hoermander));
  EXPECT_TRUE(j["r"].is_null());
  EXPECT_TRUE(j["r_infinite"].get<bool>());
  EXPECT_EQ(j["mode"], "hoermander");
}

TEST(Json, SandwichCarriesProvenanceAndGrowth) {
  const auto ex = make_example("examH2", {{"K", 6}});
  const auto j = io::to_json(sandwich(ex.seq(), ex.exponents));
  for (const char* key : {"lower_necessary", "upper_hoermander_block", "upper_hoermander_classic"}) {
    ASSERT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j[key]["provenance"]["module"], "bounds");
    EXPECT_TRUE(j[key].contains("divergent"));
  }
  EXPECT_TRUE(j["upper_hoermander_classic"]["growth"].is_array());
  EXPECT_TRUE(j["upper_lizorkin_dyadic"].is_null());
  EXPECT_EQ(j["per_block_table"].size(), 7u);
}
