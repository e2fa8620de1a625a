#include <gtest/gtest.h>

#include "hyperlie/classical.hpp"
#include "hyperlie/poly_io.hpp"

namespace hyperlie {
namespace {

const GenusModelPtr& model(int g) {
  static const GenusModelPtr models[3] = {build_genus_model(1), build_genus_model(2), build_genus_model(3)};
  return models[g - 1];
}

TEST(ClassicalSymbol, Parse) {
  const auto s = parse_classical("wp_0_3_5_5");
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->i, 0);
  EXPECT_EQ(s->ks, (std::vector<int>{3, 5, 5}));
  EXPECT_FALSE(parse_classical("wp_").has_value());
  EXPECT_FALSE(parse_classical("wp_2x").has_value());
  EXPECT_FALSE(parse_classical("x2").has_value());
}

TEST(Dictionary, CoordinateImages) {
  const SymbolDictionary d(model(3));
  const GenusModel& m = *model(3);
  EXPECT_EQ(d.image("wp_2"), m.parse("x2"));
  EXPECT_EQ(d.image("wp_3"), m.parse("x3"));
  EXPECT_EQ(d.image("wp_4"), m.parse("x4"));
  EXPECT_EQ(d.image("wp_0_1_1"), m.parse("x2"));
  EXPECT_EQ(d.image("wp_1_3"), m.parse("y4"));
  EXPECT_EQ(d.image("wp_2_3"), m.parse("y5"));
  EXPECT_EQ(d.image("wp_3_5"), m.parse("z8"));
  EXPECT_EQ(d.image("wp_5"), m.fields.at("L1")(m.parse("x4")));
}

TEST(Dictionary, DeepSymbolsMatchAuxiliaries) {
  const SymbolDictionary d(model(3));
  const GenusModel& m = *model(3);
  EXPECT_EQ(d.image("wp_0_3_3"), m.aux.at("w6"));
  EXPECT_EQ(d.image("wp_1_3_3"), m.aux.at("p7"));
  EXPECT_EQ(d.image("wp_1_5_5"), m.aux.at("p11"));
  EXPECT_EQ(d.image("wp_0_3_3_3"), m.aux.at("w9"));
  EXPECT_EQ(d.image("wp_0_3_5_5"), m.aux.at("w13"));
  EXPECT_EQ(d.image("wp_0_5_5_5"), m.aux.at("w15"));
  // Mixed partials commute.
  EXPECT_EQ(d.image("wp_0_3_3_5"), d.image("wp_0_3_5_3"));
}

TEST(Dictionary, UnsupportedSymbols) {
  const SymbolDictionary d(model(2));
  EXPECT_THROW(d.image("zeta_1"), UnknownSymbol);
  EXPECT_THROW(d.image("wp_1"), UnknownSymbol);
  EXPECT_THROW(d.image("wp_0_3"), UnknownSymbol);
  EXPECT_THROW(d.image("wp_1_5"), UnknownSymbol);
  EXPECT_THROW(d.image("wp_1_4"), UnknownSymbol);
  EXPECT_THROW(d.image("sigma"), UnknownSymbol);
}

TEST(Translate, GenusOneRow) {
  const SymbolDictionary d(model(1));
  const auto rel = translate(d, {{"L1", "L2", {{"wp_2", "L1"}}}}).front();
  ASSERT_EQ(rel.expansion.size(), 1u);
  EXPECT_EQ(rel.expansion[0].coeff, model(1)->parse("x2"));
  ZeroTest zt(Mode::kExact, PitConfig{}, 0);
  EXPECT_TRUE(verify_bracket_relation(zt, model(1)->fields, rel).pass);
}

TEST(Translate, LambdaSymbolsPassThrough) {
  const SymbolDictionary d(model(3));
  const auto rel = translate(d, {{"L3", "L2", {{"wp_1_3 - l4", "L1"}, {"0", "L3"}, {"-3", "L5"}}}}).front();
  EXPECT_EQ(rel.expansion[0].coeff, model(3)->parse("y4 - l4"));
}

TEST(ClassicalChecks, AllGeneraPass) {
  for (int g = 1; g <= 3; ++g) {
    const auto report = run_checks(classical_checks(model(g)), Mode::kExact, PitConfig{}, 1);
    EXPECT_NE(report.find("g" + std::to_string(g) + ".classical.table_match"), nullptr);
    for (const auto& e : report.entries) EXPECT_TRUE(e.pass) << e.id << " " << e.residual.value_or("");
  }
}

TEST(ClassicalChecks, ForcedAlphaIsRejected) {
  const auto report = run_checks(classical_checks(model(2)), Mode::kExact, PitConfig{}, 1);
  const auto* e = report.find("g2.classical.forced_alpha_rejected");
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->pass);
}

}  // namespace
}  // namespace hyperlie
