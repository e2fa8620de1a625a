#include <gtest/gtest.h>

#include "hyperlie/genus_fields.hpp"
#include "hyperlie/poly_io.hpp"
#include "support.hpp"

namespace hyperlie {
namespace {

ZeroTest exact() { return ZeroTest(Mode::kExact, PitConfig{}, 0); }

const GenusModel& genus(int g) {
  static const GenusModelPtr models[3] = {build_genus_model(1), build_genus_model(2), build_genus_model(3)};
  return *models[g - 1];
}

TEST(Apply, EulerScalesByWeight) {
  const GenusModel& m = genus(2);
  const Derivation L0 = build_euler(m.x_ring);
  const Poly l4 = m.lambda(4);
  EXPECT_EQ(L0(l4), Poly::constant(m.x_ring, 4) * l4);
  std::mt19937_64 rng(1);
  for (int w = 2; w < 12; ++w) {
    const Poly p = testing::random_homogeneous(m.x_ring, w, rng);
    EXPECT_EQ(L0(p), Poly::constant(m.x_ring, w) * p);
  }
}

TEST(Apply, GenusOneL1) {
  const GenusModel& m = genus(1);
  const Derivation& L1 = m.fields.at("L1");
  EXPECT_EQ(L1(m.parse("x2")), m.parse("x3"));
  EXPECT_TRUE(L1(Poly::constant(m.x_ring, 1)).is_zero());
}

TEST(Bracket, AntisymmetryAndSelf) {
  const GenusModel& m = genus(3);
  const auto& all = m.fields.fields();
  for (const auto& a : all) {
    EXPECT_TRUE(bracket(a, a).is_zero()) << a.name();
    for (const auto& b : all) ASSERT_EQ(bracket(a, b), -bracket(b, a));
  }
}

TEST(Bracket, GenusOneL1L2) {
  const GenusModel& m = genus(1);
  const Derivation br = bracket(m.fields.at("L1"), m.fields.at("L2"));
  EXPECT_EQ(br, m.parse("x2") * m.fields.at("L1"));
  EXPECT_EQ(br.action("x2"), m.parse("x2*x3"));
}

TEST(Bracket, GenusThreeOddFieldsCommute) {
  const GenusModel& m = genus(3);
  EXPECT_TRUE(bracket(m.fields.at("L3"), m.fields.at("L5")).is_zero());
  EXPECT_TRUE(bracket(m.fields.at("L1"), m.fields.at("L5")).is_zero());
}

TEST(Derivation, LeibnizOnRandomInputs) {
  const GenusModel& m = genus(3);
  std::mt19937_64 rng(8);
  int checked = 0;
  for (const auto& D : m.fields.fields()) {
    for (int i = 0; i < 12; ++i, ++checked) {
      const Poly p = testing::random_poly(m.x_ring, rng, 4, 2);
      const Poly q = testing::random_poly(m.x_ring, rng, 4, 2);
      ASSERT_EQ(D(p * q), D(p) * q + p * D(q)) << D.name();
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Derivation, WeightAdditivity) {
  const GenusModel& m = genus(3);
  std::mt19937_64 rng(9);
  int checked = 0;
  for (const auto& D : m.fields.fields()) {
    EXPECT_TRUE(homogeneity_defects(D).empty()) << D.name();
    for (int w = 2; w < 14; ++w) {
      const Poly p = testing::random_homogeneous(m.x_ring, w, rng);
      const Poly image = D(p);
      if (image.is_zero()) continue;
      ++checked;
      ASSERT_EQ(weight_check(image).weight, w + D.weight()) << D.name();
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Derivation, JsonLayout) {
  const GenusModel& m = genus(1);
  const auto j = to_json(m.fields.at("L1"));
  EXPECT_EQ(j["name"], "L1");
  EXPECT_EQ(j["weight"], 1);
  EXPECT_EQ(j["action"]["x4"], "12*x2*x3");
}

TEST(BracketRelation, PrintedRowAndCorruptedControl) {
  const GenusModel& m = genus(2);
  auto zt = exact();
  BracketRelation rel{"L3", "L2", {{m.parse("y4 + 4/5*l4"), "L1"}}};
  EXPECT_TRUE(verify_bracket_relation(zt, m.fields, rel).pass);
  rel.expansion[0].coeff = m.parse("y4 + 3/5*l4");
  const Outcome bad = verify_bracket_relation(zt, m.fields, rel);
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.residual.has_value());
  EXPECT_FALSE(bad.residual->empty());
}

TEST(Pushforward, GenusOneL2OnLambda4) {
  const GenusModel& m = genus(1);
  const Poly expected = m.parse("12*x2^3 + 3/2*x3^2 - 3*x2*x4");
  EXPECT_EQ(m.fields.at("L2")(m.lambda(4)), expected);
  EXPECT_EQ(m.p.pullback(m.lambda_fields.at("L2")(m.curve.lambda(4))), expected);
  auto zt = exact();
  EXPECT_TRUE(verify_pushforward(zt, m.fields.at("L2"), m.p, m.lambda_fields.at("L2")).pass);
}

TEST(Pushforward, OddFieldsAnnihilateTheMap) {
  const GenusModel& m = genus(3);
  for (const char* name : {"L1", "L3", "L5"}) {
    for (const auto& s : m.curve.lambda_names()) EXPECT_TRUE(m.fields.at(name)(m.p.component(s)).is_zero()) << name << " " << s;
  }
}

TEST(Ladder, ZeroSeedsGiveZeroField) {
  const GenusModel& m = genus(2);
  const Derivation zero("Z", 2, m.x_ring);
  std::map<std::string, Poly> seeds = {{"x2", Poly(m.x_ring)}, {"y4", Poly(m.x_ring)}};
  const Derivation D = ladder_complete("Z", 2, seeds, m.fields.at("L1"), Derivation("rhs", 3, m.x_ring), ladder_chains(2));
  EXPECT_TRUE(D.is_zero());
}

TEST(Ladder, GenusTwoSeedsReproduceL2) {
  const GenusModel& m = genus(2);
  std::map<std::string, Poly> seeds = {{"x2", m.parse("8/5*l4 + 2*x2^2 + 4*y4")}, {"y4", m.parse("-4/5*l4*x2 + 2*x2*y4")}};
  const Derivation rhs = combine(m.fields, {{m.parse("x2"), "L1"}, {m.parse("-1"), "L3"}}, 3);
  const Derivation D = ladder_complete("L2", 2, seeds, m.fields.at("L1"), rhs, ladder_chains(2));
  EXPECT_EQ(D.action("x3"), m.parse("3*x2*x3 + 5*y5"));
  for (const auto& [var, seed] : seeds) EXPECT_EQ(D.action(var), seed);
  EXPECT_EQ(D, m.fields.at("L2"));
}

TEST(Ladder, InconsistentClosureThrows) {
  const GenusModel& m = genus(1);
  std::map<std::string, Poly> seeds = {{"x2", m.parse("x2^2")}};
  EXPECT_THROW(ladder_complete("bad", 2, seeds, m.fields.at("L1"), Derivation("rhs", 3, m.x_ring), ladder_chains(1)),
               LadderError);
}

}  // namespace
}  // namespace hyperlie
