#include <gtest/gtest.h>

#include "hyperlie/genus_fields.hpp"
#include "hyperlie/poly_io.hpp"
#include "support.hpp"

namespace hyperlie {
namespace {

const GenusModelPtr& model(int g) {
  static const GenusModelPtr models[3] = {build_genus_model(1), build_genus_model(2), build_genus_model(3)};
  return models[g - 1];
}

TEST(Fields, EulerAndL1Examples) {
  const GenusModel& m3 = *model(3);
  EXPECT_EQ(build_euler(m3.x_ring).action("z8"), m3.parse("8*z8"));
  EXPECT_TRUE(bracket(m3.fields.at("L0"), m3.fields.at("L0")).is_zero());
  EXPECT_EQ(m3.fields.at("L1").action("z8"), m3.parse("4*(x3*z6 + 2*x2*z7)"));
  EXPECT_EQ(model(2)->fields.at("L1").action("y6"), model(2)->parse("4*(2*x2*y5 + x3*y4)"));
  EXPECT_EQ(model(1)->fields.at("L1").action("x4"), model(1)->parse("12*x2*x3"));
}

TEST(Fields, OddExamples) {
  const GenusModel& m3 = *model(3);
  EXPECT_EQ(m3.fields.at("L3").action("y4"), m3.parse("x3*y4 - x2*y5 + z7"));
  EXPECT_EQ(m3.fields.at("L5").action("z6"), m3.parse("y5*z6 - y4*z7"));
  const GenusModel& m2 = *model(2);
  EXPECT_EQ(m2.fields.at("L3").action("y6"), m2.parse("8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5"));
  EXPECT_THROW(build_odd(3, 7, m3.fields.at("L1"), m3.jacobi.w_exprs), std::out_of_range);
  EXPECT_THROW(build_odd(2, 5, m2.fields.at("L1"), m2.jacobi.w_exprs), std::out_of_range);
}

TEST(Fields, OddFieldMatchesLadderCompletion) {
  const GenusModel& m = *model(3);
  const Derivation& L1 = m.fields.at("L1");
  for (int s : {3, 5}) {
    std::map<std::string, Poly> seeds;
    seeds.emplace("x2", Poly::variable(m.x_ring, x_name(2, s)));
    for (int j = 3; j <= 5; j += 2) seeds.emplace(x_name(1, j), L1(m.jacobi.w_exprs.at(w_name(s, j))));
    const Derivation D = ladder_complete("L" + std::to_string(s), s, seeds, L1, Derivation("rhs", s + 1, m.x_ring), ladder_chains(3));
    EXPECT_EQ(D, m.fields.at("L" + std::to_string(s))) << s;
  }
}

TEST(Fields, EvenExamples) {
  const GenusModel& m3 = *model(3);
  EXPECT_EQ(m3.fields.at("L6").action("z6"), m3.parse("-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2"));
  const GenusModel& m1 = *model(1);
  const Derivation& L2 = m1.fields.at("L2");
  EXPECT_EQ(L2.action("x2"), m1.parse("2/3*x4 - 2*x2^2"));
  EXPECT_EQ(L2.action("x3"), m1.parse("3*x2*x3"));
  EXPECT_EQ(L2.action("x4"), m1.parse("2*x2*x4 + 3*x3^2"));
}

TEST(Fields, CatalogOrderedByWeight) {
  for (int g = 1; g <= 3; ++g) {
    const auto& all = model(g)->fields.fields();
    ASSERT_EQ(all.size(), static_cast<std::size_t>(3 * g));
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].weight(), all[i].weight());
  }
}

TEST(Aux, PrintedExamples) {
  const GenusModel& m3 = *model(3);
  EXPECT_EQ(m3.aux.at("p11"), m3.parse("y5*z6 - y4*z7"));
  EXPECT_EQ(m3.aux.at("w13"), m3.parse("-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7"));
  EXPECT_EQ(m3.fields.at("L5")(m3.aux.at("w6")), m3.fields.at("L3")(m3.aux.at("w8")));
  const GenusModel& m2 = *model(2);
  EXPECT_EQ(m2.aux.at("w9"), m2.parse("-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5"));
}

TEST(DetTcal, GenusOneAndTwoAgainstCofactorOracle) {
  {
    const GenusModel& m = *model(1);
    const Poly lhs = testing::laplace(build_calT(m));
    EXPECT_EQ(lhs, Poly::constant(m.x_ring, 4) * m.p.pullback(determinant(build_T(m.curve))));
  }
  {
    const GenusModelPtr zero = specialize(*model(2), {{"alpha", 0}, {"beta", 0}, {"gamma1", 0}, {"gamma2", 0}});
    const Poly lhs = testing::laplace(build_calT(*zero));
    EXPECT_EQ(lhs, Poly::constant(zero->x_ring, -16) * zero->p.pullback(determinant(build_T(zero->curve))));
  }
}

TEST(DetTcal, SpecOrderFlipsGenusOneSign) {
  // Even fields first, then odd: (L0, L2, L1) instead of (L0, L1, L2).
  const GenusModel& m = *model(1);
  const PolyMatrix byWeight = build_calT(m);
  PolyMatrix evenFirst(m.x_ring, 3, 3);
  const std::size_t rows[3] = {0, 2, 1};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) evenFirst.set(r, c, byWeight(rows[r], c));
  }
  EXPECT_EQ(determinant(evenFirst), -determinant(byWeight));
}

TEST(Normalization, SolvesToZero) {
  const auto sol = solve_genus2_normalization(*model(2));
  ASSERT_EQ(sol.size(), 4u);
  for (const auto& [name, v] : sol) EXPECT_EQ(v, 0) << name;
  EXPECT_THROW(solve_genus2_normalization(*model(1)), std::invalid_argument);
}

TEST(Brackets, CorruptedCoefficientFails) {
  const GenusModel& m = *model(3);
  auto table = reference::bracket_table(3);
  auto row = std::find_if(table.begin(), table.end(), [](const reference::TableRow& r) { return r.left == "L1" && r.right == "L2"; });
  ASSERT_NE(row, table.end());
  ZeroTest zt(Mode::kExact, PitConfig{}, 0);
  EXPECT_TRUE(verify_bracket_relation(zt, m.fields, parse_table(m, {*row}, m.resolver()).front()).pass);
  row->terms.front().coeff = "2*x2";
  EXPECT_FALSE(verify_bracket_relation(zt, m.fields, parse_table(m, {*row}, m.resolver()).front()).pass);
}

TEST(FieldChecks, GenusOneAndTwoPass) {
  for (int g = 1; g <= 2; ++g) {
    const auto report = run_checks(field_checks(model(g)), Mode::kExact, PitConfig{}, 1);
    for (const auto& e : report.entries) EXPECT_TRUE(e.pass) << e.id << " " << e.residual.value_or("");
  }
}

TEST(FieldChecks, GenusThreeWithoutDeterminant) {
  auto checks = field_checks(model(3));
  std::erase_if(checks, [](const Check& c) { return c.id.find("detTcal") != std::string::npos; });
  const auto report = run_checks(std::move(checks), Mode::kExact, PitConfig{}, 1);
  EXPECT_GE(report.entries.size(), 60u);
  for (const auto& e : report.entries) EXPECT_TRUE(e.pass) << e.id << " " << e.residual.value_or("");
}

}  // namespace
}  // namespace hyperlie
