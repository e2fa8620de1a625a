#include <gtest/gtest.h>

#include "hyperlie/lambda_space.hpp"
#include "hyperlie/poly_io.hpp"
#include "support.hpp"

namespace hyperlie {
namespace {

Poly P(const CurveModel& m, std::string_view text) { return parse_poly(m.ring(), text); }

std::vector<Rational> sample_point(const CurveModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-40, 40);
  std::vector<Rational> pt;
  for (std::size_t v = 0; v < m.ring()->size(); ++v) {
    const int x = d(rng);
    pt.emplace_back(x == 0 ? 1 : x);
  }
  return pt;
}

TEST(Curve, PolynomialShape) {
  const CurveModel g1(1);
  EXPECT_EQ(build_f(g1), P(g1, "X^3 + l4*X + l6"));
  const CurveModel g3(3);
  const Poly f = build_f(g3);
  EXPECT_EQ(f, P(g3, "X^7 + l4*X^5 + l6*X^4 + l8*X^3 + l10*X^2 + l12*X + l14"));
  EXPECT_TRUE(coefficients_in(f, g3.x_index()).at(6).is_zero());
}

TEST(Curve, IndexGuard) {
  const CurveModel g2(2);
  EXPECT_TRUE(g2.lambda(2).is_zero());
  EXPECT_TRUE(g2.lambda(12).is_zero());
  EXPECT_TRUE(g2.lambda(5).is_zero());
  EXPECT_EQ(g2.lambda(10), P(g2, "l10"));
}

TEST(Discriminant, WeightIsFourGTimesTwoGPlusOne) {
  for (int g = 1; g <= 3; ++g) {
    const CurveModel m(g);
    EXPECT_EQ(weight_check(discriminant_R(m)).weight, 4 * g * (2 * g + 1)) << "g=" << g;
    EXPECT_EQ(discriminant_weight(g), 4 * g * (2 * g + 1));
  }
  EXPECT_EQ(discriminant_weight(1), 12);
}

TEST(TMatrix, GenusOneEntries) {
  const CurveModel m(1);
  const PolyMatrix T = build_T(m);
  EXPECT_EQ(T(0, 0), P(m, "4*l4"));
  EXPECT_EQ(T(0, 1), P(m, "6*l6"));
  EXPECT_EQ(T(1, 0), P(m, "6*l6"));
  EXPECT_EQ(T(1, 1), P(m, "-4/3*l4^2"));
}

TEST(TMatrix, SymmetricAndGraded) {
  for (int g = 1; g <= 4; ++g) {
    const CurveModel m(g);
    const PolyMatrix T = build_T(m);
    EXPECT_TRUE(T.is_symmetric());
    for (std::size_t k = 0; k < T.rows(); ++k) {
      for (std::size_t j = 0; j < T.cols(); ++j) {
        if (!T(k, j).is_zero()) {
          EXPECT_EQ(weight_check(T(k, j)).weight, static_cast<int>(2 * (k + 1) + 2 * (j + 1)));
        }
      }
    }
  }
}

TEST(LFields, GenusOne) {
  const CurveModel m(1);
  const Derivation L0 = build_L(m, 0);
  EXPECT_EQ(L0.action("l4"), P(m, "4*l4"));
  EXPECT_EQ(L0.action("l6"), P(m, "6*l6"));
  const Derivation L2 = build_L(m, 2);
  EXPECT_EQ(L2.action("l4"), P(m, "6*l6"));
  EXPECT_EQ(L2.action("l6"), P(m, "-4/3*l4^2"));
  EXPECT_THROW(build_L(m, 4), std::out_of_range);
}

TEST(LFields, EulerOnEveryGenus) {
  for (int g = 1; g <= 3; ++g) {
    const CurveModel m(g);
    const Derivation L0 = build_L(m, 0);
    for (const auto& name : m.lambda_names()) {
      const int s = std::stoi(name.substr(1));
      EXPECT_EQ(L0(P(m, name)), Poly::constant(m.ring(), s) * P(m, name));
    }
  }
}

// c_g = det T / R checked at random points with an independent rational
// elimination of both matrices.
Rational ratio_at_points(const CurveModel& m, int points) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(m.genus()) * 7919);
  const PolyMatrix T = build_T(m);
  const Poly f = build_f(m);
  const PolyMatrix S = sylvester_matrix(f, partial(f, m.x_index()), m.x_index());
  std::optional<Rational> c;
  for (int i = 0; i < points; ++i) {
    const auto pt = sample_point(m, rng);
    const Rational r = testing::eval_det(S, pt);
    if (r == 0) continue;
    const Rational q = testing::eval_det(T, pt) / r;
    if (c && *c != q) return Rational(-999999);
    c = q;
  }
  return c.value_or(0);
}

TEST(DetT, GenusOneConstant) {
  const CurveModel m(1);
  EXPECT_EQ(determinant(build_T(m)), Poly::constant(m.ring(), Rational(-4, 3)) * discriminant_R(m));
  EXPECT_EQ(ratio_at_points(m, 5), Rational(-4, 3));
}

TEST(DetT, GenusTwoConstantIsFrozen) {
  const CurveModel m(2);
  const Rational frozen(16, 5);
  EXPECT_EQ(ratio_at_points(m, 6), frozen);
  EXPECT_EQ(determinant(build_T(m)), Poly::constant(m.ring(), frozen) * discriminant_R(m));
}

TEST(DetT, GenusThreeConstant) {
  const CurveModel m(3);
  EXPECT_EQ(ratio_at_points(m, 4), Rational(-64, 7));
}

TEST(Tangency, GenusOneAndThreeMultipliers) {
  const CurveModel g1(1);
  const auto m1 = tangency_multipliers(g1, determinant(build_T(g1)));
  ASSERT_EQ(m1.size(), 2u);
  EXPECT_EQ(m1[0], P(g1, "12"));
  EXPECT_TRUE(m1[1].is_zero());

  const CurveModel g3(3);
  const auto m3 = tangency_multipliers(g3, determinant(build_T(g3)));
  const std::vector<std::string> expected = {"84", "0", "40*l4", "24*l6", "12*l8", "4*l10"};
  ASSERT_EQ(m3.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(m3[i], P(g3, expected[i])) << i;
}

TEST(Tangency, GenusTwoMultipliersAreFrozenAgainstCofactorDeterminant) {
  const CurveModel m(2);
  const Poly detT = testing::laplace(build_T(m));
  const auto mult = tangency_multipliers(m, detT);
  const std::vector<std::string> frozen = {"40", "0", "12*l4", "4*l6"};
  ASSERT_EQ(mult.size(), frozen.size());
  const FieldSet fields = build_L_fields(m);
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    EXPECT_EQ(mult[i], P(m, frozen[i])) << i;
    EXPECT_EQ(fields.fields()[i](detT), P(m, frozen[i]) * detT) << i;
  }
}

TEST(Tangency, NonTangentPolynomialRejected) {
  const CurveModel m(1);
  EXPECT_THROW(tangency_multipliers(m, P(m, "l4 + l6")), std::domain_error);
}

TEST(MMatrix, PrintedEntries) {
  const CurveModel m(3);
  const PolyMatrix M = build_M(m);
  ASSERT_EQ(M.rows(), 10u);
  ASSERT_EQ(M.cols(), 6u);
  EXPECT_EQ(M(0, 3), P(m, "2"));
  EXPECT_TRUE(M(9, 0).is_zero());
  EXPECT_EQ(M(3, 4), P(m, "-4/7*l4"));
  EXPECT_THROW(build_M(CurveModel(2)), std::invalid_argument);
}

TEST(MMatrix, RelationsHoldAndCorruptionFails) {
  const CurveModel m(3);
  const FieldSet fields = build_L_fields(m);
  ZeroTest zt(Mode::kExact, PitConfig{}, 0);
  PolyMatrix M = build_M(m);
  for (const auto& rel : M_relations(M)) EXPECT_TRUE(verify_bracket_relation(zt, fields, rel).pass) << rel.left << rel.right;
  M.set(0, 3, P(m, "3"));
  EXPECT_FALSE(verify_bracket_relation(zt, fields, M_relations(M).front()).pass);
}

}  // namespace
}  // namespace hyperlie
