#include <gtest/gtest.h>

#include "hyperlie/lambda_space.hpp"
#include "hyperlie/poly_io.hpp"
#include "support.hpp"

namespace hyperlie {
namespace {

TEST(Determinant, AgreesWithCofactorExpansion) {
  auto r = make_ring({{"a", 1}, {"b", 2}, {"c", 3}});
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      PolyMatrix m(r, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, testing::random_poly(r, rng, 3, 2));
      }
      const Poly expected = testing::laplace(m);
      ASSERT_EQ(determinant(m), expected) << "n=" << n;
      ASSERT_EQ(determinant_by_minors(m), expected) << "n=" << n;
    }
  }
}

TEST(Determinant, Identity) {
  auto r = make_ring({{"a", 1}});
  PolyMatrix m(r, 5, 5);
  for (std::size_t i = 0; i < 5; ++i) m.set(i, i, Poly::constant(r, 1));
  EXPECT_EQ(determinant(m), Poly::constant(r, 1));
  EXPECT_EQ(determinant_by_minors(m), Poly::constant(r, 1));
}

TEST(Determinant, NonSquareRejected) {
  auto r = make_ring({{"a", 1}});
  PolyMatrix m(r, 2, 3);
  EXPECT_THROW(determinant(m), std::invalid_argument);
  EXPECT_THROW(determinant_by_minors(m), std::invalid_argument);
}

TEST(Determinant, GenusOneT) {
  const CurveModel model(1);
  EXPECT_EQ(determinant(build_T(model)), parse_poly(model.ring(), "-4/3*(4*l4^3 + 27*l6^2)"));
}

TEST(Resultant, CubicDiscriminant) {
  const CurveModel model(1);
  EXPECT_EQ(discriminant_R(model), parse_poly(model.ring(), "4*l4^3 + 27*l6^2"));
}

TEST(Resultant, CoprimeLinearForms) {
  auto r = make_ring({{"X", 1}});
  const Poly res = resultant(parse_poly(r, "X"), parse_poly(r, "X - 1"), 0);
  ASSERT_TRUE(res.is_constant());
  EXPECT_EQ(abs(*res.constant_value()), 1);
}

TEST(Resultant, ZeroInputRejected) {
  auto r = make_ring({{"X", 1}});
  EXPECT_THROW(resultant(Poly(r), parse_poly(r, "X"), 0), std::invalid_argument);
}

TEST(Resultant, GenusTwoMatchesCofactorOracle) {
  const CurveModel model(2);
  const Poly f = build_f(model);
  const PolyMatrix s = sylvester_matrix(f, partial(f, model.x_index()), model.x_index());
  ASSERT_EQ(s.rows(), 9u);
  EXPECT_EQ(discriminant_R(model), testing::laplace(s));
}

TEST(Sylvester, Shape) {
  auto r = make_ring({{"X", 1}, {"a", 1}});
  const PolyMatrix s = sylvester_matrix(parse_poly(r, "X^2 + a"), parse_poly(r, "2*X"), 0);
  ASSERT_EQ(s.rows(), 3u);
  EXPECT_EQ(to_text(s(0, 0)), "1");
  EXPECT_EQ(to_text(s(0, 2)), "a");
  EXPECT_EQ(to_text(s(1, 0)), "2");
  EXPECT_EQ(to_text(s(2, 1)), "2");
}

}  // namespace
}  // namespace hyperlie
