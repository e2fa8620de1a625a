#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperlie/jacobi_map.hpp"
#include "hyperlie/poly_io.hpp"

namespace hyperlie {
namespace {

TEST(Relations, CountIsGTimesGPlusThreeOverTwo) {
  for (int g = 1; g <= 5; ++g) {
    const auto rels = generate_relations(g);
    EXPECT_EQ(rels.relations.size(), static_cast<std::size_t>(g * (g + 3) / 2)) << "g=" << g;
    for (const auto& r : rels.relations) EXPECT_TRUE(weight_check(r.poly).homogeneous) << r.label;
  }
}

TEST(Elimination, IndependentOfRelationOrder) {
  std::mt19937_64 rng(31);
  for (int g = 1; g <= 5; ++g) {
    const auto rels = generate_relations(g);
    const auto ring = make_x_ring(g);
    const JacobiMap base = eliminate(rels, ring);
    std::vector<std::size_t> order(rels.relations.size());
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      const JacobiMap other = eliminate(rels, ring, order);
      EXPECT_EQ(other.lambda_exprs, base.lambda_exprs) << "g=" << g;
      EXPECT_EQ(other.w_exprs, base.w_exprs) << "g=" << g;
    }
  }
}

TEST(Elimination, GenusOneMap) {
  const auto ring = make_x_ring(1);
  const JacobiMap jm = eliminate(generate_relations(1), ring);
  EXPECT_EQ(jm.lambda_exprs.at("l4"), parse_poly(ring, "1/2*x4 - 3*x2^2"));
  EXPECT_EQ(jm.lambda_exprs.at("l6"), parse_poly(ring, "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"));
  EXPECT_TRUE(jm.w_exprs.empty());
}

TEST(Elimination, ComponentsAreHomogeneous) {
  for (int g = 1; g <= 4; ++g) {
    const JacobiMap jm = eliminate(generate_relations(g), make_x_ring(g));
    for (const auto& [name, p] : jm.lambda_exprs) EXPECT_EQ(weight_check(p).weight, std::stoi(name.substr(1))) << name;
    for (const auto& [name, p] : jm.w_exprs) {
      const auto sep = name.find('_');
      EXPECT_EQ(weight_check(p).weight, std::stoi(name.substr(1, sep - 1)) + std::stoi(name.substr(sep + 1))) << name;
    }
  }
}

TEST(Elimination, PerturbedLambdaSixIsRejected) {
  for (int g = 1; g <= 3; ++g) {
    const auto rels = generate_relations(g);
    JacobiMap jm = eliminate(rels, make_x_ring(g));
    ZeroTest zt(Mode::kExact, PitConfig{}, 0);
    EXPECT_TRUE(verify_relations_vanish(zt, rels, jm).pass);
    jm.lambda_exprs.at("l6") += Poly::constant(jm.x_ring, 1);
    const Outcome o = verify_relations_vanish(zt, rels, jm);
    EXPECT_FALSE(o.pass) << "g=" << g;
    EXPECT_TRUE(o.residual.has_value());
  }
}

TEST(Elimination, NonlinearUnknownThrows) {
  const auto ring = make_relation_ring(1);
  RelationSet rels{1, ring, {{"a", parse_poly(ring, "l4^2 - x2^4")}, {"b", parse_poly(ring, "l6 - x2^3")}}};
  EXPECT_THROW(eliminate(rels, make_x_ring(1)), EliminationError);
}

TEST(Elimination, InconsistentRelationThrows) {
  const auto ring = make_relation_ring(1);
  RelationSet rels{1, ring, {{"a", parse_poly(ring, "l4 - x2^2")}, {"b", parse_poly(ring, "l6 - x2^3")}, {"c", parse_poly(ring, "x3^2")}}};
  EXPECT_THROW(eliminate(rels, make_x_ring(1)), EliminationError);
}

TEST(Naming, Coordinates) {
  EXPECT_EQ(x_name(1, 1), "x2");
  EXPECT_EQ(x_name(3, 3), "y6");
  EXPECT_EQ(x_name(2, 5), "z7");
  EXPECT_EQ(x_name(1, 7), "x1_7");
  EXPECT_EQ(w_name(5, 3), "w3_5");
  EXPECT_THROW(x_name(4, 1), std::out_of_range);
}

TEST(MapChecks, AllPassForGenusOneToThree) {
  for (int g = 1; g <= 3; ++g) {
    const auto report = run_checks(map_checks(g), Mode::kExact, PitConfig{}, 1);
    for (const auto& e : report.entries) EXPECT_TRUE(e.pass) << e.id << " " << e.residual.value_or("");
    EXPECT_GE(report.entries.size(), 6u);
  }
}

}  // namespace
}  // namespace hyperlie
