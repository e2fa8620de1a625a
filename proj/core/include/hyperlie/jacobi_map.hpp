#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlie/identity.hpp"
#include "hyperlie/lambda_space.hpp"
#include "hyperlie/poly.hpp"
#include "hyperlie/poly_io.hpp"

namespace hyperlie {

// Coordinates x_{i,j}, i in {1,2,3}, j in {1,3,...,2g-1}, of weight i+j.
// The first three families have short names:
//   x_{i,1} -> x2 x3 x4,  x_{i,3} -> y4 y5 y6,  x_{i,5} -> z6 z7 z8,
// and x_{i,j} for j >= 7 is called "x{i}_{j}".
std::string x_name(int i, int j);
/// "w{k}_{l}" with the indices sorted, so w_{l,k} and w_{k,l} coincide.
std::string w_name(int k, int l);

/// Coordinate ring in the order x_{1,1}, x_{2,1}, x_{3,1}, x_{1,3}, ...,
/// followed by the given weight-0 parameters.
RingPtr make_x_ring(int genus, const std::vector<std::string>& params = {});

/// Coordinates, then w_{k,l} (3 <= k <= l <= 2g-1, odd), then l4..l{4g+2}.
RingPtr make_relation_ring(int genus);

/// Resolves "x{i}_{j}" to the coordinate x_{i,j}, or to zero when j is odd
/// and beyond 2g-1. Other names fall through.
SymbolResolver indexed_x_resolver(int genus, RingPtr ring);

struct Relation {
  std::string label;
  Poly poly;  // lhs - rhs
};

struct RelationSet {
  int genus = 0;
  RingPtr ring;
  std::vector<Relation> relations;
};

/// The g(g+3)/2 relations between coordinates, w and lambda.
RelationSet generate_relations(int genus);

class EliminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiMap {
  int genus = 0;
  RingPtr x_ring;
  std::map<std::string, Poly> lambda_exprs;  // keyed "l4", "l6", ...
  std::map<std::string, Poly> w_exprs;       // keyed "w3_3", ...
  std::vector<std::string> solve_order;
};

/// Repeatedly picks a relation in which exactly one unknown (w or lambda)
/// remains and solves it; the unknown must occur linearly with a constant
/// coefficient. `order` permutes the scan order of the relations (identity
/// when empty). Results are rebased into x_ring.
JacobiMap eliminate(const RelationSet& rels, const RingPtr& x_ring, const std::vector<std::size_t>& order = {});

/// The map p from the coordinate ring to the parameter ring of the model.
PolyMap build_p(const JacobiMap& jm, const CurveModel& model);

/// Substitutes the solved expressions into every relation.
Outcome verify_relations_vanish(ZeroTest& zt, const RelationSet& rels, const JacobiMap& jm);

/// Ids are prefixed "g{genus}.map.". An elimination failure becomes a single
/// failing entry.
std::vector<Check> map_checks(int genus);

}  // namespace hyperlie
