#pragma once

#include <string>
#include <vector>

#include "hyperlie/derivation.hpp"
#include "hyperlie/matrix.hpp"
#include "hyperlie/poly.hpp"

namespace hyperlie {

/// Parameter space of y^2 = X^{2g+1} + l4 X^{2g-1} + ... + l{4g+2}. The ring
/// holds l4, l6, ..., l{4g+2} (weight s) and the auxiliary X (weight 2).
class CurveModel {
 public:
  explicit CurveModel(int genus);

  int genus() const { return genus_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t x_index() const { return ring_->size() - 1; }

  /// l_s for s in {4, 6, ..., 4g+2}; the zero polynomial for any other s.
  Poly lambda(int s) const;
  static std::string lambda_name(int s) { return "l" + std::to_string(s); }
  std::vector<std::string> lambda_names() const;

 private:
  int genus_;
  RingPtr ring_;
};

/// Monic f(X) of degree 2g+1 without an X^{2g} term.
Poly build_f(const CurveModel& model);

/// Resultant of f and df/dX in X.
Poly discriminant_R(const CurveModel& model);
/// Weight of R: 4g(2g+1).
int discriminant_weight(int genus);

/// T_{2k,2m} for 1 <= k, m <= 2g, symmetric in (k, m).
Poly T_entry(const CurveModel& model, int k, int m);
PolyMatrix build_T(const CurveModel& model);

/// L_k for even k in [0, 4g-2]: L_k(l_{2s}) = T_{k+2, 2s-2}.
Derivation build_L(const CurveModel& model, int k);
/// L_0, L_2, ..., L_{4g-2}, named "L0", "L2", ...
FieldSet build_L_fields(const CurveModel& model);

/// m_k with L_k(det T) = m_k det T for each field, in order L0, L2, ...
/// Throws std::domain_error when some L_k(det T) is not a multiple of det T.
std::vector<Poly> tangency_multipliers(const CurveModel& model, const Poly& det_T);

/// The 10 x 6 coefficient matrix expressing [L_{2i}, L_{2j}] (i < j, pairs
/// in lexicographic order) through L0, ..., L10. Genus 3 only.
PolyMatrix build_M(const CurveModel& model);
/// Row pairs of build_M, as field names.
std::vector<std::pair<std::string, std::string>> M_row_pairs();
/// One relation per row of M.
std::vector<BracketRelation> M_relations(const PolyMatrix& M);

/// Checks of the parameter-space properties: Euler field, symmetry, the
/// det T / R constant and tangency. Ids are prefixed "g{genus}.lambda.".
std::vector<Check> lambda_checks(const CurveModel& model);

}  // namespace hyperlie
