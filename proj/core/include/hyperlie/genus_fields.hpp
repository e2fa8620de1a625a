#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlie/derivation.hpp"
#include "hyperlie/jacobi_map.hpp"
#include "hyperlie/lambda_space.hpp"
#include "hyperlie/matrix.hpp"
#include "hyperlie/reference_data.hpp"

namespace hyperlie {

/// Everything built for one genus: the parameter space, the map p, the
/// auxiliary polynomials and the catalog of lifted fields.
struct GenusModel {
  int genus = 0;
  CurveModel curve;
  std::vector<std::string> params;  // weight-0 variables (genus 2 only)
  RingPtr x_ring;
  JacobiMap jacobi;
  PolyMap p;
  FieldSet lambda_fields;
  std::map<std::string, Poly> aux;  // w6, w8, w10, p7, ... by name
  /// Fields by ascending weight (L0, L1, L2, L3, ...), the row order of calT.
  FieldSet fields;

  explicit GenusModel(int g);

  /// l_s composed with p; zero outside {4, ..., 4g+2}.
  Poly lambda(int s) const;
  /// Resolves l{s} to l_s o p and auxiliary names to their polynomials.
  SymbolResolver resolver() const;
  Poly parse(std::string_view text) const;
};

using GenusModelPtr = std::shared_ptr<const GenusModel>;

/// Builds the full model. Throws LadderError or EliminationError when a
/// construction step is inconsistent.
GenusModelPtr build_genus_model(int genus);

Derivation build_euler(const RingPtr& x_ring);
Derivation build_L1(int genus, const RingPtr& x_ring);
/// Odd field L_s, 3 <= s <= 2g-1, from the w coordinates and L1.
Derivation build_odd(int genus, int s, const Derivation& L1, const std::map<std::string, Poly>& w_exprs);
/// Chains x_{1,j} -> x_{2,j} -> x_{3,j} stepped by L1.
std::vector<LadderChain> ladder_chains(int genus);

/// Expansion sum coeff_i * field_i of a printed table row.
Expansion parse_expansion(const GenusModel& model, const std::vector<reference::TableTerm>& terms,
                          const SymbolResolver& resolve);
std::vector<BracketRelation> parse_table(const GenusModel& model, const std::vector<reference::TableRow>& rows,
                                         const SymbolResolver& resolve);

/// "[La,Lb] = (c1) F1 + (c2) F2 ..." cut to 200 characters.
std::string row_text(const reference::TableRow& row);

/// Copy of the model with parameters replaced by constants in every field.
GenusModelPtr specialize(const GenusModel& model, const std::map<std::string, Rational>& values);

/// The 3g x 3g matrix with rows L_k(x_{i,j}), fields by weight and columns
/// in coordinate order.
PolyMatrix build_calT(const GenusModel& model);

/// Parameter values for which [L1, L_k] takes the lower-triangular form of
/// genus2_normalization(). Throws std::domain_error when the linear system
/// has no solution or more than one.
std::map<std::string, Rational> solve_genus2_normalization(const GenusModel& model);

/// Checks of groups fields, proj, brackets, props and normalize. When the
/// model cannot be built a single failing entry replaces them.
std::vector<Check> field_checks(const GenusModelPtr& model);

}  // namespace hyperlie
