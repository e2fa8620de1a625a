#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlie/rational.hpp"

// Published formulas, transcribed verbatim as expression strings. Variable
// names follow the rings built by the library: l4..l14 for the curve
// parameters, x2 x3 x4 / y4 y5 y6 / z6 z7 z8 for the coordinates, w6 w8 w10
// (and p7, w9, ...) for auxiliary polynomials, alpha beta gamma1 gamma2 for
// the genus-2 parameters. Classical symbols are written wp_i_k1_k2...
namespace hyperlie::reference {

struct NamedExpr {
  std::string name;
  std::string expr;
};

struct FieldValue {
  std::string field;
  std::string var;
  std::string expr;
};

struct TableTerm {
  std::string coeff;
  std::string field;
};

struct TableRow {
  std::string left;
  std::string right;
  std::vector<TableTerm> terms;
};

/// Two ways of producing an auxiliary polynomial: field applied to operand.
struct AuxDefinition {
  std::string name;
  std::vector<std::pair<std::string, std::string>> definitions;  // (field, operand)
  std::string printed;  // empty when not displayed
};

// Parameter space.
std::optional<std::string> discriminant(int genus);
std::vector<std::vector<std::string>> T_matrix(int genus);
std::optional<Rational> detT_over_R(int genus);
std::vector<std::string> tangency_multipliers(int genus);
std::vector<std::vector<std::string>> M_matrix();

// Map p and the w coordinates (w3_3, w3_5, w5_5).
std::vector<NamedExpr> lambda_map(int genus);
std::vector<NamedExpr> w_map(int genus);
/// General-genus elimination formulas, written with generic names x{i}_{j}
/// (zero outside 1 <= j <= 2g-1): l4, l6, l8, w3_{k}, w5_{k}.
std::vector<NamedExpr> general_formulas(int genus);

// Fields.
std::vector<FieldValue> field_values(int genus);
std::vector<AuxDefinition> aux(int genus);
/// det(calT) = c * det(T) o p.
Rational detTcal_factor(int genus);

// Commutator tables over the coordinate ring; for genus 2 the even fields
// are the parametric family and coefficients involve alpha..gamma2.
std::vector<TableRow> bracket_table(int genus);
/// Genus-2 condition fixing the parameters: [L1, L_k] for k = 0, 2, 4, 6.
std::vector<TableRow> genus2_normalization();

// Classical tables in wp / lambda notation.
std::vector<TableRow> classical_table(int genus);

}  // namespace hyperlie::reference
