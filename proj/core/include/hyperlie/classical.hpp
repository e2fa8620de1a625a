#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlie/genus_fields.hpp"

namespace hyperlie {

class UnknownSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// wp_i_k1_..._kn: i derivatives in u1, then one in each u_k.
struct ClassicalSymbol {
  int i = 0;
  std::vector<int> ks;
};

std::optional<ClassicalSymbol> parse_classical(std::string_view name);

// Images of the classical symbols in the coordinate ring of a model:
//   wp_m (m = 2, 3, 4)   -> x_{m-1,1}, and L1 applied to x4 beyond that
//   wp_i_k (i = 1, 2, 3) -> x_{i,k}, and L1 applied to x_{3,k} beyond that
//   wp_i_k_l             -> L1^i applied to w_{k,l}
//   deeper symbols       -> L_{k_n} applied to the symbol without k_n
// Derivatives in u1 written as trailing 1 indices are folded into i. lambda
// symbols resolve through the model; zeta_k has no polynomial image.
class SymbolDictionary {
 public:
  explicit SymbolDictionary(GenusModelPtr model);

  const GenusModel& model() const { return *model_; }
  /// Throws UnknownSymbol for names outside the dictionary.
  Poly image(std::string_view symbol) const;
  /// Classical names first, then the model's own names.
  SymbolResolver resolver() const;

 private:
  Poly resolve(const ClassicalSymbol& s) const;

  GenusModelPtr model_;
  mutable std::map<std::string, Poly, std::less<>> cache_;
};

/// Rows rewritten over the coordinate ring.
std::vector<BracketRelation> translate(const SymbolDictionary& dict, const std::vector<reference::TableRow>& table);

/// Translated classical table against the model (genus 2 at the normalized
/// parameters), plus the row-by-row match with the coordinate table and, for
/// genus 2, the forced alpha = 1 control. Ids are "g{genus}.classical.*".
std::vector<Check> classical_checks(const GenusModelPtr& model);

}  // namespace hyperlie
