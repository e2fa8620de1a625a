#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlie/poly.hpp"

namespace hyperlie {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Terms in serialization order: ascending weight, then descending exponents
/// read in ring declaration order (so l4^3 precedes l6^2).
std::vector<const Term*> canonical_terms(const Poly& p);

/// Canonical text form, e.g. "4*l4^3 + 27*l6^2" or "-4/3*l4^3".
std::string to_text(const Poly& p);

/// {"terms":[{"c":"-4/3","m":{"l4":3}}]} in canonical term order.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const RingPtr& ring, const nlohmann::json& doc);

std::string to_latex(const Poly& p);
std::string latex_symbol(std::string_view var_name);

/// Maps an identifier to a polynomial (named auxiliary expressions, pulled
/// back parameters, ...). Returning nullopt falls back to ring variables.
using SymbolResolver = std::function<std::optional<Poly>(std::string_view)>;

/// Parses arithmetic over rationals, ring variables and resolver symbols:
/// + - * / ^ and parentheses. Division is allowed by constants only.
Poly parse_poly(const RingPtr& ring, std::string_view text, const SymbolResolver& resolve = {});

}  // namespace hyperlie
