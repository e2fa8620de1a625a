#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlie/identity.hpp"
#include "hyperlie/poly.hpp"

namespace hyperlie {

/// A polynomial vector field sum_v action[v] d/dv, stored with one entry per
/// ring variable (zero where the field annihilates the variable).
class Derivation {
 public:
  Derivation(std::string name, int weight, RingPtr ring);
  Derivation(std::string name, int weight, RingPtr ring, std::vector<Poly> action);

  const std::string& name() const { return name_; }
  int weight() const { return weight_; }
  const RingPtr& ring() const { return ring_; }

  const Poly& action(std::size_t var) const { return action_.at(var); }
  const Poly& action(std::string_view var) const { return action_.at(ring_->index_of(var)); }
  const std::vector<Poly>& actions() const { return action_; }
  Derivation& set(std::size_t var, Poly image);
  Derivation& set(std::string_view var, Poly image);

  Derivation renamed(std::string name) const;
  bool is_zero() const;

  /// Applies the field: sum_v action[v] * dp/dv.
  Poly operator()(const Poly& p) const;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  /// Multiplies every component by a polynomial coefficient.
  friend Derivation operator*(const Poly& coeff, const Derivation& d);

  /// Same ring and identical actions; names and weights are labels only.
  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  std::string name_;
  int weight_;
  RingPtr ring_;
  std::vector<Poly> action_;
};

Poly apply(const Derivation& d, const Poly& p);

/// [a, b](v) = a(b(v)) - b(a(v)); the weight is a.weight() + b.weight().
Derivation bracket(const Derivation& a, const Derivation& b);

/// Applies f to every component (e.g. specializing parameters).
Derivation map_coefficients(const Derivation& d, const std::function<Poly(const Poly&)>& f);

/// Variables whose component is not homogeneous of weight(v) + weight(d).
std::vector<std::string> homogeneity_defects(const Derivation& d);

nlohmann::json to_json(const Derivation& d);

/// Fields addressed by name, kept in insertion order.
class FieldSet {
 public:
  explicit FieldSet(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  FieldSet& add(Derivation d);
  FieldSet& replace(Derivation d);
  bool contains(std::string_view name) const { return index_.contains(std::string(name)); }
  const Derivation& at(std::string_view name) const;
  const std::vector<Derivation>& fields() const { return fields_; }
  std::vector<std::string> names() const;

 private:
  RingPtr ring_;
  std::vector<Derivation> fields_;
  std::map<std::string, std::size_t> index_;
};

struct ExpansionTerm {
  Poly coeff;
  std::string field;
};
using Expansion = std::vector<ExpansionTerm>;

/// sum coeff_i * field_i as a derivation of the given weight.
Derivation combine(const FieldSet& fields, const Expansion& expansion, int weight, std::string name = "expansion");

/// A printed commutator identity [left, right] = expansion.
struct BracketRelation {
  std::string left;
  std::string right;
  Expansion expansion;
};

Derivation bracket_residual(const FieldSet& fields, const BracketRelation& rel);

/// Zero test on every component of a derivation; the witness names the first
/// variable whose component survives.
Outcome expect_zero(ZeroTest& zt, const Derivation& residual);

Outcome verify_bracket_relation(ZeroTest& zt, const FieldSet& fields, const BracketRelation& rel);

/// Checks up(p_s) = p^*(down(lambda_s)) for every component s of the map.
/// Both sides are derivations, so the generators suffice.
Outcome verify_pushforward(ZeroTest& zt, const Derivation& up, const PolyMap& p, const Derivation& down);

class LadderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One rung sequence v_0, v_1 = partner(v_0), ..., v_n; partner(v_n) is a
/// polynomial in lower variables and gives the closure condition.
using LadderChain = std::vector<std::string>;

/// Reconstructs D from D(v_0) for each chain and the prescribed bracket
/// [partner, D] = rhs, via D(v_{i+1}) = partner(D(v_i)) - rhs(v_i). Throws
/// LadderError when the chains miss a variable, partner does not step along a
/// chain, or the closure D(partner(v_n)) = partner(D(v_n)) - rhs(v_n) fails.
Derivation ladder_complete(std::string name, int weight, const std::map<std::string, Poly>& seeds,
                           const Derivation& partner, const Derivation& rhs, const std::vector<LadderChain>& chains);

}  // namespace hyperlie
