#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperlie/rational.hpp"
#include "hyperlie/ring.hpp"

namespace hyperlie {

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over Rational in a graded ring. Terms are kept sorted by
/// monomial with no zero coefficients, so equality is structural.
class Poly {
 public:
  explicit Poly(RingPtr ring);
  /// Normalizes: combines duplicate monomials and drops zero coefficients.
  Poly(RingPtr ring, std::vector<Term> terms);

  /// Precondition: terms strictly increasing by monomial, no zero coefficients.
  static Poly from_sorted(RingPtr ring, std::vector<Term> terms);
  static Poly constant(RingPtr ring, const Rational& value);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;
  /// Term with the largest monomial in the internal lexicographic order.
  const Term& leading_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scale);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  /// Same ring object and identical terms.
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void require_same_ring(const Poly& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Hash-based sum of many terms, used for products and large linear
/// combinations where repeated sorted merges would be quadratic.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(RingPtr ring);

  void add_term(const Monomial& m, const Rational& c);
  void add(const Poly& p);
  void add(const Poly& p, const Rational& scale);
  void add_product(const Poly& a, const Poly& b);
  void add_product(const Poly& a, const Poly& b, const Rational& scale);
  Poly take();

 private:
  void check(const Poly& p) const;

  RingPtr ring_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

Poly partial(const Poly& p, std::size_t var);
Poly partial(const Poly& p, std::string_view var);

/// Homogeneity under the ring grading. The zero polynomial is homogeneous
/// without a definite weight.
struct WeightCheck {
  bool homogeneous = true;
  std::optional<int> weight;
};
WeightCheck weight_check(const Poly& p);
bool is_homogeneous_of(const Poly& p, int weight);

unsigned total_degree(const Poly& p);
unsigned degree_in(const Poly& p, std::size_t var);
/// Coefficients c_k (free of var) with p = sum_k c_k var^k.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var);

/// Evaluates at a point given as one value per ring variable.
Rational evaluate(const Poly& p, std::span<const Rational> point);

/// Exact quotient a / b; nullopt when b does not divide a.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Ring homomorphism data from a source ring into a target ring, given by
/// images of source variables.
class Substitution {
 public:
  enum class Unassigned {
    kError,               // every source variable that occurs must be assigned
    kPassThroughByName,   // unassigned variables map to the same-named target variable
  };

  Substitution(RingPtr source, RingPtr target, Unassigned mode);

  Substitution& assign(std::string_view var, Poly image);
  Substitution& assign(std::size_t var, Poly image);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  /// Image of a source variable under the chosen unassigned-variable mode.
  std::optional<Poly> image(std::size_t var) const;

 private:
  RingPtr source_;
  RingPtr target_;
  Unassigned mode_;
  std::vector<std::optional<Poly>> images_;
};

Poly substitute(const Poly& p, const Substitution& s);
/// Moves p into a ring declaring (at least) all of its variables, by name.
Poly rebase(const Poly& p, const RingPtr& target);

/// A named polynomial map: each listed source coordinate has an image in the
/// target ring. Pulling back f substitutes the images into f.
class PolyMap {
 public:
  PolyMap(std::string name, RingPtr source, RingPtr target);

  PolyMap& set(std::string_view source_var, Poly image);

  const std::string& name() const { return name_; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  /// Source variable names in insertion order.
  const std::vector<std::string>& domain() const { return order_; }
  const Poly& component(std::string_view source_var) const;
  bool has(std::string_view source_var) const { return components_.contains(std::string(source_var)); }

  /// f composed with the map; every variable of f must have an image.
  Poly pullback(const Poly& f) const;

 private:
  std::string name_;
  RingPtr source_;
  RingPtr target_;
  std::vector<std::string> order_;
  std::map<std::string, Poly> components_;
};

}  // namespace hyperlie
