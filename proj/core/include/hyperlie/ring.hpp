#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperlie {

/// Raised when polynomials from different ring contexts are combined, or a
/// variable is looked up in a ring that does not declare it.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GradedVar {
  std::string name;
  int weight = 0;
};

/// An ordered set of graded variables. Declaration order is the canonical
/// variable order used for printing and for term ordering.
class Ring {
 public:
  explicit Ring(std::vector<GradedVar> vars);

  std::size_t size() const { return vars_.size(); }
  const GradedVar& var(std::size_t index) const { return vars_.at(index); }
  const std::vector<GradedVar>& vars() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws RingError
  bool contains(std::string_view name) const { return find(name).has_value(); }

 private:
  std::vector<GradedVar> vars_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<GradedVar> vars);

/// Exponent vector over a ring with at most kMaxVars variables. Exponents are
/// packed one byte each, eight to a word, so that products are word additions
/// and the defaulted ordering is lexicographic with variable 0 most
/// significant.
class Monomial {
 public:
  static constexpr std::size_t kWords = 5;
  static constexpr std::size_t kMaxVars = 8 * kWords;
  static constexpr unsigned kMaxExponent = 127;

  Monomial() = default;

  static Monomial variable(std::size_t var, unsigned exponent = 1) {
    Monomial m;
    m.set_exponent(var, exponent);
    return m;
  }

  unsigned exponent(std::size_t var) const {
    return static_cast<unsigned>((words_[var / 8] >> shift(var)) & 0xffu);
  }
  void set_exponent(std::size_t var, unsigned exponent);

  bool is_one() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  unsigned total_degree() const;
  int weight(const Ring& ring) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  std::size_t hash() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static constexpr unsigned shift(std::size_t var) { return static_cast<unsigned>(8 * (7 - var % 8)); }
  std::array<std::uint64_t, kWords> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hyperlie
