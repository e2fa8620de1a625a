#pragma once

#include <cstddef>
#include <vector>

#include "hyperlie/poly.hpp"

namespace hyperlie {

/// Dense rectangular grid of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Poly value);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Fraction-free Bareiss elimination. Row denominators are cleared first and
/// the scalar restored at the end; intermediate divisions are exact.
Poly determinant(const PolyMatrix& m);

/// Laplace expansion with memoized column-subset minors. Cheaper than
/// elimination when entries are small and the determinant is large.
Poly determinant_by_minors(const PolyMatrix& m);

/// Rows n..: coefficients of f (leading first), then rows of h, with
/// deg_var f = m and deg_var h = n giving an (m+n) square matrix.
PolyMatrix sylvester_matrix(const Poly& f, const Poly& h, std::size_t var);

/// det of the Sylvester matrix of f, h with respect to var.
Poly resultant(const Poly& f, const Poly& h, std::size_t var);

/// Determinant of a square matrix of rationals (row-major) by Gaussian
/// elimination.
Rational determinant(std::vector<Rational> entries, std::size_t n);

}  // namespace hyperlie
