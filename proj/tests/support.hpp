#pragma once

#include <random>
#include <vector>

#include "hyperlie/matrix.hpp"
#include "hyperlie/poly.hpp"

namespace hyperlie::testing {

inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, std::size_t max_terms = 5, unsigned max_exp = 3) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < ring->size(); ++v) m.set_exponent(v, exp(rng));
    Rational c(num(rng), den(rng));
    c.canonicalize();
    terms.push_back({m, c});
  }
  return Poly(ring, std::move(terms));
}

/// Homogeneous of the given weight: random monomials of that weight.
inline Poly random_homogeneous(const RingPtr& ring, int weight, std::mt19937_64& rng, std::size_t terms = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, ring->size() - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  Poly out(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m;
    int left = weight;
    for (int guard = 0; left > 0 && guard < 200; ++guard) {
      const std::size_t v = pick(rng);
      const int w = ring->var(v).weight;
      if (w <= 0 || w > left) continue;
      m.set_exponent(v, m.exponent(v) + 1);
      left -= w;
    }
    if (left == 0) out += Poly::constant(ring, num(rng)) * Poly(ring, {{m, Rational(1)}});
  }
  return out;
}

/// Laplace expansion along the first row, no memoization.
inline Poly laplace(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly out(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][c] * laplace(minor);
    if (c % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

inline Poly laplace(const PolyMatrix& m) {
  std::vector<std::vector<Poly>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m(r, c));
  }
  return laplace(rows);
}

/// Gaussian elimination over the rationals with row swaps.
inline Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

inline Rational eval_det(const PolyMatrix& m, const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = evaluate(m(r, c), point);
  }
  return gauss_det(std::move(a));
}

}  // namespace hyperlie::testing
