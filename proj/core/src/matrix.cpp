#include "hyperlie/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hyperlie {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly value) {
  if (value.ring() != ring_) throw RingError("matrix entry lives in the wrong ring");
  entries_.at(r * cols_ + c) = std::move(value);
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
}

mpz_class row_denominator_lcm(const PolyMatrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& t : m(r, c).terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return l;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  std::vector<std::vector<Poly>> a(n);
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const mpz_class d = row_denominator_lcm(m, r);
    scale *= d;
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(m(r, c) * Rational(d));
  }

  int sign = 1;
  Poly previous = Poly::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot in column k keeps the intermediate minors small.
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!a[r][k].is_zero() && (pivot == n || a[r][k].size() < a[pivot][k].size())) pivot = r;
    }
    if (pivot == n) return Poly(ring);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, previous);
      }
      a[i][k] = Poly(ring);
    }
    previous = a[k][k];
  }
  return a[n - 1][n - 1] * Rational(sign / scale);
}

namespace {

using IntTerms = std::vector<std::pair<Monomial, mpz_class>>;

// Row scaled by the lcm of its denominators; the lcm is returned.
mpz_class integral_row(const PolyMatrix& m, std::size_t row, std::vector<IntTerms>& out) {
  mpz_class den = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& t : m(row, c).terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  out.assign(m.cols(), {});
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& t : m(row, c).terms()) out[c].emplace_back(t.monomial, den / t.coeff.get_den() * t.coeff.get_num());
  }
  return den;
}

}  // namespace

Poly determinant_by_minors(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n > 30) throw std::invalid_argument("minor expansion supports at most 30 rows");
  using Mask = std::uint32_t;
  using Acc = std::unordered_map<Monomial, mpz_class, MonomialHash>;

  mpz_class scale = 1;
  std::vector<IntTerms> row_terms;
  // Minors of the last k rows, keyed by the set of k columns used.
  std::unordered_map<Mask, IntTerms> level;
  scale *= integral_row(m, n - 1, row_terms);
  for (std::size_t c = 0; c < n; ++c) {
    if (!row_terms[c].empty()) level.emplace(Mask{1} << c, std::move(row_terms[c]));
  }
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t row = n - k;
    scale *= integral_row(m, row, row_terms);
    std::unordered_map<Mask, Acc> sums;
    for (const auto& [mask, minor] : level) {
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1u) continue;
        const IntTerms& entry = row_terms[c];
        if (entry.empty()) continue;
        // Sign of c's position within the enlarged column set.
        const bool negate = std::popcount(mask & ((Mask{1} << c) - 1)) % 2 != 0;
        Acc& acc = sums[mask | (Mask{1} << c)];
        for (const auto& [em, ec] : entry) {
          for (const auto& [mm, mc] : minor) {
            auto& slot = acc[em * mm];
            if (negate) {
              mpz_submul(slot.get_mpz_t(), ec.get_mpz_t(), mc.get_mpz_t());
            } else {
              mpz_addmul(slot.get_mpz_t(), ec.get_mpz_t(), mc.get_mpz_t());
            }
          }
        }
      }
    }
    std::unordered_map<Mask, IntTerms> next;
    for (auto& [mask, acc] : sums) {
      IntTerms terms;
      terms.reserve(acc.size());
      for (auto& [mono, coeff] : acc) {
        if (sgn(coeff) != 0) terms.emplace_back(mono, std::move(coeff));
      }
      if (!terms.empty()) next.emplace(mask, std::move(terms));
    }
    level = std::move(next);
  }
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  auto it = level.find(full);
  if (it == level.end()) return Poly(m.ring());
  std::vector<Term> out;
  out.reserve(it->second.size());
  for (auto& [mono, coeff] : it->second) {
    Rational q(std::move(coeff), scale);
    q.canonicalize();
    out.push_back({mono, std::move(q)});
  }
  return Poly(m.ring(), std::move(out));
}

PolyMatrix sylvester_matrix(const Poly& f, const Poly& h, std::size_t var) {
  if (f.ring() != h.ring()) throw RingError("mismatched ring context");
  if (f.is_zero() || h.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const auto fc = coefficients_in(f, var);
  const auto hc = coefficients_in(h, var);
  const std::size_t df = fc.size() - 1;
  const std::size_t dh = hc.size() - 1;
  const std::size_t size = df + dh;
  if (size == 0) throw std::invalid_argument("resultant of two constants");
  PolyMatrix s(f.ring(), size, size);
  for (std::size_t r = 0; r < dh; ++r) {
    for (std::size_t k = 0; k <= df; ++k) s.set(r, r + k, fc[df - k]);
  }
  for (std::size_t r = 0; r < df; ++r) {
    for (std::size_t k = 0; k <= dh; ++k) s.set(dh + r, r + k, hc[dh - k]);
  }
  return s;
}

Poly resultant(const Poly& f, const Poly& h, std::size_t var) { return determinant(sylvester_matrix(f, h, var)); }

Rational determinant(std::vector<Rational> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("rational matrix has wrong size");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a[pivot * n + k]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a[r * n + k]) == 0) continue;
      const Rational factor = a[r * n + k] / a[k * n + k];
      for (std::size_t c = k; c < n; ++c) a[r * n + c] -= factor * a[k * n + c];
    }
  }
  return det;
}

}  // namespace hyperlie
