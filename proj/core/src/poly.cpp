#include "hyperlie/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlie {
namespace {

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) sum += terms[j++].coeff;
    if (sgn(sum) != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Multiplying every monomial by a fixed monomial preserves the order.
Poly times_term(const Poly& p, const Term& t) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) out.push_back({term.monomial * t.monomial, term.coeff * t.coeff});
  return Poly::from_sorted(p.ring(), std::move(out));
}

// Numerators over a common denominator, which is returned.
mpz_class integral_coeffs(const Poly& p, std::vector<mpz_class>& out) {
  mpz_class den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  out.clear();
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(den / t.coeff.get_den() * t.coeff.get_num());
  return den;
}

// Schoolbook product over the integers; one rational division per term.
Poly integral_product(const Poly& a, const Poly& b) {
  std::vector<mpz_class> na, nb;
  const mpz_class den = integral_coeffs(a, na) * integral_coeffs(b, nb);
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    for (std::size_t j = 0; j < tb.size(); ++j) {
      auto& slot = acc[ta[i].monomial * tb[j].monomial];
      mpz_addmul(slot.get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) == 0) continue;
    Rational q(c, den);
    q.canonicalize();
    out.push_back({m, std::move(q)});
  }
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  return Poly::from_sorted(a.ring(), std::move(out));
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingError("polynomial without a ring");
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw RingError("polynomial without a ring");
  sort_and_combine(terms_);
}

Poly Poly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::constant(RingPtr ring, const Rational& value) {
  Poly p(std::move(ring));
  if (sgn(value) != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw RingError("variable index out of range");
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  const auto index = ring->index_of(name);
  return variable(std::move(ring), index);
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.back();
}

void Poly::require_same_ring(const Poly& other) const {
  if (ring_ != other.ring_) throw RingError("mismatched ring context");
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].monomial < other.terms_[j].monomial)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].monomial < terms_[i].monomial) {
      merged.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (sgn(c) != 0) merged.push_back({terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& scale) {
  if (sgn(scale) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scale;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring());
  if (b.size() == 1) return times_term(a, b.terms_[0]);
  if (a.size() == 1) return times_term(b, a.terms_[0]);
  return integral_product(a, b);
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.ring(), 1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

PolyAccumulator::PolyAccumulator(RingPtr ring) : ring_(std::move(ring)) {}

void PolyAccumulator::check(const Poly& p) const {
  if (p.ring() != ring_) throw RingError("mismatched ring context");
}

void PolyAccumulator::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const Poly& p) {
  check(p);
  for (const auto& t : p.terms()) add_term(t.monomial, t.coeff);
}

void PolyAccumulator::add(const Poly& p, const Rational& scale) {
  check(p);
  if (sgn(scale) == 0) return;
  Rational c;
  for (const auto& t : p.terms()) {
    c = t.coeff * scale;
    add_term(t.monomial, c);
  }
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b) {
  check(a);
  check(b);
  acc_.reserve(acc_.size() + std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  Rational c;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      c = ta.coeff * tb.coeff;
      add_term(ta.monomial * tb.monomial, c);
    }
  }
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b, const Rational& scale) {
  if (sgn(scale) == 0) return;
  if (a.size() <= b.size()) {
    add_product(a * scale, b);
  } else {
    add_product(a, b * scale);
  }
}

Poly PolyAccumulator::take() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  acc_.clear();
  return Poly(ring_, std::move(terms));
}

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.ring()->size()) throw RingError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial.exponent(var);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set_exponent(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly(p.ring(), std::move(out));
}

Poly partial(const Poly& p, std::string_view var) { return partial(p, p.ring()->index_of(var)); }

WeightCheck weight_check(const Poly& p) {
  WeightCheck out;
  for (const auto& t : p.terms()) {
    const int w = t.monomial.weight(*p.ring());
    if (!out.weight) {
      out.weight = w;
    } else if (*out.weight != w) {
      return WeightCheck{false, std::nullopt};
    }
  }
  return out;
}

bool is_homogeneous_of(const Poly& p, int weight) {
  const auto w = weight_check(p);
  return w.homogeneous && (!w.weight || *w.weight == weight);
}

unsigned total_degree(const Poly& p) {
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.total_degree());
  return d;
}

unsigned degree_in(const Poly& p, std::size_t var) {
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  const unsigned d = degree_in(p, var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    const unsigned e = m.exponent(var);
    m.set_exponent(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
  return out;
}

Rational evaluate(const Poly& p, std::span<const Rational> point) {
  const auto& ring = *p.ring();
  if (point.size() != ring.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<std::vector<Rational>> powers(ring.size());
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational value = t.coeff;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * point[v]);
      value *= cache[e];
    }
    total += value;
  }
  return total;
}

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) throw RingError("mismatched ring context");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly(a.ring());
  if (auto c = b.constant_value()) return a * Rational(1 / *c);

  const Term& lead = b.leading_term();
  const Rational inv_lead = 1 / lead.coeff;
  std::map<Monomial, Rational> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.monomial, t.coeff);
  std::vector<Term> quotient;
  Rational c;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    const Monomial qm = top->first / lead.monomial;
    const Rational qc = top->second * inv_lead;
    for (const auto& t : b.terms()) {
      c = qc * t.coeff;
      auto [it, inserted] = rem.try_emplace(t.monomial * qm, -c);
      if (!inserted) {
        it->second -= c;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quotient.push_back({qm, qc});
  }
  std::reverse(quotient.begin(), quotient.end());
  return Poly(a.ring(), std::move(quotient));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (auto q = try_divide(a, b)) return std::move(*q);
  throw std::domain_error("polynomial division is not exact");
}

Substitution::Substitution(RingPtr source, RingPtr target, Unassigned mode)
    : source_(std::move(source)), target_(std::move(target)), mode_(mode), images_(source_->size()) {}

Substitution& Substitution::assign(std::string_view var, Poly image) {
  return assign(source_->index_of(var), std::move(image));
}

Substitution& Substitution::assign(std::size_t var, Poly image) {
  if (image.ring() != target_) throw RingError("substitution image lives in the wrong ring");
  images_.at(var) = std::move(image);
  return *this;
}

std::optional<Poly> Substitution::image(std::size_t var) const {
  if (images_.at(var)) return images_[var];
  if (mode_ == Unassigned::kPassThroughByName) {
    if (auto t = target_->find(source_->var(var).name)) return Poly::variable(target_, *t);
  }
  return std::nullopt;
}

Poly substitute(const Poly& p, const Substitution& s) {
  if (p.ring() != s.source()) throw RingError("substitution source ring does not match polynomial");
  const auto& ring = *p.ring();
  std::vector<std::optional<Poly>> images(ring.size());
  std::vector<std::vector<Poly>> powers(ring.size());
  PolyAccumulator acc(s.target());
  for (const auto& t : p.terms()) {
    Poly value = Poly::constant(s.target(), t.coeff);
    for (std::size_t v = 0; v < ring.size(); ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) {
        images[v] = s.image(v);
        if (!images[v]) throw RingError("substitution leaves variable '" + ring.var(v).name + "' unassigned");
        cache.push_back(Poly::constant(s.target(), 1));
      }
      while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
      value = value * cache[e];
    }
    acc.add(value);
  }
  return acc.take();
}

Poly rebase(const Poly& p, const RingPtr& target) {
  if (p.ring() == target) return p;
  return substitute(p, Substitution(p.ring(), target, Substitution::Unassigned::kPassThroughByName));
}

PolyMap::PolyMap(std::string name, RingPtr source, RingPtr target)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {}

PolyMap& PolyMap::set(std::string_view source_var, Poly image) {
  source_->index_of(source_var);
  if (image.ring() != target_) throw RingError("map component lives in the wrong ring");
  const std::string key(source_var);
  if (!components_.contains(key)) order_.push_back(key);
  components_.insert_or_assign(key, std::move(image));
  return *this;
}

const Poly& PolyMap::component(std::string_view source_var) const {
  auto it = components_.find(std::string(source_var));
  if (it == components_.end()) throw RingError("map " + name_ + " has no component " + std::string(source_var));
  return it->second;
}

Poly PolyMap::pullback(const Poly& f) const {
  Substitution s(source_, target_, Substitution::Unassigned::kError);
  for (const auto& [var, image] : components_) s.assign(var, image);
  return substitute(f, s);
}

}  // namespace hyperlie
