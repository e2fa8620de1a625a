#include "hyperlie/ring.hpp"

#include <bit>
#include <stdexcept>

namespace hyperlie {
namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

}  // namespace

Ring::Ring(std::vector<GradedVar> vars) : vars_(std::move(vars)) {
  if (vars_.size() > Monomial::kMaxVars) {
    throw RingError("ring has " + std::to_string(vars_.size()) + " variables; at most " +
                    std::to_string(Monomial::kMaxVars) + " are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.name.empty()) throw RingError("empty variable name");
    if (v.weight < 0) throw RingError("negative weight for variable " + v.name);
    if (!index_.emplace(v.name, i).second) throw RingError("duplicate variable name " + v.name);
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw RingError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<GradedVar> vars) { return std::make_shared<const Ring>(std::move(vars)); }

void Monomial::set_exponent(std::size_t var, unsigned exponent) {
  if (var >= kMaxVars) throw RingError("variable index out of range");
  if (exponent > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 127");
  auto& w = words_[var / 8];
  w &= ~(std::uint64_t{0xff} << shift(var));
  w |= std::uint64_t{exponent} << shift(var);
}

unsigned Monomial::total_degree() const {
  unsigned total = 0;
  for (auto w : words_) {
    for (int b = 0; b < 8; ++b) total += static_cast<unsigned>((w >> (8 * b)) & 0xffu);
  }
  return total;
}

int Monomial::weight(const Ring& ring) const {
  int total = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) total += static_cast<int>(exponent(i)) * ring.var(i).weight;
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kWords; ++i) {
    const std::uint64_t sum = words_[i] + other.words_[i];
    if ((sum & kHighBits) != 0) throw std::overflow_error("monomial exponent exceeds 127");
    out.words_[i] = sum;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kWords; ++i) {
    if ((((other.words_[i] | kHighBits) - words_[i]) & kHighBits) != kHighBits) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kWords; ++i) out.words_[i] = words_[i] - divisor.words_[i];
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h = std::rotl(h * 0xbf58476d1ce4e5b9ull, 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hyperlie
