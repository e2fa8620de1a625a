#include "hyperlie/derivation.hpp"

#include <algorithm>
#include <set>

#include "hyperlie/poly_io.hpp"

namespace hyperlie {

Derivation::Derivation(std::string name, int weight, RingPtr ring)
    : name_(std::move(name)), weight_(weight), ring_(std::move(ring)), action_(ring_->size(), Poly(ring_)) {}

Derivation::Derivation(std::string name, int weight, RingPtr ring, std::vector<Poly> action)
    : name_(std::move(name)), weight_(weight), ring_(std::move(ring)), action_(std::move(action)) {
  if (action_.size() != ring_->size()) throw std::invalid_argument("derivation needs one component per variable");
  for (const auto& a : action_) {
    if (a.ring() != ring_) throw RingError("derivation component lives in the wrong ring");
  }
}

Derivation& Derivation::set(std::size_t var, Poly image) {
  if (image.ring() != ring_) throw RingError("derivation component lives in the wrong ring");
  action_.at(var) = std::move(image);
  return *this;
}

Derivation& Derivation::set(std::string_view var, Poly image) { return set(ring_->index_of(var), std::move(image)); }

Derivation Derivation::renamed(std::string name) const {
  Derivation d = *this;
  d.name_ = std::move(name);
  return d;
}

bool Derivation::is_zero() const {
  return std::all_of(action_.begin(), action_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly Derivation::operator()(const Poly& p) const {
  if (p.ring() != ring_) throw RingError("derivation applied to a polynomial of another ring");
  std::vector<bool> present(ring_->size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      if (t.monomial.exponent(v) != 0) present[v] = true;
    }
  }
  PolyAccumulator acc(ring_);
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (present[v] && !action_[v].is_zero()) acc.add_product(action_[v], partial(p, v));
  }
  return acc.take();
}

Derivation Derivation::operator-() const {
  Derivation d = *this;
  for (auto& a : d.action_) a = -a;
  return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (other.ring_ != ring_) throw RingError("mismatched ring context");
  for (std::size_t v = 0; v < action_.size(); ++v) action_[v] += other.action_[v];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  if (other.ring_ != ring_) throw RingError("mismatched ring context");
  for (std::size_t v = 0; v < action_.size(); ++v) action_[v] -= other.action_[v];
  return *this;
}

Derivation operator*(const Poly& coeff, const Derivation& d) {
  if (coeff.ring() != d.ring_) throw RingError("mismatched ring context");
  Derivation out = d;
  for (auto& a : out.action_) a = coeff * a;
  return out;
}

bool operator==(const Derivation& a, const Derivation& b) { return a.ring_ == b.ring_ && a.action_ == b.action_; }

Poly apply(const Derivation& d, const Poly& p) { return d(p); }

Derivation bracket(const Derivation& a, const Derivation& b) {
  if (a.ring() != b.ring()) throw RingError("mismatched ring context");
  std::vector<Poly> action;
  action.reserve(a.ring()->size());
  for (std::size_t v = 0; v < a.ring()->size(); ++v) action.push_back(a(b.action(v)) - b(a.action(v)));
  return Derivation("[" + a.name() + "," + b.name() + "]", a.weight() + b.weight(), a.ring(), std::move(action));
}

Derivation map_coefficients(const Derivation& d, const std::function<Poly(const Poly&)>& f) {
  std::vector<Poly> action;
  action.reserve(d.actions().size());
  for (const auto& a : d.actions()) action.push_back(f(a));
  return Derivation(d.name(), d.weight(), d.ring(), std::move(action));
}

std::vector<std::string> homogeneity_defects(const Derivation& d) {
  std::vector<std::string> bad;
  for (std::size_t v = 0; v < d.ring()->size(); ++v) {
    const auto& var = d.ring()->var(v);
    if (!is_homogeneous_of(d.action(v), var.weight + d.weight())) bad.push_back(var.name);
  }
  return bad;
}

nlohmann::json to_json(const Derivation& d) {
  nlohmann::json action = nlohmann::json::object();
  for (std::size_t v = 0; v < d.ring()->size(); ++v) {
    if (!d.action(v).is_zero()) action[d.ring()->var(v).name] = to_text(d.action(v));
  }
  return {{"name", d.name()}, {"weight", d.weight()}, {"action", std::move(action)}};
}

FieldSet& FieldSet::add(Derivation d) {
  if (d.ring() != ring_) throw RingError("field " + d.name() + " lives in another ring");
  if (contains(d.name())) throw std::invalid_argument("duplicate field " + d.name());
  index_.emplace(d.name(), fields_.size());
  fields_.push_back(std::move(d));
  return *this;
}

FieldSet& FieldSet::replace(Derivation d) {
  auto it = index_.find(d.name());
  if (it == index_.end()) return add(std::move(d));
  if (d.ring() != ring_) throw RingError("field " + d.name() + " lives in another ring");
  fields_[it->second] = std::move(d);
  return *this;
}

const Derivation& FieldSet::at(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unknown field " + std::string(name));
  return fields_[it->second];
}

std::vector<std::string> FieldSet::names() const {
  std::vector<std::string> out;
  for (const auto& f : fields_) out.push_back(f.name());
  return out;
}

Derivation combine(const FieldSet& fields, const Expansion& expansion, int weight, std::string name) {
  Derivation out(std::move(name), weight, fields.ring());
  for (const auto& term : expansion) {
    if (term.coeff.is_zero()) continue;
    out += term.coeff * fields.at(term.field);
  }
  return out;
}

Derivation bracket_residual(const FieldSet& fields, const BracketRelation& rel) {
  const Derivation lhs = bracket(fields.at(rel.left), fields.at(rel.right));
  return lhs - combine(fields, rel.expansion, lhs.weight());
}

Outcome expect_zero(ZeroTest& zt, const Derivation& residual) {
  for (std::size_t v = 0; v < residual.ring()->size(); ++v) {
    const Poly& c = residual.action(v);
    if (!zt.is_zero(c)) {
      const std::string var = residual.ring()->var(v).name;
      return Outcome::fail("d/d" + var + ": " + witness_text(c), "residual survives on " + var);
    }
  }
  return Outcome::ok();
}

Outcome verify_bracket_relation(ZeroTest& zt, const FieldSet& fields, const BracketRelation& rel) {
  return expect_zero(zt, bracket_residual(fields, rel));
}

Outcome verify_pushforward(ZeroTest& zt, const Derivation& up, const PolyMap& p, const Derivation& down) {
  if (up.ring() != p.target() || down.ring() != p.source()) throw RingError("pushforward rings do not match the map");
  std::vector<std::pair<std::string, Poly>> residuals;
  for (const auto& s : p.domain()) {
    const Poly lhs = up(p.component(s));
    const Poly rhs = p.pullback(down(Poly::variable(p.source(), s)));
    residuals.emplace_back(s, lhs - rhs);
  }
  Outcome o = expect_zero(zt, residuals);
  if (o.pass) o.detail = std::to_string(residuals.size()) + " components agree";
  return o;
}

Derivation ladder_complete(std::string name, int weight, const std::map<std::string, Poly>& seeds,
                           const Derivation& partner, const Derivation& rhs, const std::vector<LadderChain>& chains) {
  const RingPtr& ring = partner.ring();
  if (rhs.ring() != ring) throw RingError("ladder rhs lives in another ring");
  std::set<std::size_t> covered;
  for (const auto& chain : chains) {
    if (chain.empty()) throw LadderError("empty ladder chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const std::size_t v = ring->index_of(chain[i]);
      if (!covered.insert(v).second) throw LadderError("variable " + chain[i] + " appears twice in the ladder");
      if (i + 1 < chain.size() && !(partner.action(v) == Poly::variable(ring, chain[i + 1]))) {
        throw LadderError(partner.name() + " does not step " + chain[i] + " to " + chain[i + 1]);
      }
    }
    if (!seeds.contains(chain.front())) throw LadderError("no seed for " + chain.front());
  }
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (ring->var(v).weight > 0 && !covered.contains(v)) {
      throw LadderError("ladder does not reach " + ring->var(v).name);
    }
  }
  for (const auto& [var, value] : seeds) {
    const bool is_base =
        std::any_of(chains.begin(), chains.end(), [&, &var = var](const LadderChain& c) { return c.front() == var; });
    if (!is_base) throw LadderError("seed " + var + " is not the foot of a chain");
    if (value.ring() != ring) throw RingError("seed for " + var + " lives in another ring");
  }

  Derivation d(std::move(name), weight, ring);
  for (const auto& chain : chains) d.set(chain.front(), seeds.at(chain.front()));

  // Each rung only needs the one below it; ascending weight is the traversal.
  std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> steps;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (std::size_t i = 1; i < chains[c].size(); ++i) {
      steps.push_back({ring->var(ring->index_of(chains[c][i])).weight, {c, i}});
    }
  }
  std::stable_sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [w, at] : steps) {
    const auto& chain = chains[at.first];
    const std::size_t below = ring->index_of(chain[at.second - 1]);
    d.set(chain[at.second], partner(d.action(below)) - rhs.action(below));
  }

  for (const auto& chain : chains) {
    const std::size_t top = ring->index_of(chain.back());
    const Poly lhs = d(partner.action(top));
    const Poly expected = partner(d.action(top)) - rhs.action(top);
    const Poly defect = lhs - expected;
    if (!defect.is_zero()) {
      throw LadderError("inconsistent rhs: closure at " + chain.back() + " leaves " + witness_text(defect, 600));
    }
  }
  return d;
}

}  // namespace hyperlie
