#include "hyperlie/jacobi_map.hpp"

#include <charconv>
#include <memory>
#include <numeric>
#include <set>

#include "hyperlie/reference_data.hpp"

namespace hyperlie {

std::string x_name(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j % 2 == 0) throw std::out_of_range("no coordinate x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  static const char* kShort[] = {"x", "y", "z"};
  if (j <= 5) return kShort[j / 2] + std::to_string(i + j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

std::string w_name(int k, int l) {
  if (k > l) std::swap(k, l);
  return "w" + std::to_string(k) + "_" + std::to_string(l);
}

namespace {

void add_coordinates(std::vector<GradedVar>& vars, int genus) {
  for (int j = 1; j <= 2 * genus - 1; j += 2) {
    for (int i = 1; i <= 3; ++i) vars.push_back({x_name(i, j), i + j});
  }
}

bool odd_in(int k, int lo, int hi) { return k % 2 != 0 && k >= lo && k <= hi; }

/// Builders for indexed symbols in the relation ring, zero out of range.
struct Symbols {
  int g;
  RingPtr ring;

  Poly zero() const { return Poly(ring); }
  Poly c(const Rational& v) const { return Poly::constant(ring, v); }
  Poly x(int i, int j) const { return odd_in(j, 1, 2 * g - 1) ? Poly::variable(ring, x_name(i, j)) : zero(); }
  Poly w(int k, int l) const {
    return odd_in(k, 3, 2 * g - 1) && odd_in(l, 3, 2 * g - 1) ? Poly::variable(ring, w_name(k, l)) : zero();
  }
  Poly lambda(int s) const {
    return s % 2 == 0 && s >= 4 && s <= 4 * g + 2 ? Poly::variable(ring, CurveModel::lambda_name(s)) : zero();
  }
};

int delta(int a, int b) { return a == b ? 1 : 0; }

bool is_unknown(const GradedVar& v) { return v.name[0] == 'w' || v.name[0] == 'l'; }

}  // namespace

RingPtr make_x_ring(int genus, const std::vector<std::string>& params) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  std::vector<GradedVar> vars;
  add_coordinates(vars, genus);
  for (const auto& p : params) vars.push_back({p, 0});
  return make_ring(std::move(vars));
}

RingPtr make_relation_ring(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  std::vector<GradedVar> vars;
  add_coordinates(vars, genus);
  for (int k = 3; k <= 2 * genus - 1; k += 2) {
    for (int l = k; l <= 2 * genus - 1; l += 2) vars.push_back({w_name(k, l), k + l});
  }
  for (int s = 4; s <= 4 * genus + 2; s += 2) vars.push_back({CurveModel::lambda_name(s), s});
  return make_ring(std::move(vars));
}

SymbolResolver indexed_x_resolver(int genus, RingPtr ring) {
  return [genus, ring = std::move(ring)](std::string_view name) -> std::optional<Poly> {
    if (name.size() < 4 || name[0] != 'x') return std::nullopt;
    const auto us = name.find('_');
    if (us == std::string_view::npos) return std::nullopt;
    int i = 0, j = 0;
    if (std::from_chars(name.data() + 1, name.data() + us, i).ec != std::errc{}) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(name.data() + us + 1, name.data() + name.size(), j);
    if (ec != std::errc{} || ptr != name.data() + name.size() || i < 1 || i > 3 || j < 1 || j % 2 == 0) {
      return std::nullopt;
    }
    if (j > 2 * genus - 1) return Poly(ring);
    return Poly::variable(ring, x_name(i, j));
  };
}

RelationSet generate_relations(int genus) {
  const Symbols s{genus, make_relation_ring(genus)};
  RelationSet out{genus, s.ring, {}};
  const int top = 2 * genus - 1;
  const Poly x2 = s.x(1, 1), x3 = s.x(2, 1), x4 = s.x(3, 1), x13 = s.x(1, 3), x15 = s.x(1, 5);

  out.relations.push_back({"e1", x4 - (s.c(6) * x2 * x2 + s.c(4) * x13 + s.c(2) * s.lambda(4))});
  for (int k = 3; k <= top; k += 2) {
    out.relations.push_back({"e2_" + std::to_string(k),
                             s.x(3, k) - (s.c(6) * x2 * s.x(1, k) + s.c(6) * s.x(1, k + 2) - s.c(2) * s.w(3, k))});
  }
  out.relations.push_back({"e3", x3 * x3 - (s.c(4) * pow(x2, 3) + s.c(4) * x2 * x13 - s.c(4) * x15 + s.c(4) * s.w(3, 3) +
                                             s.c(4) * s.lambda(4) * x2 + s.c(4) * s.lambda(6))});
  for (int k = 3; k <= top; k += 2) {
    const Poly rhs = s.c(4) * x2 * x2 * s.x(1, k) + s.c(2) * x13 * s.x(1, k) + s.c(4) * x2 * s.x(1, k + 2) -
                     s.c(2) * s.x(1, k + 4) - s.c(2) * x2 * s.w(3, k) + s.c(4) * s.w(3, k + 2) - s.c(2) * s.w(5, k) +
                     s.c(2) * s.lambda(4) * s.x(1, k) + s.c(2 * delta(3, k)) * s.lambda(8);
    out.relations.push_back({"e4_" + std::to_string(k), x3 * s.x(2, k) - rhs});
  }
  for (int j = 3; j <= top; j += 2) {
    for (int k = j; k <= top; k += 2) {
      const int d = 2 * delta(j, k) + delta(k, j - 2) + delta(j, k - 2);
      const Poly rhs = s.c(4) * x2 * s.x(1, j) * s.x(1, k) + s.c(4) * s.x(1, k) * s.x(1, j + 2) +
                       s.c(4) * s.x(1, j) * s.x(1, k + 2) + s.c(4) * s.w(k + 2, j + 2) - s.c(2) * s.x(1, j) * s.w(3, k) -
                       s.c(2) * s.x(1, k) * s.w(3, j) - s.c(2) * s.w(k, j + 4) - s.c(2) * s.w(j, k + 4) +
                       s.c(2 * d) * s.lambda(j + k + 4);
      out.relations.push_back({"e5_" + std::to_string(j) + "_" + std::to_string(k), s.x(2, j) * s.x(2, k) - rhs});
    }
  }
  return out;
}

JacobiMap eliminate(const RelationSet& rels, const RingPtr& x_ring, const std::vector<std::size_t>& order_in) {
  const RingPtr& ring = rels.ring;
  std::vector<std::size_t> order = order_in;
  if (order.empty()) {
    order.resize(rels.relations.size());
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != rels.relations.size()) throw std::invalid_argument("order must permute the relations");

  std::set<std::size_t> unknowns;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    if (is_unknown(ring->var(v))) unknowns.insert(v);
  }

  std::map<std::size_t, Poly> solved;
  std::vector<std::size_t> pending = order;
  std::vector<std::string> solve_order;
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    Substitution known(ring, ring, Substitution::Unassigned::kPassThroughByName);
    for (const auto& [v, p] : solved) known.assign(v, p);
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const Relation& rel = rels.relations.at(*it);
      const Poly r = substitute(rel.poly, known);
      std::vector<std::size_t> present;
      for (std::size_t v : unknowns) {
        if (!solved.contains(v) && degree_in(r, v) > 0) present.push_back(v);
      }
      if (present.empty()) {
        // Everything already determined: the relation is a consistency condition.
        if (!r.is_zero()) throw EliminationError("relation " + rel.label + " is inconsistent: " + witness_text(r, 400));
        pending.erase(it);
        progress = true;
        break;
      }
      if (present.size() != 1) continue;
      const std::size_t u = present.front();
      const auto coeffs = coefficients_in(r, u);
      const auto c = coeffs.size() == 2 ? coeffs[1].constant_value() : std::nullopt;
      if (!c) {
        throw EliminationError("relation " + rel.label + " is not linear in " + ring->var(u).name +
                               " with a constant coefficient");
      }
      solved.emplace(u, coeffs[0] * Rational(-1 / *c));
      solve_order.push_back(ring->var(u).name);
      pending.erase(it);
      progress = true;
      break;
    }
  }
  for (std::size_t v : unknowns) {
    if (!solved.contains(v)) throw EliminationError("no relation determines " + ring->var(v).name);
  }

  JacobiMap jm{rels.genus, x_ring, {}, {}, std::move(solve_order)};
  for (const auto& [v, p] : solved) {
    const std::string& name = ring->var(v).name;
    Poly e = rebase(p, x_ring);
    if (name[0] == 'l') {
      jm.lambda_exprs.emplace(name, std::move(e));
    } else {
      jm.w_exprs.emplace(name, std::move(e));
    }
  }
  return jm;
}

PolyMap build_p(const JacobiMap& jm, const CurveModel& model) {
  if (model.genus() != jm.genus) throw std::invalid_argument("map and model disagree on the genus");
  PolyMap p("p", model.ring(), jm.x_ring);
  for (const auto& name : model.lambda_names()) p.set(name, jm.lambda_exprs.at(name));
  return p;
}

Outcome verify_relations_vanish(ZeroTest& zt, const RelationSet& rels, const JacobiMap& jm) {
  Substitution s(rels.ring, jm.x_ring, Substitution::Unassigned::kPassThroughByName);
  for (const auto& [name, e] : jm.lambda_exprs) s.assign(name, e);
  for (const auto& [name, e] : jm.w_exprs) s.assign(name, e);
  std::vector<std::pair<std::string, Poly>> residuals;
  for (const auto& rel : rels.relations) residuals.emplace_back(rel.label, substitute(rel.poly, s));
  return expect_zero(zt, residuals);
}

namespace {

Outcome compare_named(ZeroTest& zt, const std::map<std::string, Poly>& computed,
                      const std::vector<reference::NamedExpr>& printed, const RingPtr& ring,
                      const SymbolResolver& resolve = {}) {
  std::vector<std::pair<std::string, Poly>> residuals;
  for (const auto& e : printed) {
    auto it = computed.find(e.name);
    if (it == computed.end()) return Outcome::fail(e.name, "no computed expression for " + e.name);
    residuals.emplace_back(e.name, it->second - parse_poly(ring, e.expr, resolve));
  }
  return expect_zero(zt, residuals);
}

}  // namespace

std::vector<Check> map_checks(int genus) {
  const std::string pre = "g" + std::to_string(genus) + ".map.";
  auto rels = std::make_shared<const RelationSet>(generate_relations(genus));
  std::shared_ptr<const JacobiMap> jm;
  try {
    jm = std::make_shared<const JacobiMap>(eliminate(*rels, make_x_ring(genus)));
  } catch (const std::exception& e) {
    return {{pre + "eliminate", "relations solve for lambda and w", [msg = std::string(e.what())](ZeroTest&) {
               return Outcome::fail(msg, "elimination failed");
             }}};
  }

  std::vector<Check> checks;
  checks.push_back({pre + "relation_count", "g(g+3)/2 homogeneous relations", [rels](ZeroTest&) {
                      const std::size_t g = static_cast<std::size_t>(rels->genus);
                      if (rels->relations.size() != g * (g + 3) / 2) {
                        return Outcome::fail(std::to_string(rels->relations.size()) + " relations",
                                             "expected " + std::to_string(g * (g + 3) / 2));
                      }
                      for (const auto& r : rels->relations) {
                        if (!weight_check(r.poly).homogeneous) return Outcome::fail(witness_text(r.poly), r.label + " is not homogeneous");
                      }
                      return Outcome::ok(std::to_string(rels->relations.size()) + " relations");
                    }});
  checks.push_back({pre + "relations_vanish", "every relation vanishes on the solved map", [rels, jm](ZeroTest& zt) {
                      return verify_relations_vanish(zt, *rels, *jm);
                    }});
  checks.push_back({pre + "weights", "solved expressions have the weight of their symbol", [jm](ZeroTest&) {
                      const RingPtr rr = make_relation_ring(jm->genus);
                      for (const auto* table : {&jm->lambda_exprs, &jm->w_exprs}) {
                        for (const auto& [name, e] : *table) {
                          if (!is_homogeneous_of(e, rr->var(rr->index_of(name)).weight)) {
                            return Outcome::fail(witness_text(e), name + " has the wrong weight");
                          }
                        }
                      }
                      return Outcome::ok("solved " + std::to_string(jm->solve_order.size()) + " symbols");
                    }});
  checks.push_back({pre + "lambda_printed", "components of p as displayed", [jm](ZeroTest& zt) {
                      return compare_named(zt, jm->lambda_exprs, reference::lambda_map(jm->genus), jm->x_ring);
                    }});
  if (genus >= 2) {
    checks.push_back({pre + "w_printed", "w coordinates as displayed", [jm](ZeroTest& zt) {
                        return compare_named(zt, jm->w_exprs, reference::w_map(jm->genus), jm->x_ring);
                      }});
  }
  checks.push_back({pre + "general_formulas", "closed forms for l4, l6, l8, w_{3,k}, w_{5,k}", [jm](ZeroTest& zt) {
                      std::map<std::string, Poly> all = jm->lambda_exprs;
                      all.insert(jm->w_exprs.begin(), jm->w_exprs.end());
                      return compare_named(zt, all, reference::general_formulas(jm->genus), jm->x_ring,
                                           indexed_x_resolver(jm->genus, jm->x_ring));
                    }});
  checks.push_back({pre + "order_independent", "elimination does not depend on relation order", [rels, jm](ZeroTest&) {
                      std::vector<std::size_t> order(rels->relations.size());
                      std::iota(order.rbegin(), order.rend(), 0);
                      const JacobiMap other = eliminate(*rels, jm->x_ring, order);
                      if (other.lambda_exprs != jm->lambda_exprs || other.w_exprs != jm->w_exprs) {
                        return Outcome::fail("reversed order", "elimination result changed");
                      }
                      return Outcome::ok();
                    }});
  return checks;
}

}  // namespace hyperlie
