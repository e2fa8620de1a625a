#include "hyperlie/genus_fields.hpp"

#include <algorithm>
#include <charconv>

#include "hyperlie/poly_io.hpp"

namespace hyperlie {

namespace {

std::vector<std::string> params_for(int genus) {
  if (genus == 2) return {"alpha", "beta", "gamma1", "gamma2"};
  return {};
}

std::string field_name(int k) { return "L" + std::to_string(k); }

int field_weight(std::string_view name) {
  int k = 0;
  std::from_chars(name.data() + 1, name.data() + name.size(), k);
  return k;
}

Poly coordinate(const RingPtr& ring, int genus, int i, int j) {
  if (j < 1 || j > 2 * genus - 1) return Poly(ring);
  return Poly::variable(ring, x_name(i, j));
}

Derivation from_printed(const std::string& name, const GenusModel& model, const std::vector<reference::FieldValue>& rows) {
  Derivation d(name, field_weight(name), model.x_ring);
  for (const auto& r : rows) {
    if (r.field == name) d.set(r.var, model.parse(r.expr));
  }
  return d;
}

bool has_printed(const std::string& name, const std::vector<reference::FieldValue>& rows) {
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.field == name; });
}

/// Seeds of a field: its printed values on the feet x_{1,j} of the chains.
std::map<std::string, Poly> seeds_of(const Derivation& d, int genus) {
  std::map<std::string, Poly> seeds;
  for (const auto& chain : ladder_chains(genus)) seeds.emplace(chain.front(), d.action(chain.front()));
  return seeds;
}

/// [L1, L_k] as printed: the normalization rows for genus 2, the table row
/// otherwise; [L1, L0] = -L1 in every genus.
std::optional<reference::TableRow> L1_row(int genus, const std::string& right) {
  if (right == "L0") return reference::TableRow{"L1", "L0", {{"-1", "L1"}}};
  const auto rows = genus == 2 ? reference::genus2_normalization() : reference::bracket_table(genus);
  for (const auto& r : rows) {
    if (r.left == "L1" && r.right == right) return r;
  }
  return std::nullopt;
}

Derivation ladder_field(const GenusModel& model, const FieldSet& basis, const std::string& name,
                        const std::map<std::string, Poly>& seeds, const reference::TableRow& row) {
  const Derivation& L1 = basis.at("L1");
  const Derivation rhs = combine(basis, parse_expansion(model, row.terms, model.resolver()), L1.weight() + field_weight(name));
  return ladder_complete(name, field_weight(name), seeds, L1, rhs, ladder_chains(model.genus));
}

Rational numeric_det(const PolyMatrix& m, std::span<const Rational> point) {
  std::vector<Rational> values;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) values.push_back(evaluate(m(r, c), point));
  }
  return determinant(std::move(values), m.rows());
}

}  // namespace

GenusModel::GenusModel(int g)
    : genus(g),
      curve(g),
      params(params_for(g)),
      x_ring(make_x_ring(g, params)),
      jacobi(eliminate(generate_relations(g), x_ring)),
      p(build_p(jacobi, curve)),
      lambda_fields(build_L_fields(curve)),
      fields(x_ring) {
  if (g < 1 || g > 3) throw std::invalid_argument("lifted fields are available for genus 1, 2, 3");

  // Odd fields first: the even ones and the auxiliary polynomials need them.
  FieldSet odd(x_ring);
  const Derivation L1 = build_L1(g, x_ring);
  odd.add(L1);
  for (int s = 3; s <= 2 * g - 1; s += 2) odd.add(build_odd(g, s, L1, jacobi.w_exprs));

  static const std::map<std::string, std::string> kAliases = {{"w6", "w3_3"}, {"w8", "w3_5"}, {"w10", "w5_5"}};
  for (const auto& def : reference::aux(g)) {
    if (def.definitions.empty()) {
      aux.emplace(def.name, jacobi.w_exprs.at(kAliases.at(def.name)));
    } else {
      const auto& [field, operand] = def.definitions.front();
      aux.emplace(def.name, odd.at(field)(parse(operand)));
    }
  }

  const auto printed = reference::field_values(g);
  std::vector<Derivation> even;
  even.push_back(build_euler(x_ring));
  for (int k = 2; k <= 4 * g - 2; k += 2) {
    const std::string name = field_name(k);
    if (g == 3) {
      const auto row = L1_row(g, name);
      if (!row) throw LadderError("no bracket [L1," + name + "] to complete " + name);
      even.push_back(ladder_field(*this, odd, name, seeds_of(from_printed(name, *this, printed), g), *row));
    } else {
      even.push_back(from_printed(name, *this, printed));
    }
  }
  if (g == 2) {
    auto P = [&](std::string_view t) { return parse(t); };
    even[2] += P("alpha*x3") * odd.at("L1");  // L4
    even[3] += P("beta*x3") * odd.at("L3") + P("gamma1*y5 + gamma2*x2*x3") * odd.at("L1");
  }
  for (const auto& d : odd.fields()) even.push_back(d);
  std::stable_sort(even.begin(), even.end(), [](const Derivation& a, const Derivation& b) { return a.weight() < b.weight(); });
  for (auto& d : even) fields.add(std::move(d));
}

Poly GenusModel::lambda(int s) const {
  const std::string name = CurveModel::lambda_name(s);
  return p.has(name) ? p.component(name) : Poly(x_ring);
}

SymbolResolver GenusModel::resolver() const {
  return [this](std::string_view name) -> std::optional<Poly> {
    if (auto it = aux.find(std::string(name)); it != aux.end()) return it->second;
    if (name.size() > 1 && name[0] == 'l') {
      int s = 0;
      const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), s);
      if (ec == std::errc{} && ptr == name.data() + name.size()) return lambda(s);
    }
    return std::nullopt;
  };
}

Poly GenusModel::parse(std::string_view text) const { return parse_poly(x_ring, text, resolver()); }

GenusModelPtr build_genus_model(int genus) { return std::make_shared<const GenusModel>(genus); }

Derivation build_euler(const RingPtr& x_ring) {
  Derivation d("L0", 0, x_ring);
  for (std::size_t v = 0; v < x_ring->size(); ++v) {
    const int w = x_ring->var(v).weight;
    if (w != 0) d.set(v, Rational(w) * Poly::variable(x_ring, v));
  }
  return d;
}

Derivation build_L1(int genus, const RingPtr& x_ring) {
  Derivation d("L1", 1, x_ring);
  const Poly x2 = coordinate(x_ring, genus, 1, 1);
  const Poly x3 = coordinate(x_ring, genus, 2, 1);
  for (int j = 1; j <= 2 * genus - 1; j += 2) {
    d.set(x_name(1, j), coordinate(x_ring, genus, 2, j));
    d.set(x_name(2, j), coordinate(x_ring, genus, 3, j));
    d.set(x_name(3, j), Rational(4) * (Rational(2) * x2 * coordinate(x_ring, genus, 2, j) +
                                       x3 * coordinate(x_ring, genus, 1, j) + coordinate(x_ring, genus, 2, j + 2)));
  }
  return d;
}

Derivation build_odd(int genus, int s, const Derivation& L1, const std::map<std::string, Poly>& w_exprs) {
  if (s < 3 || s > 2 * genus - 1 || s % 2 == 0) throw std::out_of_range("odd field index out of range");
  const RingPtr& ring = L1.ring();
  Derivation d(field_name(s), s, ring);
  d.set("x2", coordinate(ring, genus, 2, s));
  d.set("x3", coordinate(ring, genus, 3, s));
  d.set("x4", L1(coordinate(ring, genus, 3, s)));
  for (int j = 3; j <= 2 * genus - 1; j += 2) {
    auto it = w_exprs.find(w_name(s, j));
    const Poly a = it == w_exprs.end() ? Poly(ring) : L1(it->second);
    const Poly b = L1(a);
    d.set(x_name(1, j), a);
    d.set(x_name(2, j), b);
    d.set(x_name(3, j), L1(b));
  }
  return d;
}

std::vector<LadderChain> ladder_chains(int genus) {
  std::vector<LadderChain> chains;
  for (int j = 1; j <= 2 * genus - 1; j += 2) chains.push_back({x_name(1, j), x_name(2, j), x_name(3, j)});
  return chains;
}

Expansion parse_expansion(const GenusModel& model, const std::vector<reference::TableTerm>& terms,
                          const SymbolResolver& resolve) {
  Expansion out;
  for (const auto& t : terms) out.push_back({parse_poly(model.x_ring, t.coeff, resolve), t.field});
  return out;
}

std::vector<BracketRelation> parse_table(const GenusModel& model, const std::vector<reference::TableRow>& rows,
                                         const SymbolResolver& resolve) {
  std::vector<BracketRelation> out;
  for (const auto& r : rows) out.push_back({r.left, r.right, parse_expansion(model, r.terms, resolve)});
  return out;
}

GenusModelPtr specialize(const GenusModel& model, const std::map<std::string, Rational>& values) {
  auto out = std::make_shared<GenusModel>(model);
  Substitution s(model.x_ring, model.x_ring, Substitution::Unassigned::kPassThroughByName);
  for (const auto& [name, v] : values) s.assign(name, Poly::constant(model.x_ring, v));
  FieldSet fields(model.x_ring);
  for (const auto& f : model.fields.fields()) {
    fields.add(map_coefficients(f, [&](const Poly& q) { return substitute(q, s); }));
  }
  out->fields = std::move(fields);
  return out;
}

PolyMatrix build_calT(const GenusModel& model) {
  const std::size_t n = 3 * static_cast<std::size_t>(model.genus);
  PolyMatrix m(model.x_ring, n, n);
  const auto& all = model.fields.fields();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, all.at(r).action(c));
  }
  return m;
}

std::map<std::string, Rational> solve_genus2_normalization(const GenusModel& model) {
  if (model.params.empty()) throw std::invalid_argument("model has no parameters");
  const RingPtr& ring = model.x_ring;
  std::vector<std::size_t> pidx;
  for (const auto& name : model.params) pidx.push_back(ring->index_of(name));
  const std::size_t np = pidx.size();

  // Each residual coefficient of an x-monomial is affine in the parameters:
  // row = (a_1, ..., a_np, b) meaning sum a_i p_i + b = 0.
  std::map<std::pair<std::size_t, Monomial>, std::vector<Rational>> rows;
  const auto rels = parse_table(model, reference::genus2_normalization(), model.resolver());
  std::size_t component = 0;
  for (const auto& rel : rels) {
    const Derivation r = bracket_residual(model.fields, rel);
    for (std::size_t v = 0; v < ring->size(); ++v, ++component) {
      for (const auto& t : r.action(v).terms()) {
        Monomial xm = t.monomial;
        std::size_t slot = np;
        for (std::size_t i = 0; i < np; ++i) {
          const unsigned e = xm.exponent(pidx[i]);
          if (e == 0) continue;
          if (e > 1 || slot != np) throw std::domain_error("normalization conditions are not linear in the parameters");
          slot = i;
          xm.set_exponent(pidx[i], 0);
        }
        auto& row = rows.try_emplace({component, xm}, np + 1, Rational(0)).first->second;
        row[slot] += t.coeff;
      }
    }
  }

  std::vector<std::vector<Rational>> a;
  for (auto& [key, row] : rows) a.push_back(std::move(row));
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < np && rank < a.size(); ++c) {
    auto it = std::find_if(a.begin() + static_cast<std::ptrdiff_t>(rank), a.end(), [c](const auto& r) { return r[c] != 0; });
    if (it == a.end()) continue;
    std::iter_swap(a.begin() + static_cast<std::ptrdiff_t>(rank), it);
    auto& pr = a[rank];
    const Rational inv = 1 / pr[c];
    for (auto& e : pr) e *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k <= np; ++k) a[r][k] -= f * pr[k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < a.size(); ++r) {
    if (a[r][np] != 0) throw std::domain_error("normalization conditions have no solution");
  }
  if (rank < np) throw std::domain_error("normalization conditions leave parameters free");
  std::map<std::string, Rational> out;
  for (std::size_t r = 0; r < rank; ++r) out[model.params[pivot_col[r]]] = -a[r][np];
  return out;
}

namespace {

std::string pair_id(const std::string& a, const std::string& b) { return a + "_" + b; }

}  // namespace

std::string row_text(const reference::TableRow& row) {
  std::string s = "[" + row.left + "," + row.right + "] =";
  if (row.terms.empty()) return s + " 0";
  for (std::size_t i = 0; i < row.terms.size(); ++i) {
    s += (i ? " + (" : " (") + row.terms[i].coeff + ") " + row.terms[i].field;
  }
  return s.size() > 200 ? s.substr(0, 197) + "..." : s;
}

std::vector<Check> field_checks(const GenusModelPtr& model) {
  const int g = model->genus;
  const std::string pre = "g" + std::to_string(g) + ".";
  const GenusModelPtr zero = model->params.empty() ? model : specialize(*model, [&] {
    std::map<std::string, Rational> z;
    for (const auto& name : model->params) z[name] = 0;
    return z;
  }());
  std::vector<Check> checks;

  // Printed field values against the constructed fields (parameters zeroed).
  const auto printed = reference::field_values(g);
  for (const auto& f : zero->fields.fields()) {
    if (!has_printed(f.name(), printed)) continue;
    checks.push_back({pre + "fields.values_" + f.name(), f.name() + " components as displayed", [zero, name = f.name()](ZeroTest& zt) {
                        std::vector<std::pair<std::string, Poly>> res;
                        const Derivation& d = zero->fields.at(name);
                        for (const auto& r : reference::field_values(zero->genus)) {
                          if (r.field == name) res.emplace_back(name + "(" + r.var + ")", d.action(r.var) - zero->parse(r.expr));
                        }
                        return expect_zero(zt, res);
                      }});
  }

  for (int s = 3; s <= 2 * g - 1; s += 2) {
    const std::string name = field_name(s);
    checks.push_back({pre + "fields.odd_ladder_" + name, "[L1, " + name + "] = 0 determines " + name, [model, name](ZeroTest& zt) {
                        const Derivation& d = model->fields.at(name);
                        const Derivation zero_rhs("0", d.weight() + 1, model->x_ring);
                        const Derivation ladder = ladder_complete(name, d.weight(), seeds_of(d, model->genus),
                                                                  model->fields.at("L1"), zero_rhs, ladder_chains(model->genus));
                        return expect_zero(zt, ladder - d);
                      }});
  }

  for (const auto& f : zero->fields.fields()) {
    if (f.weight() % 2 != 0) continue;
    const auto row = L1_row(g, f.name());
    if (!row) continue;
    checks.push_back({pre + "fields.ladder_" + f.name(), "seeds and " + row_text(*row), [zero, name = f.name(), row = *row](ZeroTest& zt) {
                        const Derivation& d = zero->fields.at(name);
                        const Derivation ladder = ladder_field(*zero, zero->fields, name, seeds_of(d, zero->genus), row);
                        return expect_zero(zt, ladder - d);
                      }});
  }

  for (const auto& def : reference::aux(g)) {
    checks.push_back({pre + "fields.aux_" + def.name, def.name + " = " + (def.printed.empty() ? "w coordinate" : def.printed),
                      [model, def](ZeroTest& zt) {
                        const Poly& value = model->aux.at(def.name);
                        std::vector<std::pair<std::string, Poly>> res;
                        for (const auto& [field, operand] : def.definitions) {
                          res.emplace_back(field + "(" + operand + ")", model->fields.at(field)(model->parse(operand)) - value);
                        }
                        if (!def.printed.empty()) res.emplace_back("displayed", value - model->parse(def.printed));
                        const int w = field_weight(def.name);
                        if (!is_homogeneous_of(value, w)) return Outcome::fail(witness_text(value), "weight is not " + std::to_string(w));
                        return expect_zero(zt, res);
                      }});
  }

  const Rational factor = reference::detTcal_factor(g);
  checks.push_back({pre + "fields.detTcal_factor", "det calT = " + factor.get_str() + " det T o p", [zero, factor](ZeroTest& zt) {
                      const PolyMatrix calT = build_calT(*zero);
                      const PolyMatrix T = build_T(zero->curve);
                      if (zt.mode() == Mode::kPit) {
                        const auto& lring = zero->curve.ring();
                        for (std::uint32_t i = 0; i < zt.config().sample_count; ++i) {
                          const auto pt = zt.sample(zero->x_ring->size(), 12 * static_cast<unsigned>(zero->genus));
                          std::vector<Rational> lpt(lring->size(), Rational(0));
                          for (const auto& name : zero->curve.lambda_names()) {
                            lpt[lring->index_of(name)] = evaluate(zero->p.component(name), pt);
                          }
                          const Rational lhs = numeric_det(calT, pt);
                          const Rational rhs = factor * numeric_det(T, lpt);
                          if (lhs != rhs) return Outcome::fail("sample value " + Rational(lhs - rhs).get_str(), "nonzero sample");
                        }
                        return Outcome::ok(std::to_string(zt.config().sample_count) + " samples agree");
                      }
                      const Poly lhs = determinant_by_minors(calT);
                      const Poly rhs = factor * zero->p.pullback(determinant(T));
                      Outcome o = expect_equal(zt, "det calT", lhs, rhs);
                      if (o.pass) o.detail = std::to_string(lhs.size()) + " terms";
                      return o;
                    }});

  // Projectability.
  for (const auto& f : model->fields.fields()) {
    const std::string name = f.name();
    if (f.weight() % 2 == 0) {
      checks.push_back({pre + "proj." + name, name + "(p*f) = p*(" + name + " f)", [model, name](ZeroTest& zt) {
                          return verify_pushforward(zt, model->fields.at(name), model->p, model->lambda_fields.at(name));
                        }});
    } else {
      checks.push_back({pre + "proj." + name, name + "(p*f) = 0", [model, name](ZeroTest& zt) {
                          std::vector<std::pair<std::string, Poly>> res;
                          for (const auto& s : model->p.domain()) res.emplace_back(s, model->fields.at(name)(model->p.component(s)));
                          return expect_zero(zt, res);
                        }});
    }
  }
  if (g == 3) {
    for (const auto& [a, b] : M_row_pairs()) {
      checks.push_back({pre + "proj.bracket_" + pair_id(a, b), "[" + a + "," + b + "] projects to the lambda bracket",
                        [model, a, b](ZeroTest& zt) {
                          return verify_pushforward(zt, bracket(model->fields.at(a), model->fields.at(b)), model->p,
                                                    bracket(model->lambda_fields.at(a), model->lambda_fields.at(b)));
                        }});
    }
  }

  // Printed commutator table.
  const auto table = reference::bracket_table(g);
  for (const auto& row : table) {
    checks.push_back({pre + "brackets." + pair_id(row.left, row.right), row_text(row), [model, row](ZeroTest& zt) {
                        const auto rel = parse_table(*model, {row}, model->resolver()).front();
                        return verify_bracket_relation(zt, model->fields, rel);
                      }});
  }

  // Structural properties.
  checks.push_back({pre + "props.homogeneity", "every field is homogeneous of its weight", [model](ZeroTest&) {
                      for (const auto& f : model->fields.fields()) {
                        const auto bad = homogeneity_defects(f);
                        if (!bad.empty()) return Outcome::fail(witness_text(f.action(bad.front())), f.name() + " on " + bad.front());
                      }
                      return Outcome::ok(std::to_string(model->fields.fields().size()) + " fields");
                    }});
  checks.push_back({pre + "props.grading", "[L0, L_k] = k L_k", [model](ZeroTest& zt) {
                      const Derivation& L0 = model->fields.at("L0");
                      for (const auto& f : model->fields.fields()) {
                        Outcome o = expect_zero(zt, bracket(L0, f) - Poly::constant(model->x_ring, f.weight()) * f);
                        if (!o.pass) {
                          o.detail = "[L0," + f.name() + "]: " + o.detail;
                          return o;
                        }
                      }
                      return Outcome::ok();
                    }});
  checks.push_back({pre + "props.jacobi", "Jacobi identity on all triples", [model](ZeroTest& zt) {
                      const auto& all = model->fields.fields();
                      const std::size_t n = all.size();
                      std::map<std::pair<std::size_t, std::size_t>, Derivation> br;
                      for (std::size_t a = 0; a < n; ++a) {
                        for (std::size_t b = a + 1; b < n; ++b) br.emplace(std::pair{a, b}, bracket(all[a], all[b]));
                      }
                      std::size_t triples = 0;
                      for (std::size_t a = 0; a < n; ++a) {
                        for (std::size_t b = a + 1; b < n; ++b) {
                          for (std::size_t c = b + 1; c < n; ++c, ++triples) {
                            // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] with [c,a] = -[a,c]
                            const Derivation j = bracket(all[a], br.at({b, c})) - bracket(all[b], br.at({a, c})) +
                                                 bracket(all[c], br.at({a, b}));
                            Outcome o = expect_zero(zt, j);
                            if (!o.pass) {
                              o.detail = all[a].name() + "," + all[b].name() + "," + all[c].name() + ": " + o.detail;
                              return o;
                            }
                          }
                        }
                      }
                      return Outcome::ok(std::to_string(triples) + " triples");
                    }});

  if (g == 2) {
    checks.push_back({pre + "normalize.solve", "lower-triangular [L1, L_k] fixes the parameters", [model](ZeroTest&) {
                        const auto sol = solve_genus2_normalization(*model);
                        std::string text;
                        bool all_zero = true;
                        for (const auto& [name, v] : sol) {
                          text += (text.empty() ? "" : ", ") + name + "=" + v.get_str();
                          all_zero = all_zero && v == 0;
                        }
                        return all_zero ? Outcome::ok(text) : Outcome::fail(text, "expected all parameters zero");
                      }});
  }
  return checks;
}

}  // namespace hyperlie
