#include "hyperlie/lambda_space.hpp"

#include <memory>
#include <stdexcept>

#include "hyperlie/poly_io.hpp"
#include "hyperlie/reference_data.hpp"

namespace hyperlie {

namespace {

RingPtr make_lambda_ring(int genus) {
  std::vector<GradedVar> vars;
  for (int s = 4; s <= 4 * genus + 2; s += 2) vars.push_back({CurveModel::lambda_name(s), s});
  vars.push_back({"X", 2});
  return make_ring(std::move(vars));
}

std::string prefix(const CurveModel& model) { return "g" + std::to_string(model.genus()) + ".lambda."; }

Rational numeric_det(const PolyMatrix& m, std::span<const Rational> point) {
  std::vector<Rational> values;
  values.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) values.push_back(evaluate(m(r, c), point));
  }
  return determinant(std::move(values), m.rows());
}

PolyMatrix parse_matrix(const RingPtr& ring, const std::vector<std::vector<std::string>>& grid) {
  PolyMatrix out(ring, grid.size(), grid.empty() ? 0 : grid.front().size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) out.set(r, c, parse_poly(ring, grid[r][c]));
  }
  return out;
}

}  // namespace

CurveModel::CurveModel(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  ring_ = make_lambda_ring(genus);
}

Poly CurveModel::lambda(int s) const {
  if (s < 4 || s > 4 * genus_ + 2 || s % 2 != 0) return Poly(ring_);
  return Poly::variable(ring_, lambda_name(s));
}

std::vector<std::string> CurveModel::lambda_names() const {
  std::vector<std::string> out;
  for (int s = 4; s <= 4 * genus_ + 2; s += 2) out.push_back(lambda_name(s));
  return out;
}

Poly build_f(const CurveModel& model) {
  const int n = 2 * model.genus() + 1;
  const Poly X = Poly::variable(model.ring(), model.x_index());
  Poly f = pow(X, static_cast<unsigned>(n));
  // l_s multiplies X^{n - s/2}
  for (int s = 4; s <= 4 * model.genus() + 2; s += 2) f += model.lambda(s) * pow(X, static_cast<unsigned>(n - s / 2));
  return f;
}

Poly discriminant_R(const CurveModel& model) {
  const Poly f = build_f(model);
  return resultant(f, partial(f, model.x_index()), model.x_index());
}

int discriminant_weight(int genus) { return 4 * genus * (2 * genus + 1); }

Poly T_entry(const CurveModel& model, int k, int m) {
  const int g = model.genus();
  if (k < 1 || m < 1 || k > 2 * g || m > 2 * g) throw std::out_of_range("T index out of range");
  if (k > m) std::swap(k, m);
  Poly t = Rational(2 * (k + m)) * model.lambda(2 * k + 2 * m);
  for (int s = 2; s <= k - 1; ++s) {
    t += Rational(2 * (k + m - 2 * s)) * (model.lambda(2 * s) * model.lambda(2 * k + 2 * m - 2 * s));
  }
  t -= Rational(2 * k * (2 * g - m + 1), 2 * g + 1) * (model.lambda(2 * k) * model.lambda(2 * m));
  return t;
}

PolyMatrix build_T(const CurveModel& model) {
  const std::size_t n = 2 * static_cast<std::size_t>(model.genus());
  PolyMatrix t(model.ring(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) t.set(k, m, T_entry(model, static_cast<int>(k + 1), static_cast<int>(m + 1)));
  }
  return t;
}

Derivation build_L(const CurveModel& model, int k) {
  if (k < 0 || k % 2 != 0 || k > 4 * model.genus() - 2) throw std::out_of_range("L index out of range");
  Derivation d("L" + std::to_string(k), k, model.ring());
  for (int s = 2; s <= 2 * model.genus() + 1; ++s) d.set(CurveModel::lambda_name(2 * s), T_entry(model, k / 2 + 1, s - 1));
  return d;
}

FieldSet build_L_fields(const CurveModel& model) {
  FieldSet fields(model.ring());
  for (int k = 0; k <= 4 * model.genus() - 2; k += 2) fields.add(build_L(model, k));
  return fields;
}

std::vector<Poly> tangency_multipliers(const CurveModel& model, const Poly& det_T) {
  std::vector<Poly> out;
  const FieldSet fields = build_L_fields(model);
  for (const auto& L : fields.fields()) {
    auto q = try_divide(L(det_T), det_T);
    if (!q) throw std::domain_error(L.name() + "(det T) is not a multiple of det T");
    out.push_back(std::move(*q));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> M_row_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 2; i <= 10; i += 2) {
    for (int j = i + 2; j <= 10; j += 2) out.emplace_back("L" + std::to_string(i), "L" + std::to_string(j));
  }
  return out;
}

PolyMatrix build_M(const CurveModel& model) {
  if (model.genus() != 3) throw std::invalid_argument("M is defined for genus 3 only");
  return parse_matrix(model.ring(), reference::M_matrix());
}

std::vector<BracketRelation> M_relations(const PolyMatrix& M) {
  const auto pairs = M_row_pairs();
  if (M.rows() != pairs.size() || M.cols() != 6) throw std::invalid_argument("M must be 10 x 6");
  std::vector<BracketRelation> out;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    BracketRelation rel{pairs[r].first, pairs[r].second, {}};
    for (std::size_t c = 0; c < M.cols(); ++c) rel.expansion.push_back({M(r, c), "L" + std::to_string(2 * c)});
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<Check> lambda_checks(const CurveModel& model_in) {
  auto model = std::make_shared<const CurveModel>(model_in);
  auto fields = std::make_shared<const FieldSet>(build_L_fields(*model));
  auto T = std::make_shared<const PolyMatrix>(build_T(*model));
  const int g = model->genus();
  const std::string pre = prefix(*model);
  std::vector<Check> checks;

  checks.push_back({pre + "f_shape", "f = X^(2g+1) + l4 X^(2g-1) + ...", [model](ZeroTest&) {
                      const Poly f = build_f(*model);
                      const auto coeffs = coefficients_in(f, model->x_index());
                      const std::size_t n = 2 * static_cast<std::size_t>(model->genus()) + 1;
                      if (coeffs.size() != n + 1) return Outcome::fail(to_text(f), "wrong degree in X");
                      if (!(coeffs[n] == Poly::constant(model->ring(), 1))) return Outcome::fail(to_text(f), "not monic");
                      if (!coeffs[n - 1].is_zero()) return Outcome::fail(to_text(coeffs[n - 1]), "X^(2g) term present");
                      return Outcome::ok("degree " + std::to_string(n));
                    }});

  checks.push_back({pre + "euler", "L0(l_k) = k l_k", [model, fields](ZeroTest& zt) {
                      std::vector<std::pair<std::string, Poly>> res;
                      const auto& L0 = fields->at("L0");
                      for (int s = 4; s <= 4 * model->genus() + 2; s += 2) {
                        const Poly l = model->lambda(s);
                        res.emplace_back(CurveModel::lambda_name(s), L0(l) - Rational(s) * l);
                      }
                      return expect_zero(zt, res);
                    }});

  checks.push_back({pre + "grading", "[L0, L_k] = k L_k", [fields](ZeroTest& zt) {
                      const auto& L0 = fields->at("L0");
                      for (const auto& L : fields->fields()) {
                        Outcome o = expect_zero(zt, bracket(L0, L) - Poly::constant(L.ring(), L.weight()) * L);
                        if (!o.pass) {
                          o.detail = "[L0," + L.name() + "] " + o.detail;
                          return o;
                        }
                      }
                      return Outcome::ok(std::to_string(fields->fields().size()) + " fields");
                    }});

  checks.push_back({pre + "T_symmetric", "T_{2k,2m} = T_{2m,2k}, weight 2k+2m", [T](ZeroTest&) {
                      if (!T->is_symmetric()) return Outcome::fail("T", "T is not symmetric");
                      for (std::size_t k = 0; k < T->rows(); ++k) {
                        for (std::size_t m = 0; m < T->cols(); ++m) {
                          if (!is_homogeneous_of((*T)(k, m), 2 * static_cast<int>(k + m + 2))) {
                            return Outcome::fail(to_text((*T)(k, m)), "entry (" + std::to_string(k + 1) + "," +
                                                                        std::to_string(m + 1) + ") has the wrong weight");
                          }
                        }
                      }
                      return Outcome::ok();
                    }});

  checks.push_back({pre + "field_symmetry", "L_{2k}(l_{2s+4}) = L_{2s}(l_{2k+4})", [model, fields, T](ZeroTest& zt) {
                      const auto& all = fields->fields();
                      std::vector<std::pair<std::string, Poly>> res;
                      for (std::size_t a = 0; a < all.size(); ++a) {
                        for (std::size_t b = 0; b < all.size(); ++b) {
                          const Poly lhs = all[a](model->lambda(2 * static_cast<int>(b) + 4));
                          const Poly rhs = all[b](model->lambda(2 * static_cast<int>(a) + 4));
                          res.emplace_back(all[a].name() + "/" + all[b].name(), lhs - rhs);
                        }
                      }
                      Outcome o = expect_zero(zt, res);
                      if (o.pass != T->is_symmetric()) {
                        return Outcome::fail("symmetry of T disagrees with field symmetry", "equivalence broken");
                      }
                      return o;
                    }});

  checks.push_back({pre + "T_printed", "T matrix as displayed", [model, T](ZeroTest& zt) {
                      const PolyMatrix printed = parse_matrix(model->ring(), reference::T_matrix(model->genus()));
                      std::vector<std::pair<std::string, Poly>> res;
                      for (std::size_t r = 0; r < T->rows(); ++r) {
                        for (std::size_t c = 0; c < T->cols(); ++c) {
                          res.emplace_back("T(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")",
                                           (*T)(r, c) - printed(r, c));
                        }
                      }
                      return expect_zero(zt, res);
                    }});

  checks.push_back({pre + "R_weight", "R homogeneous of weight 4g(2g+1)", [model](ZeroTest&) {
                      const Poly R = discriminant_R(*model);
                      const WeightCheck w = weight_check(R);
                      const int expected = discriminant_weight(model->genus());
                      if (!w.homogeneous || w.weight != expected) {
                        return Outcome::fail(witness_text(R, 400), "expected weight " + std::to_string(expected));
                      }
                      return Outcome::ok("weight " + std::to_string(expected) + ", " + std::to_string(R.size()) + " terms");
                    }});

  if (auto printed = reference::discriminant(g)) {
    checks.push_back({pre + "R_printed", "R = " + *printed, [model, text = *printed](ZeroTest& zt) {
                        return expect_equal(zt, "R", discriminant_R(*model), parse_poly(model->ring(), text));
                      }});
  }

  if (g <= 2) {
    checks.push_back({pre + "R_cofactor_oracle", "Sylvester determinant by two methods", [model](ZeroTest& zt) {
                        const Poly f = build_f(*model);
                        const PolyMatrix S = sylvester_matrix(f, partial(f, model->x_index()), model->x_index());
                        return expect_equal(zt, "R", determinant(S), determinant_by_minors(S));
                      }});
  }

  const auto expected_c = reference::detT_over_R(g);
  checks.push_back(
      {pre + "detT_eq_c_R", expected_c ? "det T = " + expected_c->get_str() + " R" : "det T = c R", [model, T, expected_c](ZeroTest& zt) {
         if (zt.mode() == Mode::kPit) {
           const Poly f = build_f(*model);
           const PolyMatrix S = sylvester_matrix(f, partial(f, model->x_index()), model->x_index());
           std::optional<Rational> c = expected_c;
           const unsigned degree = static_cast<unsigned>(discriminant_weight(model->genus()) / 4);
           for (std::uint32_t i = 0; i < zt.config().sample_count; ++i) {
             const auto pt = zt.sample(model->ring()->size(), degree);
             const Rational dt = numeric_det(*T, pt);
             const Rational r = numeric_det(S, pt);
             if (!c) {
               if (r == 0) continue;
               c = dt / r;
               continue;
             }
             if (dt != *c * r) return Outcome::fail("det T - c R = " + Rational(dt - *c * r).get_str(), "nonzero sample");
           }
           return Outcome::ok(c ? "c = " + c->get_str() : "no usable sample");
         }
         const Poly detT = determinant(*T);
         const Poly R = discriminant_R(*model);
         auto q = try_divide(detT, R);
         if (!q) return Outcome::fail(witness_text(detT, 600), "det T is not a multiple of R");
         const auto c = q->constant_value();
         if (!c || *c == 0) return Outcome::fail(to_text(*q), "quotient det T / R is not a nonzero constant");
         if (expected_c && *c != *expected_c) {
           return Outcome::fail(to_text(*q), "expected c = " + expected_c->get_str());
         }
         return Outcome::ok("c = " + c->get_str());
       }});

  checks.push_back({pre + "tangency", "L_k(det T) = m_k det T", [model, fields, T](ZeroTest& zt) {
                      const Poly detT = determinant(*T);
                      const auto printed = reference::tangency_multipliers(model->genus());
                      std::vector<Poly> m;
                      if (!printed.empty()) {
                        for (const auto& s : printed) m.push_back(parse_poly(model->ring(), s));
                      } else {
                        try {
                          m = tangency_multipliers(*model, detT);
                        } catch (const std::domain_error& e) {
                          return Outcome::fail(e.what(), "not tangent");
                        }
                      }
                      std::vector<std::pair<std::string, Poly>> res;
                      std::string listing;
                      for (std::size_t i = 0; i < m.size(); ++i) {
                        const auto& L = fields->fields()[i];
                        res.emplace_back(L.name(), L(detT) - m[i] * detT);
                        listing += (i ? ", " : "") + to_text(m[i]);
                      }
                      Outcome o = expect_zero(zt, res);
                      if (o.pass) o.detail = "(" + listing + ")";
                      return o;
                    }});

  if (g == 3) {
    auto M = std::make_shared<const PolyMatrix>(build_M(*model));
    for (const auto& rel : M_relations(*M)) {
      checks.push_back({pre + "M_" + rel.left + "_" + rel.right, "[" + rel.left + "," + rel.right + "] = M row",
                        [fields, rel](ZeroTest& zt) { return verify_bracket_relation(zt, *fields, rel); }});
    }
  }
  return checks;
}

}  // namespace hyperlie
