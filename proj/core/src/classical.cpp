#include "hyperlie/classical.hpp"

#include <algorithm>
#include <charconv>

#include "hyperlie/reference_data.hpp"

namespace hyperlie {

std::optional<ClassicalSymbol> parse_classical(std::string_view name) {
  constexpr std::string_view prefix = "wp_";
  if (!name.starts_with(prefix)) return std::nullopt;
  name.remove_prefix(prefix.size());
  std::vector<int> idx;
  while (true) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
    if (ec != std::errc{} || v < 0) return std::nullopt;
    idx.push_back(v);
    name.remove_prefix(static_cast<std::size_t>(ptr - name.data()));
    if (name.empty()) break;
    if (name.front() != '_') return std::nullopt;
    name.remove_prefix(1);
  }
  return ClassicalSymbol{idx.front(), std::vector<int>(idx.begin() + 1, idx.end())};
}

SymbolDictionary::SymbolDictionary(GenusModelPtr model) : model_(std::move(model)) {}

Poly SymbolDictionary::image(std::string_view symbol) const {
  if (auto it = cache_.find(symbol); it != cache_.end()) return it->second;
  if (symbol.starts_with("zeta")) throw UnknownSymbol(std::string(symbol) + " has no polynomial image");
  const auto parsed = parse_classical(symbol);
  if (!parsed) throw UnknownSymbol("unknown classical symbol " + std::string(symbol));
  Poly p = resolve(*parsed);
  cache_.emplace(std::string(symbol), p);
  return p;
}

Poly SymbolDictionary::resolve(const ClassicalSymbol& s) const {
  const GenusModel& m = *model_;
  const int g = m.genus;
  int depth = s.i;
  std::vector<int> ks;
  for (int k : s.ks) {
    if (k == 1) {
      ++depth;
      continue;
    }
    if (k % 2 == 0 || k < 3 || k > 2 * g - 1) throw UnknownSymbol("index " + std::to_string(k) + " out of range for genus " + std::to_string(g));
    ks.push_back(k);
  }
  const Derivation& L1 = m.fields.at("L1");
  auto var = [&](int i, int j) { return Poly::variable(m.x_ring, x_name(i, j)); };
  auto iterate = [&](Poly p, int times) {
    for (int t = 0; t < times; ++t) p = L1(p);
    return p;
  };
  switch (ks.size()) {
    case 0:
      if (depth < 2) throw UnknownSymbol("wp_" + std::to_string(depth) + " has no polynomial image");
      return depth <= 4 ? var(depth - 1, 1) : iterate(var(3, 1), depth - 4);
    case 1:
      if (depth == 0) throw UnknownSymbol("wp_0_" + std::to_string(ks[0]) + " has no polynomial image");
      return depth <= 3 ? var(depth, ks[0]) : iterate(var(3, ks[0]), depth - 3);
    case 2:
      return iterate(m.jacobi.w_exprs.at(w_name(ks[0], ks[1])), depth);
    default: {
      const int last = ks.back();
      ks.pop_back();
      return m.fields.at("L" + std::to_string(last))(resolve({depth, ks}));
    }
  }
}

SymbolResolver SymbolDictionary::resolver() const {
  return [this, inner = model_->resolver()](std::string_view name) -> std::optional<Poly> {
    if (name.starts_with("wp_") || name.starts_with("zeta")) return image(name);
    return inner(name);
  };
}

std::vector<BracketRelation> translate(const SymbolDictionary& dict, const std::vector<reference::TableRow>& table) {
  return parse_table(dict.model(), table, dict.resolver());
}

namespace {

std::map<std::string, Poly> by_field(const Expansion& e, const RingPtr& ring) {
  std::map<std::string, Poly> out;
  for (const auto& t : e) out.try_emplace(t.field, ring).first->second += t.coeff;
  return out;
}

Outcome compare_rows(ZeroTest& zt, const BracketRelation& a, const BracketRelation& b, const RingPtr& ring) {
  auto lhs = by_field(a.expansion, ring);
  auto rhs = by_field(b.expansion, ring);
  const bool swapped = a.left != b.left;
  std::vector<std::pair<std::string, Poly>> residuals;
  for (const auto& [f, _] : rhs) lhs.try_emplace(f, ring);
  for (const auto& [f, c] : lhs) {
    auto it = rhs.find(f);
    Poly other = it == rhs.end() ? Poly(ring) : it->second;
    residuals.emplace_back(f, swapped ? c + other : c - other);
  }
  return expect_zero(zt, residuals);
}

}  // namespace

std::vector<Check> classical_checks(const GenusModelPtr& model) {
  const int g = model->genus;
  const std::string pre = "g" + std::to_string(g) + ".classical.";
  std::vector<Check> checks;

  std::map<std::string, Rational> values;
  if (!model->params.empty()) {
    try {
      values = solve_genus2_normalization(*model);
    } catch (const std::exception& e) {
      checks.push_back({pre + "normalize", "normalized parameters", [what = std::string(e.what())](ZeroTest&) {
                          return Outcome::fail(what, "normalization solve failed");
                        }});
      return checks;
    }
  }
  const GenusModelPtr target = values.empty() ? model : specialize(*model, values);
  auto dict = std::make_shared<SymbolDictionary>(target);
  const auto table = reference::classical_table(g);

  for (const auto& row : table) {
    checks.push_back({pre + row.left + "_" + row.right, row_text(row), [dict, row](ZeroTest& zt) {
                        const auto rel = translate(*dict, {row}).front();
                        return verify_bracket_relation(zt, dict->model().fields, rel);
                      }});
  }

  checks.push_back({pre + "table_match", "classical rows equal the coordinate rows", [dict, table, values](ZeroTest& zt) {
                      const GenusModel& m = dict->model();
                      Substitution s(m.x_ring, m.x_ring, Substitution::Unassigned::kPassThroughByName);
                      for (const auto& [name, v] : values) s.assign(name, Poly::constant(m.x_ring, v));
                      auto coords = parse_table(m, reference::bracket_table(m.genus), m.resolver());
                      for (auto& rel : coords) {
                        for (auto& t : rel.expansion) t.coeff = substitute(t.coeff, s);
                      }
                      const auto classical = translate(*dict, table);
                      std::size_t matched = 0;
                      for (const auto& c : classical) {
                        auto it = std::find_if(coords.begin(), coords.end(), [&](const BracketRelation& r) {
                          return (r.left == c.left && r.right == c.right) || (r.left == c.right && r.right == c.left);
                        });
                        if (it == coords.end()) continue;
                        Outcome o = compare_rows(zt, c, *it, m.x_ring);
                        if (!o.pass) {
                          o.detail = "[" + c.left + "," + c.right + "] " + o.detail;
                          return o;
                        }
                        ++matched;
                      }
                      return Outcome::ok(std::to_string(matched) + " rows matched");
                    }});

  if (g == 2) {
    checks.push_back({pre + "forced_alpha_rejected", "alpha = 1 breaks [L1,L4] = (wp_1_3) L1 + (wp_2) L3",
                      [model, table](ZeroTest& zt) {
                        std::map<std::string, Rational> forced;
                        for (const auto& name : model->params) forced[name] = 0;
                        forced["alpha"] = 1;
                        const SymbolDictionary dict(specialize(*model, forced));
                        auto row = std::find_if(table.begin(), table.end(), [](const reference::TableRow& r) {
                          return r.left == "L1" && r.right == "L4";
                        });
                        if (row == table.end()) return Outcome::fail("[L1,L4] missing", "no classical row to test");
                        const auto rel = translate(dict, {*row}).front();
                        const Outcome o = verify_bracket_relation(zt, dict.model().fields, rel);
                        return o.pass ? Outcome::fail("residual vanished at alpha = 1", "control not rejected")
                                      : Outcome::ok("mismatch: " + o.detail);
                      }});
  }
  return checks;
}

}  // namespace hyperlie
