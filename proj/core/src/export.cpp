#include "hyperlie/export.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

#include "hyperlie/genus_fields.hpp"
#include "hyperlie/poly_io.hpp"

namespace hyperlie {

ExportWhat parse_export_what(std::string_view text) {
  if (text == "fields") return ExportWhat::kFields;
  if (text == "map") return ExportWhat::kMap;
  if (text == "brackets") return ExportWhat::kBrackets;
  if (text == "matrices") return ExportWhat::kMatrices;
  throw std::invalid_argument("unknown export selector '" + std::string(text) + "'");
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "json") return ExportFormat::kJson;
  if (text == "latex") return ExportFormat::kLatex;
  throw std::invalid_argument("unknown export format '" + std::string(text) + "'");
}

namespace {

std::string field_tex(std::string_view name) { return "\\mathcal{L}_{" + std::string(name.substr(1)) + "}"; }

nlohmann::json matrix_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_text(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void matrix_tex(std::ostream& out, const std::string& label, const PolyMatrix& m) {
  out << label << " = \\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " & " : "  ") << to_latex(m(r, c));
    out << (r + 1 < m.rows() ? " \\\\\n" : "\n");
  }
  out << "\\end{pmatrix}\n\n";
}

// Sum c_i F_i with each coefficient parenthesized unless it is a monomial.
std::string expansion_tex(const Expansion& e) {
  std::string out;
  for (const auto& t : e) {
    if (t.coeff.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = to_latex(t.coeff);
    if (c != "1") out += t.coeff.size() > 1 ? "(" + c + ")\\," : c + "\\,";
    out += field_tex(t.field);
  }
  return out.empty() ? "0" : out;
}

std::string export_fields(const GenusModel& m, ExportFormat format) {
  if (format == ExportFormat::kJson) {
    nlohmann::json fields = nlohmann::json::array();
    for (const auto& f : m.fields.fields()) fields.push_back(to_json(f));
    nlohmann::json aux = nlohmann::json::object();
    for (const auto& [name, p] : m.aux) aux[name] = to_text(p);
    return nlohmann::json{{"genus", m.genus}, {"fields", fields}, {"aux", aux}}.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& f : m.fields.fields()) {
    out << "\\begin{align*}\n" << field_tex(f.name()) << " &= ";
    bool first = true;
    for (std::size_t v = 0; v < m.x_ring->size(); ++v) {
      if (f.action(v).is_zero()) continue;
      out << (first ? "" : " \\\\\n  &\\quad + ") << "(" << to_latex(f.action(v)) << ")\\frac{\\partial}{\\partial "
          << latex_symbol(m.x_ring->var(v).name) << "}";
      first = false;
    }
    if (first) out << "0";
    out << "\n\\end{align*}\n";
  }
  for (const auto& [name, p] : m.aux) out << "$" << latex_symbol(name) << " = " << to_latex(p) << "$\n\n";
  return out.str();
}

std::string export_map(const GenusModel& m, ExportFormat format) {
  const auto& jm = m.jacobi;
  if (format == ExportFormat::kJson) {
    nlohmann::json lambda = nlohmann::json::object();
    for (const auto& name : m.curve.lambda_names()) lambda[name] = to_text(jm.lambda_exprs.at(name));
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [name, p] : jm.w_exprs) w[name] = to_text(p);
    return nlohmann::json{{"genus", m.genus}, {"lambda", lambda}, {"w", w}, {"solve_order", jm.solve_order}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "\\begin{align*}\n";
  const auto names = m.curve.lambda_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "  " << latex_symbol(names[i]) << " &= " << to_latex(jm.lambda_exprs.at(names[i]));
    out << (i + 1 < names.size() || !jm.w_exprs.empty() ? " \\\\\n" : "\n");
  }
  std::size_t k = 0;
  for (const auto& [name, p] : jm.w_exprs) {
    out << "  " << latex_symbol(name) << " &= " << to_latex(p) << (++k < jm.w_exprs.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  return out.str();
}

std::string export_brackets(const GenusModel& m, ExportFormat format) {
  const auto rows = parse_table(m, reference::bracket_table(m.genus), m.resolver());
  if (format == ExportFormat::kJson) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : r.expansion) terms.push_back({{"field", t.field}, {"coeff", to_text(t.coeff)}});
      table.push_back({{"left", r.left}, {"right", r.right}, {"terms", terms}});
    }
    return nlohmann::json{{"genus", m.genus}, {"brackets", table}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "\\begin{align*}\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "  [" << field_tex(rows[i].left) << ", " << field_tex(rows[i].right) << "] &= " << expansion_tex(rows[i].expansion)
        << (i + 1 < rows.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{align*}\n";
  return out.str();
}

std::string export_matrices(const GenusModel& m, ExportFormat format) {
  const PolyMatrix T = build_T(m.curve);
  const PolyMatrix calT = build_calT(m);
  if (format == ExportFormat::kJson) {
    nlohmann::json doc = {{"genus", m.genus}, {"T", matrix_json(T)}, {"calT", matrix_json(calT)}};
    if (m.genus == 3) doc["M"] = matrix_json(build_M(m.curve));
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  matrix_tex(out, "T", T);
  matrix_tex(out, "\\mathcal{T}", calT);
  if (m.genus == 3) matrix_tex(out, "\\mathcal{M}", build_M(m.curve));
  return out.str();
}

}  // namespace

std::string export_document(ExportWhat what, int genus, ExportFormat format) {
  if (genus < 1 || genus > 3) throw std::invalid_argument("genus must be 1, 2 or 3");
  const GenusModelPtr model = build_genus_model(genus);
  switch (what) {
    case ExportWhat::kFields:
      return export_fields(*model, format);
    case ExportWhat::kMap:
      return export_map(*model, format);
    case ExportWhat::kBrackets:
      return export_brackets(*model, format);
    case ExportWhat::kMatrices:
      return export_matrices(*model, format);
  }
  throw std::invalid_argument("unknown export selector");
}

}  // namespace hyperlie
