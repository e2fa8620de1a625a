#include "hyperlie/reference_data.hpp"

#include <stdexcept>

namespace hyperlie::reference {

namespace {

void require_genus(int g) {
  if (g < 1 || g > 3) throw std::out_of_range("no reference data for genus " + std::to_string(g));
}

using Grid = std::vector<std::vector<std::string>>;

// entries of a - s * b, with s given as text
Grid combine(const Grid& a, const std::string& s, const Grid& b) {
  Grid out = a;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      if (b[r][c] != "0") out[r][c] = "(" + a[r][c] + ") - " + s + "*(" + b[r][c] + ")";
    }
  }
  return out;
}

struct Pair {
  std::string left, right;
};

TableRow& row_for(std::vector<TableRow>& table, const Pair& p) {
  for (auto& r : table) {
    if (r.left == p.left && r.right == p.right) return r;
  }
  table.push_back({p.left, p.right, {}});
  return table.back();
}

// rows[i] = sum_j scale * coeffs[i][j] * basis[j]
void add_block(std::vector<TableRow>& table, const std::vector<Pair>& rows, const std::vector<std::string>& basis,
               const Grid& coeffs, const std::string& scale = "") {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    TableRow& r = row_for(table, rows[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::string& c = coeffs[i][j];
      if (c == "0") continue;
      r.terms.push_back({scale.empty() ? c : scale + "*(" + c + ")", basis[j]});
    }
  }
}

void add_grading(std::vector<TableRow>& table, const std::vector<int>& weights) {
  for (int k : weights) row_for(table, {"L0", "L" + std::to_string(k)}).terms.push_back({std::to_string(k), "L" + std::to_string(k)});
}

void add_zero(std::vector<TableRow>& table, const std::string& a, const std::string& b) { row_for(table, {a, b}); }

const std::vector<Pair> kEvenPairs = {{"L2", "L4"}, {"L2", "L6"},  {"L2", "L8"}, {"L2", "L10"}, {"L4", "L6"},
                                      {"L4", "L8"}, {"L4", "L10"}, {"L6", "L8"}, {"L6", "L10"}, {"L8", "L10"}};
const std::vector<std::string> kEvenBasis = {"L0", "L2", "L4", "L6", "L8", "L10"};
const std::vector<std::string> kOddBasis = {"L1", "L3", "L5"};

std::vector<Pair> pairs_with(const std::string& left, const std::vector<int>& rights) {
  std::vector<Pair> out;
  for (int k : rights) out.push_back({left, "L" + std::to_string(k)});
  return out;
}

// The genus-3 tables share their layout between the coordinate and the
// classical notation; only the symbols differ.
struct Genus3Symbols {
  std::string x2, y4, z6;           // first column of the [L1, .] block
  std::string w6, w8, w10;          // [L3, .] and [L5, .] blocks
  Grid half;                        // 1/2-weighted L1, L3, L5 block
};

std::vector<TableRow> genus3_table(const Genus3Symbols& s, bool with_L1_L0) {
  std::vector<TableRow> table;
  add_grading(table, {1, 2, 3, 4, 5, 6, 8, 10});
  add_zero(table, "L1", "L3");
  add_zero(table, "L1", "L5");
  add_zero(table, "L3", "L5");

  if (with_L1_L0) add_block(table, {{"L1", "L0"}}, kOddBasis, {{"-1", "0", "0"}});
  add_block(table, pairs_with("L1", {2, 4, 6, 8, 10}), kOddBasis,
            {{s.x2, "-1", "0"}, {s.y4, s.x2, "-1"}, {s.z6, s.y4, s.x2}, {"0", s.z6, s.y4}, {"0", "0", s.z6}});

  const std::string d = s.y4 + " - l4";
  add_block(table, pairs_with("L3", {2, 4, 6, 8, 10}), kOddBasis,
            {{d, "0", "-3"}, {s.w6, d, "0"}, {s.w8, s.w6, d}, {"0", s.w8, s.w6}, {"0", "0", s.w8}});
  add_block(table, pairs_with("L3", {2, 4, 6, 8, 10}), {"L1"},
            {{"5*l4"}, {"4*l6"}, {"3*l8"}, {"2*l10"}, {"l12"}}, "3/7");

  add_block(table, pairs_with("L5", {2, 4, 6, 8, 10}), kOddBasis,
            {{s.z6, "0", "0"},
             {s.w8, s.z6, "0"},
             {s.w10, s.w8, s.z6},
             {"-l12", s.w10, s.w8},
             {"-2*l14", "-l12", s.w10}});
  add_block(table, pairs_with("L5", {2, 4, 6, 8, 10}), {"L3"},
            {{"2*l4"}, {"3*l6"}, {"4*l8"}, {"5*l10"}, {"6*l12"}}, "2/7");
  add_block(table, pairs_with("L5", {2, 4, 6, 8, 10}), {"L5"}, {{"0"}, {"3*l4"}, {"2*l6"}, {"l8"}, {"0"}}, "-1");

  add_block(table, kEvenPairs, kEvenBasis, M_matrix());
  add_block(table, kEvenPairs, kOddBasis, s.half, "1/2");
  return table;
}

}  // namespace

std::optional<std::string> discriminant(int genus) {
  require_genus(genus);
  if (genus == 1) return "4*l4^3 + 27*l6^2";
  return std::nullopt;
}

std::vector<std::vector<std::string>> T_matrix(int genus) {
  require_genus(genus);
  if (genus == 1) return {{"4*l4", "6*l6"}, {"6*l6", "-4/3*l4^2"}};
  if (genus == 2) {
    const Grid a = {{"4*l4", "6*l6", "8*l8", "10*l10"},
                    {"6*l6", "8*l8", "10*l10", "0"},
                    {"8*l8", "10*l10", "4*l4*l8", "6*l4*l10"},
                    {"10*l10", "0", "6*l4*l10", "4*l6*l10"}};
    const Grid b = {{"0", "0", "0", "0"},
                    {"0", "12*l4^2", "8*l4*l6", "4*l4*l8"},
                    {"0", "8*l4*l6", "12*l6^2", "6*l6*l8"},
                    {"0", "4*l4*l8", "6*l6*l8", "8*l8^2"}};
    return combine(a, "1/5", b);
  }
  const Grid a = {
      {"4*l4", "6*l6", "8*l8", "10*l10", "12*l12", "14*l14"},
      {"6*l6", "8*l8", "10*l10", "12*l12", "14*l14", "0"},
      {"8*l8", "10*l10", "12*l12 + 4*l4*l8", "14*l14 + 6*l4*l10", "8*l4*l12", "10*l4*l14"},
      {"10*l10", "12*l12", "14*l14 + 6*l4*l10", "4*l6*l10 + 8*l4*l12", "6*l6*l12 + 10*l4*l14", "8*l6*l14"},
      {"12*l12", "14*l14", "8*l4*l12", "6*l6*l12 + 10*l4*l14", "4*l8*l12 + 8*l6*l14", "6*l8*l14"},
      {"14*l14", "0", "10*l4*l14", "8*l6*l14", "6*l8*l14", "4*l10*l14"}};
  const Grid b = {{"0", "0", "0", "0", "0", "0"},
                  {"0", "20*l4^2", "16*l4*l6", "12*l4*l8", "8*l4*l10", "4*l4*l12"},
                  {"0", "16*l4*l6", "24*l6^2", "18*l6*l8", "12*l6*l10", "6*l6*l12"},
                  {"0", "12*l4*l8", "18*l6*l8", "24*l8^2", "16*l8*l10", "8*l8*l12"},
                  {"0", "8*l4*l10", "12*l6*l10", "16*l8*l10", "20*l10^2", "10*l10*l12"},
                  {"0", "4*l4*l12", "6*l6*l12", "8*l8*l12", "10*l10*l12", "12*l12^2"}};
  return combine(a, "1/7", b);
}

std::optional<Rational> detT_over_R(int genus) {
  require_genus(genus);
  if (genus == 1) return Rational(-4, 3);
  if (genus == 3) return Rational(-64, 7);
  return std::nullopt;
}

std::vector<std::string> tangency_multipliers(int genus) {
  require_genus(genus);
  if (genus == 1) return {"12", "0"};
  if (genus == 3) return {"84", "0", "40*l4", "24*l6", "12*l8", "4*l10"};
  return {};
}

std::vector<std::vector<std::string>> M_matrix() {
  const Grid m = {{"8*l6", "-8*l4", "0", "7", "0", "0"},
                  {"6*l8", "0", "-6*l4", "0", "14", "0"},
                  {"4*l10", "0", "0", "-4*l4", "0", "21"},
                  {"2*l12", "0", "0", "0", "-2*l4", "0"},
                  {"-7*l10", "9*l8", "-9*l6", "7*l4", "0", "7"},
                  {"-14*l12", "6*l10", "0", "-6*l6", "14*l4", "0"},
                  {"-21*l14", "3*l12", "0", "0", "-3*l6", "21*l4"},
                  {"-7*l14", "-7*l12", "8*l10", "-8*l8", "7*l6", "7*l4"},
                  {"0", "-14*l14", "4*l12", "0", "-4*l8", "14*l6"},
                  {"0", "0", "-7*l14", "5*l12", "-5*l10", "7*l8"}};
  Grid out = m;
  for (auto& row : out) {
    for (auto& e : row) {
      if (e != "0") e = "2/7*(" + e + ")";
    }
  }
  return out;
}

std::vector<NamedExpr> lambda_map(int genus) {
  require_genus(genus);
  if (genus == 1) {
    return {{"l4", "-3*x2^2 + 1/2*x4"}, {"l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"}};
  }
  if (genus == 2) {
    return {{"l4", "-3*x2^2 + 1/2*x4 - 2*y4"},
            {"l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6"},
            {"l8", "(4*x2^2 + y4)*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6)"},
            {"l10", "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6"}};
  }
  return {{"l4", "-3*x2^2 + 1/2*x4 - 2*y4"},
          {"l6", "2*x2^3 + 1/4*x3^2 - 1/2*x2*x4 - 2*x2*y4 + 1/2*y6 - 2*z6"},
          {"l8", "4*x2^2*y4 - 1/2*(x4*y4 - x3*y5 + x2*y6) + y4^2 - 2*x2*z6 + 1/2*z8"},
          {"l10", "2*x2*y4^2 + 1/4*y5^2 - 1/2*y4*y6 - 1/2*(x4*z6 - x3*z7 + x2*z8) + (4*x2^2 + 2*y4)*z6"},
          {"l12", "4*x2*y4*z6 - 1/2*(y6*z6 - y5*z7 + y4*z8) + z6^2"},
          {"l14", "2*x2*z6^2 + 1/4*z7^2 - 1/2*z6*z8"}};
}

std::vector<NamedExpr> w_map(int genus) {
  require_genus(genus);
  if (genus == 1) return {};
  if (genus == 2) return {{"w3_3", "3*x2*y4 - 1/2*y6"}};
  return {{"w3_3", "3*x2*y4 - 1/2*y6 + 3*z6"},
          {"w3_5", "3*x2*z6 - 1/2*z8"},
          {"w5_5", "1/2*(x4*z6 - x3*z7 + x2*z8) - (4*x2^2 + y4)*z6"}};
}

std::vector<NamedExpr> general_formulas(int genus) {
  if (genus < 1) throw std::out_of_range("genus must be positive");
  std::vector<NamedExpr> out = {
      {"l4", "1/2*x3_1 - 3*x1_1^2 - 2*x1_3"},
      {"l6", "1/2*x3_3 - 2*x1_5 + 1/4*x2_1^2 + 2*x1_1^3 - 2*x1_1*x1_3 - 1/2*x1_1*x3_1"},
  };
  if (genus >= 2) {
    out.push_back({"l8",
                   "-1/2*(x1_1*x3_3 - x2_1*x2_3 + x3_1*x1_3) + (4*x1_1^2 + x1_3)*x1_3 + 1/2*x3_5"
                   " - 2*(x1_1*x1_5 + x1_7)"});
  }
  for (int k = 3; k <= 2 * genus - 1; k += 2) {
    const std::string K = std::to_string(k);
    const std::string K2 = std::to_string(k + 2);
    const std::string K4 = std::to_string(k + 4);
    out.push_back({"w3_" + K, "-1/2*x3_" + K + " + 3*x1_1*x1_" + K + " + 3*x1_" + K2});
    if (k >= 5) {
      out.push_back({"w5_" + K, "1/2*(x1_1*x3_" + K + " - x2_1*x2_" + K + " + x3_1*x1_" + K + ") - (4*x1_1^2 + x1_3)*x1_" +
                                    K + " - x3_" + K2 + " + 5*(x1_1*x1_" + K2 + " + x1_" + K4 + ")"});
    }
  }
  return out;
}

std::vector<FieldValue> field_values(int genus) {
  require_genus(genus);
  if (genus == 1) {
    return {{"L0", "x2", "2*x2"},
            {"L0", "x3", "3*x3"},
            {"L0", "x4", "4*x4"},
            {"L1", "x2", "x3"},
            {"L1", "x3", "x4"},
            {"L1", "x4", "12*x2*x3"},
            {"L2", "x2", "2/3*x4 - 2*x2^2"},
            {"L2", "x3", "3*x2*x3"},
            {"L2", "x4", "2*x2*x4 + 3*x3^2"}};
  }
  if (genus == 2) {
    return {
        {"L0", "x2", "2*x2"},
        {"L0", "x3", "3*x3"},
        {"L0", "x4", "4*x4"},
        {"L0", "y4", "4*y4"},
        {"L0", "y5", "5*y5"},
        {"L0", "y6", "6*y6"},
        {"L1", "x2", "x3"},
        {"L1", "x3", "x4"},
        {"L1", "x4", "4*(3*x2*x3 + y5)"},
        {"L1", "y4", "y5"},
        {"L1", "y5", "y6"},
        {"L1", "y6", "4*(2*x2*y5 + x3*y4)"},
        {"L3", "x2", "y5"},
        {"L3", "y4", "x3*y4 - x2*y5"},
        {"L3", "x3", "y6"},
        {"L3", "y5", "x4*y4 - x2*y6"},
        {"L3", "x4", "4*(2*x2*y5 + x3*y4)"},
        {"L3", "y6", "8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5"},
        {"L2", "x2", "8/5*l4 + 2*x2^2 + 4*y4"},
        {"L2", "y4", "-4/5*l4*x2 + 2*x2*y4"},
        {"L2", "x3", "3*x2*x3 + 5*y5"},
        {"L2", "y5", "-4/5*l4*x3 + 3*x3*y4"},
        {"L2", "x4", "2*x2*x4 + 3*x3^2 + 6*y6"},
        {"L2", "y6", "-4/5*l4*x4 + 4*x4*y4 + 3*x3*y5 - 2*x2*y6"},
        {"L4", "x2", "2/5*l6 - 2*x2*y4 + y6"},
        {"L4", "x3", "x3*y4 + 5*x2*y5"},
        {"L4", "x4", "6*x3*y5 + 4*x2*y6"},
        {"L4", "y4", "-6/5*l6*x2 + 2*l4*y4 - 4*x2^2*y4 + x4*y4 - 1/2*x3*y5"},
        {"L4", "y5", "-6/5*l6*x3 + 2*l4*y5 + 2*x2*x3*y4 - 2*x2^2*y5 + 4*y4*y5 - w9"},
        {"L4", "y6", "-6/5*l6*x4 + 2*l4*y6 + x3^2*y4 + 2*x2*x4*y4 - x2*x3*y5 - 2*x2^2*y6 + 5*y5^2 + 2*y4*y6"},
        {"L6", "x2", "1/5*l8 + 1/2*(x4*y4 - x2*y6) - y4^2"},
        {"L6", "x3", "3*x2*p7 - w9"},
        {"L6", "x4", "2*x3^2*y4 + 4*x2*x4*y4 - 2*x2*x3*y5 - 4*x2^2*y6 + y5^2 - 2*y4*y6"},
        {"L6", "y4", "-8/5*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6"},
        {"L6", "y5", "-8/5*l8*x3 + 2*l6*y5 + x3*y4^2 + 5*x2*y4*y5 - y5*y6"},
        {"L6", "y6", "-8/5*l8*x4 + 2*l6*y6 + 3*x3*y4*y5 - 3*x2*y5^2 + 6*x2*y4*y6 - y6^2"},
    };
  }
  return {
      {"L1", "x2", "x3"},
      {"L1", "x3", "x4"},
      {"L1", "x4", "4*(3*x2*x3 + y5)"},
      {"L1", "y4", "y5"},
      {"L1", "y5", "y6"},
      {"L1", "y6", "4*(x3*y4 + 2*x2*y5 + z7)"},
      {"L1", "z6", "z7"},
      {"L1", "z7", "z8"},
      {"L1", "z8", "4*(x3*z6 + 2*x2*z7)"},
      {"L3", "x2", "y5"},
      {"L3", "y4", "x3*y4 - x2*y5 + z7"},
      {"L3", "z6", "x3*z6 - x2*z7"},
      {"L5", "x2", "z7"},
      {"L5", "y4", "x3*z6 - x2*z7"},
      {"L5", "z6", "y5*z6 - y4*z7"},
      {"L2", "x2", "12/7*l4 + 2*x2^2 + 4*y4"},
      {"L2", "y4", "-8/7*l4*x2 + 2*x2*y4 + 6*z6"},
      {"L2", "z6", "-4/7*l4*y4 + 2*x2*z6"},
      {"L4", "x2", "4/7*l6 - 2*x2*y4 + y6 + 2*z6"},
      {"L4", "z6", "-6/7*l6*y4 - 16*x2^2*z6 + 3*x4*z6 - 8*y4*z6 - 1/2*x3*z7"},
      {"L4", "y4", "-12/7*l6*x2 - 10*x2^2*y4 + 2*x4*y4 - 4*y4^2 - 1/2*x3*y5 + 2*x2*z6"},
      {"L6", "x2", "-4/7*l8 + 4*x2^2*y4 - x2*y6 - 4*x2*z6 + 1/2*x3*y5 + 2*z8"},
      {"L6", "y4", "-16/7*l8*x2 + 2*l6*y4 - 2*x2*y4^2 - y5^2 + y4*y6 - 16*x2^2*z6 + 3*x4*z6 - 6*y4*z6 - 1/2*x3*z7"},
      {"L6", "z6", "-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2"},
      {"L8", "x2", "2/7*l10 + x4*z6 - 2*y4*z6 - x2*z8"},
      {"L8", "y4",
       "-6/7*l10*x2 + x3^2*z6 - x2*x4*z6 - 18*x2*y4*z6 + 3*y6*z6 - x2*x3*z7 - 5/2*y5*z7 + x2^2*z8 + 2*y4*z8"
       " - 6*z6^2"},
      {"L8", "z6",
       "-10/7*l10*y4 - x4*y4*z6 + 3/2*x3*y5*z6 + 2*y4^2*z6 - 20*x2*z6^2 - z7^2 + 3*z6*z8 + 4*w6*x2*z6"
       " - 1/2*z7*p7"},
      {"L10", "x2", "1/7*l12 + 1/2*y6*z6 - 1/2*y4*z8 - z6^2"},
      {"L10", "y4",
       "-3/7*l12*x2 + 1/2*x3*y5*z6 - 1/2*x2*y6*z6 - 1/2*x3*y4*z7 + 1/2*x2*y4*z8 - 11*x2*z6^2 - 3/2*z7^2"
       " + 3*z6*z8"},
      {"L10", "z6",
       "2/7*l12*y4 - 4*x2*y4^2*z6 + 1/2*y5^2*z6 - y4*y5*z7 + y4^2*z8 + 8*x2^2*z6^2 + x2*z7^2 - 2*x2*z6*z8"},
  };
}

std::vector<AuxDefinition> aux(int genus) {
  require_genus(genus);
  if (genus == 1) return {};
  if (genus == 2) {
    return {{"w6", {}, "3*x2*y4 - 1/2*y6"},
            {"p7", {{"L1", "w6"}, {"L3", "y4"}}, "x3*y4 - x2*y5"},
            {"w9", {{"L3", "w6"}}, "-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5"}};
  }
  return {
      {"w6", {}, "3*x2*y4 - 1/2*y6 + 3*z6"},
      {"w8", {}, "3*x2*z6 - 1/2*z8"},
      {"w10", {}, "1/2*(x4*z6 - x3*z7 + x2*z8) - (4*x2^2 + y4)*z6"},
      {"p7", {{"L1", "w6"}, {"L3", "y4"}}, "x3*y4 - x2*y5 + z7"},
      {"p9", {{"L1", "w8"}, {"L3", "z6"}, {"L5", "y4"}}, "x3*z6 - x2*z7"},
      {"p11", {{"L1", "w10"}, {"L5", "z6"}}, "y5*z6 - y4*z7"},
      {"w9", {{"L3", "w6"}}, "-x3*x2*y4 + x2^2*y5 - 1/2*x4*y5 + 1/2*x3*y6 + y4*y5 + x3*z6 - 2*x2*z7"},
      {"w11", {{"L5", "w6"}, {"L3", "w8"}}, "-x2*x3*z6 + y5*z6 + x2^2*z7 - 1/2*x4*z7 + 1/2*x3*z8"},
      {"w13", {{"L5", "w8"}, {"L3", "w10"}}, "-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7"},
      {"w15", {{"L5", "w10"}},
       "-y4*y5*z6 + y4^2*z7 + x3*z6^2 - x2*z6*z7 - 1/2*z7*z8 + 1/2*z8*p7 - 1/2*y6*p9 + 1/2*x4*p11"},
  };
}

Rational detTcal_factor(int genus) {
  require_genus(genus);
  if (genus == 1) return 4;
  if (genus == 2) return -16;
  return -64;
}

std::vector<TableRow> bracket_table(int genus) {
  require_genus(genus);
  std::vector<TableRow> table;
  if (genus == 1) {
    add_grading(table, {1, 2});
    add_block(table, {{"L1", "L2"}}, {"L1"}, {{"x2"}});
    return table;
  }
  if (genus == 2) {
    add_grading(table, {1, 2, 3, 4, 6});
    add_zero(table, "L1", "L3");
    add_block(table, pairs_with("L1", {2, 4, 6}), {"L1", "L3"},
              {{"x2", "-1"},
               {"y4 + alpha*x4", "x2"},
               {"gamma2*(x3^2 + x2*x4) + gamma1*y6", "y4 + beta*x4"}});
    add_block(table, pairs_with("L3", {2, 4, 6}), {"L1", "L3"},
              {{"y4 + 4/5*l4", "0"},
               {"w6 + 6/5*l6 + alpha*y6", "y4 - l4"},
               {"3/5*l8 + gamma1*x4*y4 + gamma2*x3*y5 - (gamma1 - gamma2)*x2*y6", "w6 + beta*y6"}});
    add_block(table, {{"L2", "L4"}}, {"L0", "L2", "L6", "L1", "L3"},
              {{"8/5*l6", "-8/5*l4", "2",
                "-1/2*y5 + 2*(alpha - gamma2)*x2*x3 + (5*alpha - 2*gamma1)*y5",
                "1/2*x3 + (alpha - 2*beta)*x3"}});
    add_block(table, {{"L2", "L6"}}, {"L0", "L4", "L1", "L3"},
              {{"4/5*l8", "-4/5*l4",
                "-1/2*p7 + 1/5*(2*(alpha - beta - gamma1)*(x4 - 6*x2^2) + 4*gamma2*(x4 - x2^2 + y4)"
                " - (8*alpha - 3*beta - 23*gamma1)*y4)*x3 - (gamma1 - 5*gamma2)*x2*y5",
                "1/2*y5 + (5*beta + gamma1)*y5 + (3*beta + gamma2)*x2*x3"}});
    add_block(table, {{"L4", "L6"}}, {"L0", "L2", "L4", "L6", "L1", "L3"},
              {{"-2*l10", "6/5*l8", "-6/5*l6", "2*l4",
                "-1/2*w9 + (alpha - beta - gamma1 + 2*gamma2)*(6/5*l6 + w6 + y6)*x3"
                " + (2*gamma2*x2^3 - 1/2*gamma2*x3^2 + (6*gamma1 - 7*alpha)*x2*y4 + (beta - gamma2)*y6)*x3"
                " + ((4*alpha - 3*gamma1 + 5*gamma2)*x2^2 - 1/2*(alpha - gamma1)*x4 + (alpha + 2*gamma1)*y4)*y5"
                " + alpha*(gamma2*x3^3 - gamma1*x4*y5 - (beta - gamma1)*x3*y6)",
                "1/2*p7 + (3*beta - gamma2)*x2^2*x3 + 1/2*beta*(2*alpha - 1)*x3*x4 + (alpha + 2*beta)*x3*y4"
                " + (5*beta - gamma1)*x2*y5"}});
    return table;
  }
  Genus3Symbols s;
  s.x2 = "x2";
  s.y4 = "y4";
  s.z6 = "z6";
  s.w6 = "w6";
  s.w8 = "w8";
  s.w10 = "w10";
  s.half = {{"-y5", "x3", "0"},
            {"-p7 - z7", "y5", "x3"},
            {"-2*p9", "z7", "y5"},
            {"-p11", "0", "z7"},
            {"-w9", "p7 - 2*z7", "2*y5"},
            {"-2*w11", "0", "2*p7"},
            {"-w13", "-p11", "2*p9"},
            {"-2*w13", "2*p11 - w11", "w9"},
            {"-w15", "-w13", "w11 + p11"},
            {"0", "-w15", "w13"}};
  return genus3_table(s, true);
}

std::vector<TableRow> genus2_normalization() {
  std::vector<TableRow> table;
  add_block(table, pairs_with("L1", {0, 2, 4, 6}), {"L1", "L3"}, {{"-1", "0"}, {"x2", "-1"}, {"y4", "x2"}, {"0", "y4"}});
  return table;
}

std::vector<TableRow> classical_table(int genus) {
  require_genus(genus);
  std::vector<TableRow> table;
  if (genus == 1) {
    add_grading(table, {1, 2});
    add_block(table, {{"L1", "L2"}}, {"L1"}, {{"wp_2"}});
    return table;
  }
  if (genus == 2) {
    add_grading(table, {1, 2, 3, 4, 6});
    add_zero(table, "L1", "L3");
    add_block(table, pairs_with("L1", {2, 4, 6}), {"L1", "L3"}, {{"wp_2", "-1"}, {"wp_1_3", "wp_2"}, {"0", "wp_1_3"}});
    add_block(table, pairs_with("L3", {2, 6, 4}), {"L1", "L3"},
              {{"wp_1_3 + 4/5*l4", "0"}, {"3/5*l8", "wp_0_3_3"}, {"wp_0_3_3 + 6/5*l6", "wp_1_3 - l4"}});
    add_block(table, {{"L2", "L4"}}, {"L0", "L2", "L6", "L1", "L3"},
              {{"8/5*l6", "-8/5*l4", "2", "-1/2*wp_2_3", "1/2*wp_3"}});
    add_block(table, {{"L2", "L6"}}, {"L0", "L4", "L1", "L3"}, {{"4/5*l8", "-4/5*l4", "-1/2*wp_1_3_3", "1/2*wp_2_3"}});
    add_block(table, {{"L4", "L6"}}, {"L0", "L2", "L4", "L6", "L1", "L3"},
              {{"-2*l10", "6/5*l8", "-6/5*l6", "2*l4", "-1/2*wp_0_3_3_3", "1/2*wp_1_3_3"}});
    return table;
  }
  Genus3Symbols s;
  s.x2 = "wp_2";
  s.y4 = "wp_1_3";
  s.z6 = "wp_1_5";
  s.w6 = "wp_0_3_3";
  s.w8 = "wp_0_3_5";
  s.w10 = "wp_0_5_5";
  s.half = {{"-wp_2_3", "wp_3", "0"},
            {"-wp_1_3_3 - wp_2_5", "wp_2_3", "wp_3"},
            {"-2*wp_1_3_5", "wp_2_5", "wp_2_3"},
            {"-wp_1_5_5", "0", "wp_2_5"},
            {"-wp_0_3_3_3", "wp_1_3_3 - 2*wp_2_5", "2*wp_2_3"},
            {"-2*wp_0_3_3_5", "0", "2*wp_1_3_3"},
            {"-wp_0_3_5_5", "-wp_1_5_5", "2*wp_1_3_5"},
            {"-2*wp_0_3_5_5", "2*wp_1_5_5 - wp_0_3_3_5", "wp_0_3_3_3"},
            {"-wp_0_5_5_5", "-wp_0_3_5_5", "wp_0_3_3_5 + wp_1_5_5"},
            {"0", "-wp_0_5_5_5", "wp_0_3_5_5"}};
  return genus3_table(s, false);
}

}  // namespace hyperlie::reference
