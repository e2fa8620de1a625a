#include "hyperlie/suite.hpp"

#include <stdexcept>
#include <string>

#include "hyperlie/classical.hpp"
#include "hyperlie/genus_fields.hpp"
#include "hyperlie/jacobi_map.hpp"
#include "hyperlie/lambda_space.hpp"

namespace hyperlie {

std::vector<int> parse_genus_selector(std::string_view text) {
  if (text == "all") return {1, 2, 3};
  if (text == "1" || text == "2" || text == "3") return {text[0] - '0'};
  throw std::invalid_argument("genus must be 1, 2, 3 or all, got '" + std::string(text) + "'");
}

std::vector<Check> suite_checks(int genus) {
  if (genus < 1 || genus > 3) throw std::invalid_argument("genus must be 1, 2 or 3");
  std::vector<Check> checks = lambda_checks(CurveModel(genus));
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  append(map_checks(genus));
  try {
    const GenusModelPtr model = build_genus_model(genus);
    append(field_checks(model));
    append(classical_checks(model));
  } catch (const std::exception& e) {
    checks.push_back({"g" + std::to_string(genus) + ".fields.build", "field catalog construction",
                      [what = std::string(e.what())](ZeroTest&) { return Outcome::fail(what, "construction failed"); }});
  }
  return checks;
}

VerificationReport run_suite(const std::vector<int>& genera, Mode mode, const PitConfig& pit, unsigned workers) {
  std::vector<Check> checks;
  for (int g : genera) {
    for (auto& c : suite_checks(g)) checks.push_back(std::move(c));
  }
  return run_checks(std::move(checks), mode, pit, workers);
}

VerificationReport run_suite(int genus, Mode mode, const PitConfig& pit, unsigned workers) {
  return run_suite(std::vector<int>{genus}, mode, pit, workers);
}

}  // namespace hyperlie
