#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "hyperlie/export.hpp"
#include "hyperlie/suite.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyArgs {
  std::string genus = "all";
  std::string mode = "exact";
  std::uint64_t seed = 1;
  std::uint32_t samples = 8;
  std::uint64_t bound = 1'000'000;
  std::string report = "text";
};

struct ExportArgs {
  std::string what;
  int genus = 1;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  hyperlie::PitConfig pit;
  pit.seed = a.seed;
  pit.sample_count = a.samples;
  pit.coordinate_bound = a.bound;
  const auto report = hyperlie::run_suite(hyperlie::parse_genus_selector(a.genus), hyperlie::parse_mode(a.mode), pit);
  if (a.report == "json") {
    std::cout << hyperlie::to_json(report).dump(2) << "\n";
  } else {
    std::cout << hyperlie::to_text(report);
  }
  return report.all_pass() ? 0 : kExitFail;
}

int run_export(const ExportArgs& a) {
  std::cout << hyperlie::export_document(hyperlie::parse_export_what(a.what), a.genus,
                                         hyperlie::parse_export_format(a.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of lifted polynomial vector fields on hyperelliptic parameter spaces"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run the verification suite");
  v->add_option("--genus", verify.genus, "1, 2, 3 or all")->check(CLI::IsMember({"1", "2", "3", "all"}));
  v->add_option("--mode", verify.mode, "exact or pit")->check(CLI::IsMember({"exact", "pit"}));
  v->add_option("--seed", verify.seed, "seed for pit sampling");
  v->add_option("--samples", verify.samples, "evaluation points per identity")->check(CLI::PositiveNumber);
  v->add_option("--bound", verify.bound, "sample coordinates lie in [-B, B]")->check(CLI::Range(std::uint64_t{1}, hyperlie::PitConfig::kMaxBound));
  v->add_option("--report", verify.report, "text or json")->check(CLI::IsMember({"text", "json"}));

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "write fields, map, brackets or matrices");
  e->add_option("--what", exp.what, "fields, map, brackets or matrices")
      ->required()
      ->check(CLI::IsMember({"fields", "map", "brackets", "matrices"}));
  e->add_option("--genus", exp.genus, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  e->add_option("--format", exp.format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*v) return run_verify(verify);
    return run_export(exp);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
}
