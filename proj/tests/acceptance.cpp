// Acceptance run: one PASS/FAIL line per criterion. Each criterion is timed
// either directly or as the sum of the wall times of the report entries it
// owns plus the construction time of the models those entries use.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperlie/genus_fields.hpp"
#include "hyperlie/jacobi_map.hpp"
#include "hyperlie/lambda_space.hpp"
#include "hyperlie/poly_io.hpp"
#include "hyperlie/suite.hpp"
#include "support.hpp"

namespace {

using namespace hyperlie;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit;  // seconds
  std::function<Result()> run;
};

// Exact suite for all genera, computed once.
struct SuiteRun {
  VerificationReport report;
  std::map<int, double> build_seconds;  // suite_checks(g) construction
};

const SuiteRun& exact_suite() {
  static const SuiteRun run = [] {
    SuiteRun out;
    for (int g = 1; g <= 3; ++g) {
      const auto t = Clock::now();
      auto checks = suite_checks(g);
      out.build_seconds[g] = since(t);
      out.report.merge(run_checks(std::move(checks), Mode::kExact, PitConfig{}));
    }
    out.report.sort();
    return out;
  }();
  return run;
}

// Entries selected by a predicate on the id; fails when none match.
Result from_entries(const std::function<bool(const std::string&)>& select, double extra_seconds = 0,
                    std::size_t expected = 0) {
  Result r;
  r.seconds = extra_seconds;
  std::size_t count = 0;
  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& e : exact_suite().report.entries) {
    if (!select(e.id)) continue;
    ++count;
    r.seconds += e.wall_time;
    if (!e.pass) {
      if (failed++ == 0) first_failure = e.id + ": " + e.residual.value_or("") + " " + e.detail;
    }
  }
  r.pass = count > 0 && failed == 0 && (expected == 0 || count == expected);
  r.detail = std::to_string(count) + " entries";
  if (expected != 0 && count != expected) r.detail += ", expected " + std::to_string(expected);
  if (failed) r.detail += ", " + std::to_string(failed) + " failed; first " + first_failure.substr(0, 300);
  return r;
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }
bool starts(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Result criterion_genus1_discriminant() {
  const auto t = Clock::now();
  const CurveModel m(1);
  const Poly R = discriminant_R(m);
  const bool printed = R == parse_poly(m.ring(), "4*l4^3 + 27*l6^2");
  const bool factor = determinant(build_T(m)) == Poly::constant(m.ring(), Rational(-4, 3)) * R;
  return {printed && factor, since(t), std::string("R printed: ") + (printed ? "yes" : "no") + ", det T = -4/3 R: " + (factor ? "yes" : "no")};
}

Result criterion_genus3_determinant() {
  const auto t = Clock::now();
  const CurveModel m(3);
  const Poly detT = determinant(build_T(m));
  const Poly R = discriminant_R(m);
  const bool ok = detT == Poly::constant(m.ring(), Rational(-64, 7)) * R;
  return {ok, since(t), "det T: " + std::to_string(detT.size()) + " terms, R: " + std::to_string(R.size()) + " terms"};
}

Result criterion_tangency() {
  const auto t = Clock::now();
  bool ok = true;
  std::string detail;
  const std::map<int, std::vector<std::string>> expected = {{1, {"12", "0"}}, {3, {"84", "0", "40*l4", "24*l6", "12*l8", "4*l10"}}};
  for (const auto& [g, values] : expected) {
    const CurveModel m(g);
    const auto mult = tangency_multipliers(m, determinant(build_T(m)));
    std::string got;
    for (std::size_t i = 0; i < mult.size(); ++i) got += (i ? ", " : "") + to_text(mult[i]);
    bool same = mult.size() == values.size();
    for (std::size_t i = 0; same && i < values.size(); ++i) same = mult[i] == parse_poly(m.ring(), values[i]);
    ok = ok && same;
    detail += "g" + std::to_string(g) + " (" + got + ") ";
  }
  return {ok, since(t), detail};
}

Result criterion_M_relation() {
  const auto t = Clock::now();
  auto checks = lambda_checks(CurveModel(3));
  std::erase_if(checks, [](const Check& c) { return !has(c.id, ".lambda.M_"); });
  const auto report = run_checks(std::move(checks), Mode::kExact, PitConfig{});
  return {report.entries.size() == 10 && report.all_pass(), since(t),
          std::to_string(report.entries.size()) + " rows, " + std::to_string(report.failures()) + " failed"};
}

Result criterion_elimination() {
  const auto t = Clock::now();
  std::vector<Check> checks;
  for (int g = 1; g <= 3; ++g) {
    for (auto& c : map_checks(g)) checks.push_back(std::move(c));
  }
  const auto report = run_checks(std::move(checks), Mode::kExact, PitConfig{});
  bool required = true;
  for (int g = 1; g <= 3; ++g) {
    const std::string pre = "g" + std::to_string(g) + ".map.";
    for (const char* id : {"relation_count", "relations_vanish", "lambda_printed"}) required = required && report.find(pre + id);
    if (g >= 2) required = required && report.find(pre + "w_printed");
  }
  return {required && report.all_pass(), since(t),
          std::to_string(report.entries.size()) + " entries, " + std::to_string(report.failures()) + " failed"};
}

Result criterion_projectability() {
  const auto& s = exact_suite();
  Result r = from_entries([](const std::string& id) { return has(id, ".proj.L"); },
                          s.build_seconds.at(1) + s.build_seconds.at(2) + s.build_seconds.at(3), 3 + 6 + 9);
  return r;
}

Result criterion_detTcal() {
  return from_entries([](const std::string& id) { return has(id, ".fields.detTcal_factor"); }, 0, 3);
}

Result criterion_ladder() {
  return from_entries(
      [](const std::string& id) {
        return starts(id, "g3.fields.ladder_") || starts(id, "g3.fields.values_") || starts(id, "g3.fields.aux_");
      },
      exact_suite().build_seconds.at(3));
}

Result criterion_tables() {
  return from_entries([](const std::string& id) { return has(id, ".brackets.") || starts(id, "g3.proj.bracket_"); });
}

Result criterion_classical() {
  Result r = from_entries([](const std::string& id) { return id == "g2.normalize.solve" || has(id, ".classical."); });
  const auto* solve = exact_suite().report.find("g2.normalize.solve");
  if (solve) r.detail += "; " + solve->detail;
  r.pass = r.pass && solve && exact_suite().report.find("g2.classical.forced_alpha_rejected") &&
           exact_suite().report.find("g3.classical.table_match");
  return r;
}

Result criterion_properties() {
  Result props = from_entries([](const std::string& id) { return has(id, ".props."); }, 0, 9);
  const auto t = Clock::now();

  // Leibniz and weight additivity on randomized inputs with the genus-3 fields.
  const GenusModelPtr m = build_genus_model(3);
  std::mt19937_64 rng(20240601);
  int leibniz = 0;
  int graded = 0;
  bool random_ok = true;
  for (int round = 0; round < 12; ++round) {
    for (const auto& D : m->fields.fields()) {
      const Poly p = testing::random_poly(m->x_ring, rng, 4, 2);
      const Poly q = testing::random_poly(m->x_ring, rng, 4, 2);
      random_ok = random_ok && D(p * q) == D(p) * q + p * D(q);
      ++leibniz;
      const int w = 2 + static_cast<int>(rng() % 12);
      const Poly h = testing::random_homogeneous(m->x_ring, w, rng);
      const Poly image = D(h);
      if (!image.is_zero()) {
        random_ok = random_ok && weight_check(image).weight == w + D.weight();
        ++graded;
      }
    }
  }
  random_ok = random_ok && leibniz >= 100 && graded >= 100;

  // pit mode against exact mode on every suite entry.
  PitConfig pit;
  pit.seed = 1;
  const auto sampled = run_suite(std::vector<int>{1, 2, 3}, Mode::kPit, pit);
  const auto& exact = exact_suite().report;
  bool agree = sampled.entries.size() == exact.entries.size();
  std::size_t disagreements = 0;
  for (const auto& e : sampled.entries) {
    const auto* x = exact.find(e.id);
    if (!x || x->pass != e.pass) {
      agree = false;
      ++disagreements;
    }
  }

  Result r;
  r.seconds = props.seconds + since(t);
  r.pass = props.pass && random_ok && agree;
  r.detail = props.detail + "; Leibniz " + std::to_string(leibniz) + ", graded " + std::to_string(graded) +
             (random_ok ? " ok" : " FAILED") + "; pit vs exact on " + std::to_string(sampled.entries.size()) +
             " entries, " + std::to_string(disagreements) + " disagreements";
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "genus-1 discriminant and det T = -4/3 R", 1, criterion_genus1_discriminant},
      {2, "genus-3 det T = -64/7 R", 120, criterion_genus3_determinant},
      {3, "tangency multipliers for genus 1 and 3", 30, criterion_tangency},
      {4, "M-relation rows for genus 3", 10, criterion_M_relation},
      {5, "elimination reproduces the map for genus 1-3", 10, criterion_elimination},
      {6, "projectability of all 3g lifted fields", 60, criterion_projectability},
      {7, "det calT = 4, -16, -64 times det T o p", 300, criterion_detTcal},
      {8, "genus-3 ladder completion and auxiliaries", 60, criterion_ladder},
      {9, "commutator tables", 300, criterion_tables},
      {10, "normalization and classical tables", 10, criterion_classical},
      {11, "Jacobi, Leibniz, homogeneity, pit agreement", 120, criterion_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, 0, std::string("exception: ") + e.what()};
    }
    const bool in_time = r.seconds < c.limit;
    const bool pass = r.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %2d  %s  (%.2f s, limit %.0f s%s)  %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), r.seconds,
                c.limit, in_time ? "" : ", too slow", r.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
