#include "hyperlie/identity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hyperlie/poly_io.hpp"

namespace hyperlie {

std::string_view to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "pit"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::kExact;
  if (text == "pit") return Mode::kPit;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

void PitConfig::validate() const {
  if (sample_count == 0) throw std::invalid_argument("pit sample count must be at least 1");
  if (coordinate_bound == 0) throw std::invalid_argument("pit coordinate bound must be positive");
  if (coordinate_bound > kMaxBound) throw std::invalid_argument("pit coordinate bound must not exceed 2^40");
}

std::uint64_t SampleStream::mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational SampleStream::next_coordinate(std::uint64_t bound) {
  // Bounds are capped at 2^40, so the modulo bias is below 2^-23.
  const std::uint64_t span = 2 * bound + 1;
  const auto r = static_cast<unsigned long>(next() % span);
  return Rational(mpz_class(r) - mpz_class(static_cast<unsigned long>(bound)));
}

std::vector<Rational> SampleStream::next_point(std::size_t dimension, std::uint64_t bound) {
  std::vector<Rational> point;
  point.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) point.push_back(next_coordinate(bound));
  return point;
}

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ZeroTest::ZeroTest(Mode mode, PitConfig config, std::uint64_t stream)
    : mode_(mode), config_(config), stream_(config.seed, stream) {
  config_.validate();
}

std::uint64_t ZeroTest::effective_bound(unsigned degree) const {
  return std::max<std::uint64_t>(config_.coordinate_bound, 2ULL * degree);
}

std::vector<Rational> ZeroTest::sample(std::size_t dimension, unsigned degree) {
  return stream_.next_point(dimension, effective_bound(degree));
}

bool ZeroTest::is_zero(const Poly& p) {
  if (mode_ == Mode::kExact || p.is_zero()) return p.is_zero();
  const unsigned degree = total_degree(p);
  for (std::uint32_t i = 0; i < config_.sample_count; ++i) {
    const auto point = sample(p.ring()->size(), degree);
    if (sgn(evaluate(p, point)) != 0) return false;
  }
  return true;
}

std::string witness_text(const Poly& p, std::size_t max_chars) {
  std::string text = to_text(p);
  if (text.size() > max_chars) {
    text.resize(max_chars);
    text += " ... (" + std::to_string(p.size()) + " terms)";
  }
  return text;
}

Outcome expect_zero(ZeroTest& zt, std::span<const std::pair<std::string, Poly>> residuals) {
  for (const auto& [label, r] : residuals) {
    if (!zt.is_zero(r)) return Outcome::fail(label + ": " + witness_text(r), "nonzero residual at " + label);
  }
  return Outcome::ok(std::to_string(residuals.size()) + " residuals vanish");
}

Outcome expect_zero(ZeroTest& zt, std::string label, const Poly& residual) {
  const std::pair<std::string, Poly> one{std::move(label), residual};
  return expect_zero(zt, std::span(&one, 1));
}

Outcome expect_equal(ZeroTest& zt, std::string label, const Poly& lhs, const Poly& rhs) {
  return expect_zero(zt, std::move(label), lhs - rhs);
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

const ReportEntry* VerificationReport::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& e : other.entries) entries.push_back(std::move(e));
  sort();
}

void VerificationReport::sort() {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j = {{"id", e.id},
                        {"anchor", e.anchor},
                        {"status", e.pass ? "pass" : "fail"},
                        {"mode", to_string(e.mode)},
                        {"wall_time", e.wall_time},
                        {"detail", e.detail}};
    j["residual"] = e.residual ? nlohmann::json(*e.residual) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  nlohmann::json doc = {{"schema_version", kReportSchemaVersion},
                        {"mode", to_string(report.mode)},
                        {"summary",
                         {{"total", report.entries.size()},
                          {"passed", report.entries.size() - report.failures()},
                          {"failed", report.failures()}}},
                        {"entries", std::move(entries)}};
  if (report.pit) {
    doc["pit"] = {{"samples", report.pit->sample_count},
                  {"bound", report.pit->coordinate_bound},
                  {"seed", report.pit->seed}};
  }
  return doc;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    out << (e.pass ? "PASS " : "FAIL ") << e.id << "  [" << e.anchor << "]";
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.3fs", e.wall_time);
    out << buf;
    if (!e.detail.empty()) out << "  " << e.detail;
    out << '\n';
    if (e.residual) out << "    residual: " << *e.residual << '\n';
  }
  out << report.entries.size() - report.failures() << "/" << report.entries.size() << " passed (" << to_string(report.mode)
      << " mode)\n";
  return out.str();
}

unsigned worker_count() {
  if (const char* env = std::getenv("HYPERLIE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport run_checks(std::vector<Check> checks, Mode mode, const PitConfig& pit, unsigned workers) {
  pit.validate();
  {
    std::set<std::string> ids;
    for (const auto& c : checks) {
      if (!ids.insert(c.id).second) throw std::invalid_argument("duplicate check id " + c.id);
    }
  }
  std::vector<ReportEntry> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const Check& c = checks[i];
      ReportEntry& e = results[i];
      e.id = c.id;
      e.anchor = c.anchor;
      e.mode = mode;
      const auto start = std::chrono::steady_clock::now();
      try {
        ZeroTest zt(mode, pit, stable_hash(c.id));
        Outcome o = c.run(zt);
        e.pass = o.pass;
        e.residual = std::move(o.residual);
        e.detail = std::move(o.detail);
        if (!e.pass && !e.residual) e.residual = "(no witness recorded)";
      } catch (const std::exception& ex) {
        e.pass = false;
        e.residual = std::string("exception: ") + ex.what();
        e.detail = "check aborted";
      }
      e.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.mode = mode;
  if (mode == Mode::kPit) report.pit = pit;
  report.entries = std::move(results);
  report.sort();
  return report;
}

}  // namespace hyperlie
