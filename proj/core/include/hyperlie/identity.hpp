#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlie/poly.hpp"

namespace hyperlie {

enum class Mode { kExact, kPit };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Randomized identity testing parameters. Coordinates are drawn uniformly
/// from the integers in [-coordinate_bound, coordinate_bound]; a nonzero
/// polynomial of total degree d vanishes at one sample with probability at
/// most d / (2B + 1).
struct PitConfig {
  static constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 40;

  std::uint32_t sample_count = 8;
  std::uint64_t coordinate_bound = 1'000'000;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on a zero sample count, or a bound outside
  /// [1, kMaxBound].
  void validate() const;
};

/// Deterministic counter-based generator: the value at (stream, counter) does
/// not depend on the order in which other streams are consumed.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }
  /// Uniform integer in [-bound, bound].
  Rational next_coordinate(std::uint64_t bound);
  std::vector<Rational> next_point(std::size_t dimension, std::uint64_t bound);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t stable_hash(std::string_view text);

/// Zero test for polynomial identities. Exact mode compares structurally; pit
/// mode evaluates at random points and only ever reports plausible zeros.
class ZeroTest {
 public:
  ZeroTest(Mode mode, PitConfig config, std::uint64_t stream);

  Mode mode() const { return mode_; }
  const PitConfig& config() const { return config_; }

  bool is_zero(const Poly& p);
  /// Bound actually used for a residual of the given total degree: the
  /// configured bound, raised to 2 * degree when that is larger.
  std::uint64_t effective_bound(unsigned degree) const;

  /// Fresh sample point in a ring, for checks that evaluate both sides of an
  /// identity without forming the residual symbolically.
  std::vector<Rational> sample(std::size_t dimension, unsigned degree);

 private:
  Mode mode_;
  PitConfig config_;
  SampleStream stream_;
};

struct Outcome {
  bool pass = true;
  /// Witness on failure: the (truncated) residual, or a nonzero sample value.
  std::optional<std::string> residual;
  std::string detail;

  static Outcome ok(std::string detail = {}) { return {true, std::nullopt, std::move(detail)}; }
  static Outcome fail(std::string residual, std::string detail = {}) {
    return {false, std::move(residual), std::move(detail)};
  }
};

/// Runs a list of labelled residuals through the zero test and reports the
/// first one that is not zero.
Outcome expect_zero(ZeroTest& zt, std::span<const std::pair<std::string, Poly>> residuals);
Outcome expect_zero(ZeroTest& zt, std::string label, const Poly& residual);
Outcome expect_equal(ZeroTest& zt, std::string label, const Poly& lhs, const Poly& rhs);

/// Residual text for reports, cut to a readable length.
std::string witness_text(const Poly& p, std::size_t max_chars = 4000);

struct Check {
  std::string id;
  std::string anchor;
  std::function<Outcome(ZeroTest&)> run;
};

struct ReportEntry {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::optional<std::string> residual;
  std::string detail;
  double wall_time = 0;  // seconds
  Mode mode = Mode::kExact;
};

struct VerificationReport {
  Mode mode = Mode::kExact;
  std::optional<PitConfig> pit;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  std::size_t failures() const;
  const ReportEntry* find(std::string_view id) const;
  void merge(VerificationReport other);
  void sort();
};

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Worker count from HYPERLIE_WORKERS (if set and positive), else the
/// hardware concurrency, at least 1.
unsigned worker_count();

/// Executes checks on a worker pool. Exceptions thrown by a check become
/// failing entries. Entries are sorted by id; ids must be unique.
VerificationReport run_checks(std::vector<Check> checks, Mode mode, const PitConfig& pit,
                              unsigned workers = worker_count());

}  // namespace hyperlie
