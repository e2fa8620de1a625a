#pragma once

#include <string_view>
#include <vector>

#include "hyperlie/identity.hpp"

namespace hyperlie {

/// "1", "2", "3" or "all". Throws std::invalid_argument otherwise.
std::vector<int> parse_genus_selector(std::string_view text);

/// All checks for one genus in dependency order: lambda, map, fields,
/// classical. A model that cannot be built yields one failing entry
/// "g{genus}.fields.build" in place of the field and classical checks.
std::vector<Check> suite_checks(int genus);

VerificationReport run_suite(const std::vector<int>& genera, Mode mode, const PitConfig& pit = {},
                             unsigned workers = worker_count());
VerificationReport run_suite(int genus, Mode mode, const PitConfig& pit = {}, unsigned workers = worker_count());

}  // namespace hyperlie
