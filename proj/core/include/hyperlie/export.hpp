#pragma once

#include <string>
#include <string_view>

namespace hyperlie {

enum class ExportWhat { kFields, kMap, kBrackets, kMatrices };
enum class ExportFormat { kJson, kLatex };

/// Throw std::invalid_argument on an unknown selector.
ExportWhat parse_export_what(std::string_view text);
ExportFormat parse_export_format(std::string_view text);

// fields:   the lifted fields and auxiliary polynomials
// map:      lambda_s o p and the w coordinates
// brackets: the commutator table over the coordinate ring
// matrices: T, calT, and M for genus 3
// Output depends only on the arguments.
std::string export_document(ExportWhat what, int genus, ExportFormat format);

}  // namespace hyperlie
