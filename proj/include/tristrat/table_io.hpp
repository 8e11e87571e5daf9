#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tristrat/model.hpp"

namespace tristrat {

/// Reads `agent,<issue ids...>` CSV with one row per agent. Rating tokens:
/// "+", "+1", "1", "0", "-", "-1" and the Unicode minus sign. Blank lines are
/// skipped; CRLF and a leading BOM are tolerated. `source_name` prefixes
/// error messages.
SituationTable load_situation_table(std::istream& in, const std::string& source_name = "<table>");

/// Reads `id,weight` CSV; weights are decimal or `num/den` literals. An
/// optional `id,weight` header line is skipped. Identifiers stay in file
/// order; use WeightVector::aligned_to to match a table.
WeightVector load_weights(std::istream& in, Axis axis, const std::string& source_name = "<weights>");

SituationTable load_situation_table(const std::filesystem::path& path);
WeightVector load_weights(const std::filesystem::path& path, Axis axis);

/// Canonical CSV rendering: header `agent,...`, tokens "+", "0", "-", LF endings.
std::string serialize_table(const SituationTable& table);

/// Canonical `id,weight` rendering with exact fractions.
std::string serialize_weights(const WeightVector& weights);

}  // namespace tristrat
