#pragma once

#include "jred/config.hpp"

#include <filesystem>
#include <string>

namespace jred {

inline constexpr int report_schema_version = 1;

/// {version, inputs, kernel, reduction, split, cartan, notes}
ordered_json report_to_json(const ordered_json& inputs, const ReductionReport& r);
std::string report_to_text(const ReductionReport& r);

/// Serialized report in the requested format ("json" or "text"), newline-terminated.
std::string render_report(const RunConfig& config, const ReductionReport& r, const std::string& format);

/// Writes to a temporary sibling file, then renames over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace jred
