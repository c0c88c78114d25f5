#pragma once

#include "jred/pipeline.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jred {

using ordered_json = nlohmann::ordered_json;

/// Parsed config document plus the source line of every value path
/// (e.g. "curvature[1].value"); lines are empty for JSON input.
struct ConfigDocument {
    std::string file;
    ordered_json root;
    std::map<std::string, int> lines;
};

/// Reads TOML, or JSON when the extension is .json. Throws ConfigError.
ConfigDocument load_document(const std::filesystem::path& path);
ConfigDocument parse_document(const std::string& text, const std::string& file, bool json);

struct OutputSpec {
    std::string format = "json";
    std::optional<std::string> path;
};

struct RunConfig {
    PipelineInput input;
    /// Canonical echo of every input except [output]; re-feeding it as a JSON
    /// config yields the same RunConfig.
    ordered_json echo;
    OutputSpec output;
};

/// Throws ConfigError with "<file>:<line>: <path>: <message>" diagnostics.
RunConfig parse_run_config(const ConfigDocument& doc, std::optional<std::uint64_t> seed_override = std::nullopt);

/// Only the [algebra] block; other known top-level blocks are ignored.
struct AlgebraConfig {
    LieAlgebra algebra;
    std::optional<AlgebraSpec> spec;
};
AlgebraConfig parse_algebra_config(const ConfigDocument& doc);

struct SweepEntry {
    std::string label;
    RunConfig config;
};

/// Each [[entry]] replaces the base config's curvature and, when given, its connection.
std::vector<SweepEntry> parse_sweep(const ConfigDocument& sweep, const ConfigDocument& base,
                                    std::optional<std::uint64_t> seed_override = std::nullopt);

/// JACOBI_REDUCE_SEED, if set; throws ConfigError when it is not an unsigned integer.
std::optional<std::uint64_t> seed_from_environment();

}  // namespace jred
