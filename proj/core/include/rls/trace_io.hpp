#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rls/scenario.hpp"

namespace rls {

/// Full CSV text for a run: '#'-prefixed header (scenario echo, PRNG name,
/// seed, tool version, column list), then one row per trace record. LF line
/// endings, >= 15 significant digits. Deterministic for a given run.
std::string trace_to_csv(const RunResult& result);

/// Write-then-rename so readers never observe a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

/// Parsed form of a trace CSV (used by the plot writer and tests).
struct ParsedTrace {
    std::vector<std::string> header_lines;  // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const;  // -1 when absent
};

ParsedTrace parse_trace_csv(const std::string& text);

}  // namespace rls
