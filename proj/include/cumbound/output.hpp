#pragma once

#include "cumbound/numeric.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cumbound {

inline constexpr std::string_view kOutputSchemaVersion = "1";

using Cell = std::variant<std::string, bool, std::int64_t, double, Int, Rat>;

struct Row {
    std::vector<std::pair<std::string, Cell>> cells;

    Row& add(std::string key, Cell value) {
        cells.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

/// One machine-readable result document: a command name and flat rows.
struct OutputRecord {
    std::string command;
    std::vector<Row> rows;
};

enum class OutputFormat { Json, Csv, Table };

/// Accepts "json", "csv", "table" (alias "plain").
OutputFormat parse_format(std::string_view name);

/// Renders deterministically. JSON is a single document
/// {"schema_version", "command", "rows"}; integers wider than int64 and all
/// rationals are rendered as decimal strings so no precision is lost. CSV
/// quotes per RFC 4180 and starts with a header row. Doubles use shortest
/// round-trip notation everywhere.
std::string render(const OutputRecord& record, OutputFormat format);

}  // namespace cumbound
