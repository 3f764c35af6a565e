#include "cumbound/output.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cumbound {

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "table" || name == "plain") return OutputFormat::Table;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected json, csv or table)");
}

namespace {

constexpr std::int64_t kMaxJsonInt = 9007199254740992;  // 2^53, safe everywhere

bool fits_int64(const Int& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& value) -> std::string {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return value;
            } else if constexpr (std::is_same_v<T, bool>) {
                return value ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(value);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(value);
            } else if constexpr (std::is_same_v<T, Int>) {
                return value.str();
            } else {
                return format_rational(value);
            }
        },
        cell);
}

nlohmann::json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& value) -> nlohmann::json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return value;
            } else if constexpr (std::is_same_v<T, bool>) {
                return value;
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return value;
            } else if constexpr (std::is_same_v<T, double>) {
                return value;
            } else if constexpr (std::is_same_v<T, Int>) {
                // Exact integers never pass through floating point; values
                // beyond the 53-bit safe range become decimal strings.
                if (fits_int64(value) &&
                    boost::multiprecision::abs(value) <= kMaxJsonInt) {
                    return value.template convert_to<std::int64_t>();
                }
                return value.str();
            } else {
                return format_rational(value);
            }
        },
        cell);
}

std::string render_json(const OutputRecord& record) {
    nlohmann::json doc;
    doc["schema_version"] = std::string(kOutputSchemaVersion);
    doc["command"] = record.command;
    auto rows = nlohmann::json::array();
    for (const auto& row : record.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [key, cell] : row.cells) obj[key] = cell_json(cell);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Column set in first-appearance order across all rows; commands with mixed
// row kinds (bound --converse) still get a single coherent header.
std::vector<std::string> collect_header(const OutputRecord& record) {
    std::vector<std::string> header;
    for (const auto& row : record.rows) {
        for (const auto& [key, value] : row.cells) {
            if (std::find(header.begin(), header.end(), key) == header.end()) {
                header.push_back(key);
            }
        }
    }
    return header;
}

std::vector<std::vector<std::string>> collect_grid(const OutputRecord& record,
                                                   const std::vector<std::string>& header) {
    std::vector<std::vector<std::string>> grid;
    grid.reserve(record.rows.size());
    for (const auto& row : record.rows) {
        std::vector<std::string> line(header.size());
        for (const auto& [key, value] : row.cells) {
            const auto it = std::find(header.begin(), header.end(), key);
            line[static_cast<std::size_t>(it - header.begin())] = cell_text(value);
        }
        grid.push_back(std::move(line));
    }
    return grid;
}

std::string render_csv(const OutputRecord& record) {
    std::ostringstream out;
    if (record.rows.empty()) return out.str();
    const auto header = collect_header(record);
    const auto grid = collect_grid(record, header);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(header[i]);
    }
    out << '\n';
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(line[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_table(const OutputRecord& record) {
    if (record.rows.empty()) return "";
    const auto header = collect_header(record);
    const auto grid = collect_grid(record, header);
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << "  ";
        out << header[i];
        if (i + 1 < header.size()) out << std::string(widths[i] - header[i].size(), ' ');
    }
    out << '\n';
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << line[i];
            if (i + 1 < line.size()) out << std::string(widths[i] - line[i].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render(const OutputRecord& record, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return render_json(record);
        case OutputFormat::Csv: return render_csv(record);
        case OutputFormat::Table: return render_table(record);
    }
    return "";
}

}  // namespace cumbound
