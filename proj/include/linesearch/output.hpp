#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace linesearch {

inline constexpr std::string_view kSchemaVersion = "1";

enum class OutputFormat { json, csv };

OutputFormat parse_format(std::string_view name);

/// One CLI result document.
struct OutputRecord {
    std::string schema_version{kSchemaVersion};
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();

    nlohmann::json to_json() const;
    static OutputRecord from_json(const nlohmann::json& doc);

    /// Structured text: one JSON document.
    std::string to_text() const;
    static OutputRecord parse_text(std::string_view text);

    /// Flat delimited rows: header "path,value", then one row per leaf with
    /// a JSON-pointer path and the JSON-encoded leaf value.
    std::string to_rows() const;
    static OutputRecord parse_rows(std::string_view rows);

    std::string render(OutputFormat format) const;
};

/// Table of one row per sweep point: header of column names, then rows of
/// JSON-encoded cells.
std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<nlohmann::json>>& rows);

}  // namespace linesearch
