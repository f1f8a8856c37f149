#include "linesearch/output.hpp"

#include <sstream>

#include "linesearch/errors.hpp"

namespace linesearch {

namespace {

using nlohmann::json;

// Leaves are scalars and empty containers, so empty arrays survive the trip.
void flatten_into(const json& node, const json::json_pointer& path,
                  std::vector<std::pair<std::string, json>>& out) {
    if (node.is_object() && !node.empty()) {
        for (const auto& [key, child] : node.items()) {
            flatten_into(child, path / key, out);
        }
    } else if (node.is_array() && !node.empty()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            flatten_into(node[i], path / i, out);
        }
    } else {
        out.emplace_back(path.to_string(), node);
    }
}

std::string_view next_line(std::string_view& text) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    throw InvalidInput("unknown format '" + std::string(name) + "' (expected json or csv)");
}

json OutputRecord::to_json() const {
    return json{{"schema_version", schema_version},
                {"command", command},
                {"inputs", inputs},
                {"results", results},
                {"diagnostics", diagnostics}};
}

OutputRecord OutputRecord::from_json(const json& doc) {
    OutputRecord r;
    r.schema_version = doc.at("schema_version").get<std::string>();
    r.command = doc.at("command").get<std::string>();
    r.inputs = doc.value("inputs", json::object());
    r.results = doc.value("results", json::object());
    r.diagnostics = doc.value("diagnostics", json::object());
    return r;
}

std::string OutputRecord::to_text() const { return to_json().dump(2) + "\n"; }

OutputRecord OutputRecord::parse_text(std::string_view text) {
    return from_json(json::parse(text));
}

std::string OutputRecord::to_rows() const {
    std::vector<std::pair<std::string, json>> leaves;
    flatten_into(to_json(), json::json_pointer{}, leaves);
    std::ostringstream os;
    os << "path,value\n";
    for (const auto& [path, value] : leaves) {
        os << path << ',' << value.dump() << '\n';
    }
    return os.str();
}

OutputRecord OutputRecord::parse_rows(std::string_view rows) {
    if (next_line(rows) != "path,value") {
        throw InvalidInput("flat rows must start with the header 'path,value'");
    }
    json doc = json::object();
    while (!rows.empty()) {
        const std::string_view line = next_line(rows);
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidInput("malformed row: " + std::string(line));
        }
        doc[json::json_pointer(std::string(line.substr(0, comma)))] =
            json::parse(line.substr(comma + 1));
    }
    return from_json(doc);
}

std::string OutputRecord::render(OutputFormat format) const {
    return format == OutputFormat::json ? to_text() : to_rows();
}

std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::vector<json>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i].dump();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace linesearch
