#pragma once

// Self-describing tabular output: CSV with '#' metadata lines, or a single
// JSON object. Numbers use 17 significant digits in CSV so that both forms
// round-trip to the same doubles.

#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "h1/errors.hpp"

namespace h1::io {

inline constexpr std::string_view kSchemaVersion = "1";

using Cell = std::variant<double, std::string>;

struct OutputRecord {
    std::string schema_version{kSchemaVersion};
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    OutputRecord(std::string command_, std::map<std::string, std::string> parameters_,
                 std::vector<std::string> columns_)
        : command(std::move(command_)), parameters(std::move(parameters_)), columns(std::move(columns_)) {
        std::set<std::string> seen;
        for (const auto& c : columns)
            if (!seen.insert(c).second)
                throw DomainError("OutputRecord: duplicate column label '" + c + "'");
    }

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size())
            throw DomainError("OutputRecord: row width does not match the header");
        rows.push_back(std::move(row));
    }
};

enum class Format { csv, json };

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// RFC 4180 quoting: fields containing ',', '"', CR or LF are quoted.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv(std::ostream& os, const OutputRecord& rec) {
    os << "# schema_version=" << rec.schema_version << '\n';
    os << "# command=" << rec.command << '\n';
    for (const auto& [k, v] : rec.parameters)
        os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(rec.columns[i]);
    os << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            if (const double* d = std::get_if<double>(&row[i]))
                os << format_double(*d);
            else
                os << csv_field(std::get<std::string>(row[i]));
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["schema_version"] = rec.schema_version;
    j["command"] = rec.command;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.parameters)
        j["parameters"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i]))
                r[rec.columns[i]] = *d;
            else
                r[rec.columns[i]] = std::get<std::string>(row[i]);
        }
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline void write_json(std::ostream& os, const OutputRecord& rec) { os << to_json(rec).dump(2) << '\n'; }

inline void write(std::ostream& os, const OutputRecord& rec, Format f) {
    if (f == Format::csv)
        write_csv(os, rec);
    else
        write_json(os, rec);
}

} // namespace h1::io
