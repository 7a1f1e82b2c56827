#include "extising/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace extising {

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.flush()) throw IoError("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + target.string() +
                      "': " + ec.message());
    }
}

Table to_table(const ScanTable& scan) {
    Table table;
    table.columns = scan.columns;
    table.rows.reserve(scan.rows.size());
    for (const ScanRow& row : scan.rows) {
        std::vector<std::string> cells;
        cells.reserve(scan.columns.size());
        cells.push_back(std::to_string(row.n));
        cells.push_back(std::to_string(row.z));
        cells.push_back(format_double(row.alpha));
        cells.push_back(format_double(row.h));
        cells.push_back(row.status);
        for (double v : row.values) cells.push_back(format_double(v));
        table.rows.push_back(std::move(cells));
    }
    return table;
}

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

namespace {

bool is_numeric_token(const std::string& cell) {
    if (cell.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    return end == cell.c_str() + cell.size() && std::isfinite(v);
}

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    out += '"';
}

} // namespace

std::string render_json(const Table& table) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out += "  {";
        const auto& row = table.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ", ";
            append_json_string(out, table.columns[c]);
            out += ": ";
            // Numeric cells go out verbatim so csv and json carry
            // byte-identical values; nan/inf are not JSON numbers and
            // fall back to strings.
            if (is_numeric_token(row[c]))
                out += row[c];
            else
                append_json_string(out, row[c]);
        }
        out += r + 1 < table.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? render_csv(table) : render_json(table);
}

} // namespace extising
