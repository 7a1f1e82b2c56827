#ifndef EXTISING_IO_HPP
#define EXTISING_IO_HPP

#include <string>
#include <vector>

#include "extising/analysis.hpp"

namespace extising {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

/// Fixed 17-significant-digit formatting ('%.17g', no locale), so equal
/// doubles always serialize to identical bytes.
std::string format_double(double value);

/// Writes via a temporary file in the same directory plus rename, so a
/// crash never leaves a half-written output. Throws IoError.
void write_text_atomic(const std::string& path, const std::string& content);

/// Generic record table: one header row, string cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Table to_table(const ScanTable& scan);

/// Comma-separated with a mandatory header row.
std::string render_csv(const Table& table);
/// The same records as a JSON array of objects (numbers stay strings to
/// keep the two formats byte-level consistent).
std::string render_json(const Table& table);

std::string render(const Table& table, OutputFormat format);

} // namespace extising

#endif
