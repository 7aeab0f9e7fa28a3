#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdelta::cli::csv {

using Row = std::vector<std::string>;

/// RFC 4180 records: comma separated, double-quoted fields may hold commas,
/// quotes ("") and newlines. Blank lines are skipped.
std::vector<Row> read(std::istream& in);

std::string quote(const std::string& field);
void write_row(std::ostream& out, const Row& row);

}  // namespace hyperdelta::cli::csv
