#include "csv.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace hyperdelta::cli::csv {

std::vector<Row> read(std::istream& in) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false, any = false;
  char c;
  auto end_row = [&] {
    if (any || !field.empty() || !row.empty()) {
      row.push_back(field);
      rows.push_back(std::move(row));
    }
    row.clear(), field.clear(), any = false;
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') field += static_cast<char>(in.get());
        else quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"': quoted = any = true; break;
      case ',': row.push_back(field), field.clear(), any = true; break;
      case '\r': break;
      case '\n': end_row(); break;
      default: field += c; any = true;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  end_row();
  return rows;
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
  out << '\n';
}

}  // namespace hyperdelta::cli::csv
