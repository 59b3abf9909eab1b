#include "divsum/table.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace divsum {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
  }
  os << '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("write_csv: ragged row");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << format_g17(row[c]) << (c + 1 < row.size() ? "," : "");
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("write_json: ragged row");
    }
    nlohmann::json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace divsum
