#ifndef DIVSUM_TABLE_HPP
#define DIVSUM_TABLE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace divsum {

// Flat numeric table for the CLI emitters.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits; round-trips doubles exactly through strtod.
std::string format_g17(double v);

// Header row, comma separator, LF line endings.
void write_csv(const Table& t, std::ostream& os);

// Array of flat objects keyed by the column names.
void write_json(const Table& t, std::ostream& os);

}  // namespace divsum

#endif
