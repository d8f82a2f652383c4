// Output tables: `#` metadata lines, then a header row and numeric rows.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcli {

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
  void meta(std::string key, double value);
};

enum class Format { Csv, Json };

// 12 significant digits
std::string number(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);
void write(std::ostream& os, const Table& t, Format f);

}  // namespace qcli
