#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

namespace qcli {

std::string number(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Table::meta(std::string key, double value) { meta(std::move(key), number(value)); }

void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [k, v] : t.metadata) os << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << number(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  // ordered_json keeps columns in table order
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"];
  meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) meta[k] = v;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = std::strtod(number(row[i]).c_str(), nullptr);
    rows.push_back(std::move(r));
  }
  os << doc.dump(1) << '\n';
}

void write(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Json) {
    write_json(os, t);
  } else {
    write_csv(os, t);
  }
}

}  // namespace qcli
