#include "output.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mprange {

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct CellText {
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(double v) const { return shortest(v); }
  std::string operator()(const std::string& v) const { return csv_field(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_field(columns[i]);
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + std::visit(CellText{}, row[i]);
    out += '\n';
  }
  return out;
}

Json Table::to_json() const {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i)
      std::visit([&](const auto& v) { obj[columns[i]] = v; }, row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string render(const Result& r, Format f) {
  if (const Table* t = std::get_if<Table>(&r.body)) return f == Format::csv ? t->to_csv() : t->to_json().dump(2) + "\n";
  if (f == Format::csv) throw std::invalid_argument("this command has no csv form; use --format json");
  return std::get<Json>(r.body).dump(2) + "\n";
}

}  // namespace mprange
