#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace mprange {

using Json = nlohmann::ordered_json;
using Cell = std::variant<long long, double, std::string, bool>;

enum class Format { json, csv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
  std::string to_csv() const;
  Json to_json() const;
};

/// A command result: either tabular or a JSON document, plus the exit code.
struct Result {
  std::variant<Table, Json> body;
  int status = 0;
};

/// Renders a result in the requested format; JSON-only bodies reject csv.
std::string render(const Result& r, Format f);

std::string shortest(double x);

}  // namespace mprange
