#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bergerspec {

/// Integers and exact rationals (as "p/q" text) serialize losslessly; reals are
/// written with `precision` significant digits.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

constexpr int kDefaultPrecision = 12;
constexpr int kMaxPrecision = 30;

std::string format_real(double value, int precision);

/// `#`-prefixed comment lines, a header line, then one line per row.
std::string to_csv(const Table& table, int precision);

/// Flat JSON array of objects keyed by column name. Comments are dropped.
std::string to_json(const Table& table, int precision);

struct ParsedCsv {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

ParsedCsv parse_csv(std::string_view text);

}  // namespace bergerspec
