#include "bergerspec/table.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bergerspec {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell, int precision) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d, precision);
  return std::get<std::string>(cell);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_real(double value, int precision) {
  if (precision < 1 || precision > kMaxPrecision) {
    throw std::invalid_argument("precision must be in [1, " + std::to_string(kMaxPrecision) + "]");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

std::string to_csv(const Table& table, int precision) {
  std::ostringstream out;
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    out << (j ? "," : "") << csv_field(table.columns[j]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << csv_field(cell_text(row[j], precision));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& table, int precision) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& cell = row[j];
      if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        obj[table.columns[j]] = *i;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        obj[table.columns[j]] = std::stod(format_real(*d, precision));
      } else {
        obj[table.columns[j]] = std::get<std::string>(cell);
      }
    }
    array.push_back(std::move(obj));
  }
  return array.dump(2) + "\n";
}

ParsedCsv parse_csv(std::string_view text) {
  ParsedCsv out;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      out.comments.emplace_back(line);
      continue;
    }
    auto fields = split_csv_line(line);
    if (!have_header) {
      out.columns = std::move(fields);
      have_header = true;
    } else {
      if (fields.size() != out.columns.size()) throw std::invalid_argument("CSV row width mismatch");
      out.rows.push_back(std::move(fields));
    }
  }
  return out;
}

}  // namespace bergerspec
