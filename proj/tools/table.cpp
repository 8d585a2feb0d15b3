#include "table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dzeta::cli {

using json = nlohmann::ordered_json;

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("table row width mismatch");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

json cell_json(const Cell& c) {
  struct {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const std::string& s) const { return s; }
    json operator()(long long v) const { return v; }
    json operator()(bool b) const { return b; }
  } visit;
  return std::visit(visit, c);
}

// Splits one CSV record starting at `pos`; advances past its line break.
std::vector<std::string> csv_record(const std::string& text, size_t& pos) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  while (pos < text.size()) {
    char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  json arr = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

Table table_from_csv(const std::string& text) {
  Table t;
  size_t pos = 0;
  if (text.empty()) return t;
  t.columns = csv_record(text, pos);
  while (pos < text.size()) {
    std::vector<std::string> fields = csv_record(text, pos);
    std::vector<Cell> row;
    for (auto& f : fields) {
      if (f.empty()) {
        row.emplace_back(std::monostate{});
      } else {
        row.emplace_back(std::move(f));
      }
    }
    t.add(std::move(row));
  }
  return t;
}

Table table_from_json(const std::string& text) {
  json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of rows");
  Table t;
  for (const json& obj : arr) {
    if (!obj.is_object()) throw std::invalid_argument("expected a JSON object per row");
    if (t.columns.empty()) {
      for (auto it = obj.begin(); it != obj.end(); ++it) t.columns.push_back(it.key());
    }
    std::vector<Cell> row;
    for (const std::string& col : t.columns) {
      const json& v = obj.at(col);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_boolean()) {
        row.emplace_back(v.get<bool>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else {
        throw std::invalid_argument("unsupported JSON value in column " + col);
      }
    }
    t.add(std::move(row));
  }
  return t;
}

}  // namespace dzeta::cli
