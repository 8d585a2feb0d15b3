#ifndef DZETA_TOOLS_TABLE_HPP
#define DZETA_TOOLS_TABLE_HPP

#include <string>
#include <variant>
#include <vector>

namespace dzeta::cli {

/// null, text, integer, boolean
using Cell = std::variant<std::monostate, std::string, long long, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width does not match.
  void add(std::vector<Cell> row);
};

/// Header line then one line per row; null cells are empty. Fields holding
/// a comma, quote or newline are quoted.
std::string to_csv(const Table& table);
/// Array of row objects keyed by column name, two-space indented.
std::string to_json(const Table& table);

/// Inverses used to check round-trips. CSV cells come back as text (empty
/// cells as null); JSON keeps its value types.
Table table_from_csv(const std::string& text);
Table table_from_json(const std::string& text);

}  // namespace dzeta::cli

#endif  // DZETA_TOOLS_TABLE_HPP
