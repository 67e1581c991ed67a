#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubeladder {

/// How a column is rendered in JSON. Big integers are always decimal strings.
enum class ColumnKind { index, bigint, real, text };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
};

/// Tabular output shared by every CLI command. Cells are stored as their CSV
/// text; an empty cell renders as JSON null.
struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

/// UTF-8, comma separated, header row, LF line endings.
void write_csv(const Table& table, std::ostream& os);

/// {"meta": meta, "rows": [{column: value, ...}, ...]}
void write_json(const Table& table, const nlohmann::ordered_json& meta, std::ostream& os);

/// Parses CSV written by write_csv back into header and rows.
Table read_csv(std::istream& is);

std::string format_real(double v);

}  // namespace cubeladder
