#include "cubeladder/table.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubeladder {

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
    rows.push_back(std::move(row));
}

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i].name;
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

void write_json(const Table& table, const nlohmann::ordered_json& meta, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Column& col = table.columns[i];
            const std::string& cell = row[i];
            if (cell.empty()) {
                obj[col.name] = nullptr;
                continue;
            }
            switch (col.kind) {
                case ColumnKind::index: obj[col.name] = std::stoll(cell); break;
                case ColumnKind::real: obj[col.name] = std::stod(cell); break;
                case ColumnKind::bigint:
                case ColumnKind::text: obj[col.name] = cell; break;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

Table read_csv(std::istream& is) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        return cells;
    };
    Table out;
    std::string line;
    if (!std::getline(is, line)) return out;
    for (auto& name : split(line)) out.columns.push_back(Column{std::move(name), ColumnKind::text});
    while (std::getline(is, line)) out.add_row(split(line));
    return out;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

}  // namespace cubeladder
