#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace osp {

// Tabular results with a fixed column set per table.  CSV and JSON renderings
// are fully deterministic: reals always print with 12 significant digits, rows
// keep their insertion order, and no timestamps or environment data appear.
struct Value {
    enum class Kind { Int, Real, Text, None } kind = Kind::None;
    std::int64_t i = 0;
    double d = 0.0;
    std::string s;

    static Value integer(std::int64_t v);
    static Value real(double v);
    static Value text(std::string v);
    static Value none();
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;

    void add_row(std::vector<Value> row);
};

// 12 significant digits, trailing zeros kept, valid as a JSON number.
std::string format_real(double v);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);

enum class ReportFormat { Csv, Json };
void write_report(const Table& t, ReportFormat format, std::ostream& out);

}  // namespace osp
