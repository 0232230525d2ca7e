#include "outerspread/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace osp {

Value Value::integer(std::int64_t v) {
    Value out;
    out.kind = Kind::Int;
    out.i = v;
    return out;
}

Value Value::real(double v) {
    Value out;
    out.kind = Kind::Real;
    out.d = v;
    return out;
}

Value Value::text(std::string v) {
    Value out;
    out.kind = Kind::Text;
    out.s = std::move(v);
    return out;
}

Value Value::none() { return Value{}; }

void Table::add_row(std::vector<Value> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("Table: row width does not match columns");
    rows.push_back(std::move(row));
}

std::string format_real(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e999" : (v < 0 ? "-1e999" : "0");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    std::string s = buf;
    // "%#" keeps trailing zeros but may leave a bare trailing point ("6.") that
    // JSON rejects; strip it, also ahead of an exponent ("1.e+20")
    const auto epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    if (!mant.empty() && mant.back() == '.') mant.pop_back();
    return (epos == std::string::npos) ? mant : mant + s.substr(epos);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string cell_csv(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Int: return std::to_string(v.i);
        case Value::Kind::Real: return format_real(v.d);
        case Value::Kind::Text: return csv_escape(v.s);
        case Value::Kind::None: return "";
    }
    return "";
}

std::string cell_json(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Int: return std::to_string(v.i);
        case Value::Kind::Real: return format_real(v.d);
        case Value::Kind::Text: return json_escape(v.s);
        case Value::Kind::None: return "null";
    }
    return "null";
}

}  // namespace

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out << ',';
        out << csv_escape(t.columns[c]);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << cell_csv(row[c]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    out << "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ");
        out << "{";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out << ", ";
            out << json_escape(t.columns[c]) << ": " << cell_json(t.rows[r][c]);
        }
        out << "}";
    }
    out << "\n]\n";
}

void write_report(const Table& t, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Csv)
        write_csv(t, out);
    else
        write_json(t, out);
}

}  // namespace osp
