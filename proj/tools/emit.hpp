// Output row formatting shared by the single-query commands and the sweep.
// Integers are always printed exactly; reals use 12 significant digits.
// CSV rows have a fixed, header-documented column order; JSON output is one
// object per line so multi-million-row sweeps stay streamable.
#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "floorset/exactint.hpp"

namespace floorset::cli {

enum class OutputFormat { csv, json };

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Ordered name -> formatted-value list for one record.
class Fields {
public:
    void u64(std::string_view name, std::uint64_t v) {
        add(name, std::to_string(v), false);
    }
    void u128(std::string_view name, uint128 v) { add(name, to_decimal(v), false); }
    void i(std::string_view name, long long v) { add(name, std::to_string(v), false); }
    void real(std::string_view name, double v) { add(name, format_real(v), false); }
    void str(std::string_view name, std::string_view v) {
        add(name, std::string(v), true);
    }

    std::string csv_header() const {
        std::string out;
        for (const auto& e : entries_) {
            if (!out.empty()) out += ',';
            out += e.name;
        }
        out += '\n';
        return out;
    }

    std::string csv_row() const {
        std::string out;
        bool first = true;
        for (const auto& e : entries_) {
            if (!first) out += ',';
            first = false;
            out += e.value;
        }
        out += '\n';
        return out;
    }

    std::string json_line() const {
        std::string out = "{";
        bool first = true;
        for (const auto& e : entries_) {
            if (!first) out += ',';
            first = false;
            out += '"';
            out += e.name;
            out += "\":";
            if (e.quoted) {
                out += '"';
                out += e.value;  // field values here never need escaping
                out += '"';
            } else {
                out += e.value;
            }
        }
        out += "}\n";
        return out;
    }

    std::string row(OutputFormat f) const {
        return f == OutputFormat::csv ? csv_row() : json_line();
    }

private:
    struct Entry {
        std::string name;
        std::string value;
        bool quoted;
    };
    void add(std::string_view name, std::string value, bool quoted) {
        entries_.push_back({std::string(name), std::move(value), quoted});
    }
    std::vector<Entry> entries_;
};

}  // namespace floorset::cli
