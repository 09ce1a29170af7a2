#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tma {

// One metadata entry with its CSV and JSON spellings (e.g. clock_hz -> "none"
// vs null). Values are emitted verbatim.
struct MetaEntry {
    std::string key;
    std::string csv_value;
    std::string json_value;
};

struct MetaBlock {
    std::string version;
    std::string command;
    std::vector<MetaEntry> config;
    std::uint64_t seed = 0;
};

// Tabular command output. Every cell is a double; `formats` holds one
// printf format per column ("%.6f" unless a column needs full precision).
struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::string> formats;
    std::vector<std::vector<double>> rows;
};

std::string format_cell(const char* fmt, double value);

// '#'-prefixed metadata lines, header row, then fixed-format rows, '\n' ends.
void write_csv(std::ostream& out, const MetaBlock& meta, const OutputTable& table);

// {"meta": {version, command, config, seed}, "rows": [[...], ...]} with the
// same cell formatting as the CSV, so the two formats carry identical values.
void write_json(std::ostream& out, const MetaBlock& meta, const OutputTable& table);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Standalone SVG 1.1 line plot: one polyline per series, labeled axes with
// tick marks, no external references. y values are clamped at y_floor.
void write_svg(std::ostream& out, const std::vector<SvgSeries>& series,
               const std::string& x_label, const std::string& y_label, double y_floor = -60.0);

}  // namespace tma
