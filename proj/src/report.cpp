#include "tma/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tma {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string fmt2(double v) { return fmt("%.2f", v); }

}  // namespace

std::string format_cell(const char* f, double value) { return fmt(f, value); }

void write_csv(std::ostream& out, const MetaBlock& meta, const OutputTable& table) {
    out << "# tma " << meta.version << "\n";
    out << "# command " << meta.command << "\n";
    out << "# config";
    for (const auto& entry : meta.config) out << ' ' << entry.key << '=' << entry.csv_value;
    out << "\n";
    out << "# seed " << meta.seed << "\n";

    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_cell(table.formats[c].c_str(), row[c])
                << (c + 1 < row.size() ? "," : "\n");
    }
}

void write_json(std::ostream& out, const MetaBlock& meta, const OutputTable& table) {
    out << "{\"meta\":{\"version\":\"" << meta.version << "\",\"command\":\"" << meta.command
        << "\",\"config\":{";
    for (std::size_t i = 0; i < meta.config.size(); ++i)
        out << (i ? "," : "") << '"' << meta.config[i].key << "\":" << meta.config[i].json_value;
    out << "},\"seed\":" << meta.seed << ",\"columns\":[";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << '"' << table.columns[c] << '"';
    out << "]},\"rows\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? "," : "") << '[';
        for (std::size_t c = 0; c < table.rows[r].size(); ++c)
            out << (c ? "," : "") << format_cell(table.formats[c].c_str(), table.rows[r][c]);
        out << ']';
    }
    out << "]}\n";
}

void write_svg(std::ostream& out, const std::vector<SvgSeries>& series,
               const std::string& x_label, const std::string& y_label, double y_floor) {
    constexpr int kWidth = 800;
    constexpr int kHeight = 480;
    constexpr int kLeft = 64;
    constexpr int kRight = 16;
    constexpr int kTop = 20;
    constexpr int kBottom = 52;
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                     "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

    if (series.empty()) throw std::invalid_argument("empty-svg: no series to plot");

    double x_min = series[0].x.front();
    double x_max = x_min;
    double y_max = y_floor;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw std::invalid_argument("empty-svg: series must be nonempty and consistent");
        for (double x : s.x) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
        }
        for (double y : s.y) y_max = std::max(y_max, y);
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    y_max = std::max(y_max, y_floor + 1.0);
    const double y_top = std::ceil(y_max / 10.0) * 10.0;

    const double px_per_x = (kWidth - kLeft - kRight) / (x_max - x_min);
    const double px_per_y = (kHeight - kTop - kBottom) / (y_top - y_floor);
    const auto x_px = [&](double x) { return kLeft + (x - x_min) * px_per_x; };
    const auto y_px = [&](double y) {
        return kHeight - kBottom - (std::max(y, y_floor) - y_floor) * px_per_y;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // y ticks every 10 units, x ticks on a decade-ish step
    out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (double y = y_floor; y <= y_top + 1e-9; y += 10.0)
        out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt2(y_px(y)) << "\" x2=\""
            << kWidth - kRight << "\" y2=\"" << fmt2(y_px(y)) << "\"/>\n";
    const double x_span = x_max - x_min;
    double x_step = std::pow(10.0, std::floor(std::log10(x_span)));
    if (x_span / x_step < 3.0) x_step /= 2.0;
    if (x_span / x_step > 8.0) x_step *= 2.0;
    const double x_first = std::ceil(x_min / x_step) * x_step;
    for (double x = x_first; x <= x_max + 1e-9; x += x_step)
        out << "<line x1=\"" << fmt2(x_px(x)) << "\" y1=\"" << kTop << "\" x2=\"" << fmt2(x_px(x))
            << "\" y2=\"" << kHeight - kBottom << "\"/>\n";
    out << "</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (double y = y_floor; y <= y_top + 1e-9; y += 10.0)
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt2(y_px(y) + 4)
            << "\" text-anchor=\"end\">" << fmt("%.0f", y) << "</text>\n";
    for (double x = x_first; x <= x_max + 1e-9; x += x_step)
        out << "<text x=\"" << fmt2(x_px(x)) << "\" y=\"" << kHeight - kBottom + 18
            << "\" text-anchor=\"middle\">" << fmt("%g", x) << "</text>\n";
    out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << (kTop + kHeight - kBottom) / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (kTop + kHeight - kBottom) / 2 << ")\">" << y_label << "</text>\n";
    out << "</g>\n";

    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % 9]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < series[i].x.size(); ++p)
            out << fmt2(x_px(series[i].x[p])) << ',' << fmt2(y_px(series[i].y[p])) << ' ';
        out << "\"/>\n";
    }

    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = kTop + 14.0 + 16.0 * static_cast<double>(i);
        out << "<line x1=\"" << kWidth - kRight - 150 << "\" y1=\"" << fmt2(ly - 4) << "\" x2=\""
            << kWidth - kRight - 126 << "\" y2=\"" << fmt2(ly - 4) << "\" stroke=\""
            << kPalette[i % 9] << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kWidth - kRight - 120 << "\" y=\"" << fmt2(ly)
            << "\" fill=\"#333333\">" << series[i].label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
}

}  // namespace tma
