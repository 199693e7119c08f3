#include "table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace conformal::cli {

namespace {

const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::size_t parse_index(const std::string& s) {
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0)
        throw std::invalid_argument("bad index '" + s + "'");
    return v;
}

}  // namespace

void Table::add(std::vector<Cell> row) {
    if (row.size() != header.size()) throw std::logic_error("Table::add: row width mismatch");
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto* d = std::get_if<double>(&row[i]))
                out << format_number(*d);
            else
                out << std::get<std::string>(row[i]);
        }
        out << '\n';
    }
}

void write_svg(const Table& t, const std::string& title, std::ostream& out) {
    const double W = 800, H = 600, left = 70, right = 160, top = 40, bottom = 50;
    std::vector<std::size_t> series;
    for (std::size_t c = 1; c < t.header.size(); ++c) {
        bool numeric = !t.rows.empty();
        for (const auto& r : t.rows) numeric = numeric && std::holds_alternative<double>(r[c]);
        if (numeric) series.push_back(c);
    }
    bool x_numeric = !t.rows.empty();
    for (const auto& r : t.rows) x_numeric = x_numeric && std::holds_alternative<double>(r[0]);

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    if (x_numeric) {
        for (const auto& r : t.rows) {
            const double x = std::get<double>(r[0]);
            if (!std::isfinite(x)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            for (std::size_t c : series) {
                const double y = std::get<double>(r[c]);
                if (!std::isfinite(y)) continue;
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (!(xmax > xmin)) { xmin = 0; xmax = 1; }
    if (!(ymax > ymin)) { ymin -= 1; ymax += 1; }
    const double pw = W - left - right, ph = H - top - bottom;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << escape_xml(title) << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4, fy = ymin + (ymax - ymin) * i / 4;
        out << "<text x=\"" << format_number(sx(fx)) << "\" y=\"" << (H - bottom + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << format_number(fx)
            << "</text>\n";
        out << "<text x=\"" << (left - 6) << "\" y=\"" << format_number(sy(fy) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_number(fy)
            << "</text>\n";
    }
    out << "<text x=\"" << (left + pw / 2) << "\" y=\"" << (H - 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(t.header[0])
        << "</text>\n";
    for (std::size_t s = 0; s < series.size() && x_numeric; ++s) {
        const char* colour = kColours[s % std::size(kColours)];
        std::string d;
        bool pen = false;
        for (const auto& r : t.rows) {
            const double x = std::get<double>(r[0]), y = std::get<double>(r[series[s]]);
            if (!std::isfinite(x) || !std::isfinite(y)) {
                pen = false;
                continue;
            }
            d += (pen ? " L" : " M") + format_number(sx(x)) + ' ' + format_number(sy(y));
            pen = true;
        }
        out << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n";
        const double ly = top + 16 + 18 * static_cast<double>(s);
        out << "<line x1=\"" << (W - right + 10) << "\" y1=\"" << ly << "\" x2=\"" << (W - right + 30)
            << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << (W - right + 36) << "\" y=\"" << (ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(t.header[series[s]]) << "</text>\n";
    }
    out << "</svg>\n";
}

std::vector<std::size_t> parse_index_range(const std::string& text) {
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = parse_index(text.substr(0, dots)), hi = parse_index(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_index(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace conformal::cli
