#include "risq/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace risq {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v, const char* fmt = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string xml_escape(const std::string& s) {
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

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel,
                             const std::vector<Series>& series) {
    std::size_t total_points = 0;
    for (const Series& s : series) total_points += s.points.size();
    if (total_points == 0)
        throw std::invalid_argument("render_line_plot: no data points");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : series)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmin == xmax) { xmin -= 0.5; xmax += 0.5; }
    if (ymin == ymax) { ymin -= 0.5; ymax += 0.5; }

    const double w = 860, h = 520;
    const double ml = 72, mr = 24, mt = 48, mb = 56;
    const double pw = w - ml - mr, ph = h - mt - mb;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n"
        << "<text x=\"" << num(w / 2) << "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"16\" text-anchor=\"middle\">"
        << xml_escape(title) << "</text>\n";

    // Axes box and ticks.
    out << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        double fx = xmin + (xmax - xmin) * i / nticks;
        double px = sx(fx);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(mt + ph) << "\" x2=\""
            << num(px) << "\" y2=\"" << num(mt + ph + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(px) << "\" y=\"" << num(mt + ph + 20)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
            << num(fx, "%.6g") << "</text>\n";
        double fy = ymin + (ymax - ymin) * i / nticks;
        double py = sy(fy);
        out << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(py) << "\" x2=\""
            << num(ml) << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">"
            << num(fy, "%.6g") << "</text>\n";
    }
    out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(h - 12)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << xml_escape(xlabel) << "</text>\n"
        << "<text x=\"18\" y=\"" << num(mt + ph / 2)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 "
        << num(mt + ph / 2) << ")\">" << xml_escape(ylabel) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        if (series[i].points.size() > 1) {
            out << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t j = 0; j < series[i].points.size(); ++j) {
                auto [x, y] = series[i].points[j];
                out << (j ? " " : "") << num(sx(x)) << "," << num(sy(y));
            }
            out << "\"/>\n";
        }
        for (auto [x, y] : series[i].points)
            out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }

    // Legend, top right of the plot area.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        double ly = mt + 16 + 18 * static_cast<double>(i);
        out << "<line x1=\"" << num(ml + pw - 150) << "\" y1=\"" << num(ly) << "\" x2=\""
            << num(ml + pw - 126) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << num(ml + pw - 120) << "\" y=\"" << num(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << xml_escape(series[i].name) << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace risq
