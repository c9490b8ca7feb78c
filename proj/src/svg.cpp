#include "bibnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bibnet/error.hpp"
#include "bibnet/format.hpp"

namespace bibnet {

namespace {

std::string num(double v) { return format_fixed(v, 2); }

std::string xml_escape(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c; break;
        }
    }
    return out;
}

void open_svg(std::ostringstream& out, int width, int height, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"14\">" << xml_escape(title) << "</text>\n";
}

struct Frame2D {
    double x0, y0, x1, y1; // pixel corners (y down)
    double lo_x, hi_x, lo_y, hi_y;

    double px(double x) const {
        if (hi_x == lo_x)
            return (x0 + x1) / 2;
        return x0 + (x - lo_x) / (hi_x - lo_x) * (x1 - x0);
    }
    double py(double y) const {
        if (hi_y == lo_y)
            return (y0 + y1) / 2;
        return y0 - (y - lo_y) / (hi_y - lo_y) * (y0 - y1);
    }
};

void draw_axes(std::ostringstream& out, const Frame2D& f, const std::string& x_label,
               const std::string& y_label) {
    out << "<line x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x1)
        << "\" y2=\"" << num(f.y0) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x0)
        << "\" y2=\"" << num(f.y1) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num((f.x0 + f.x1) / 2) << "\" y=\"" << num(f.y0 + 28)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << xml_escape(x_label) << "</text>\n"
        << "<text x=\"" << num(f.x0 - 30) << "\" y=\"" << num((f.y0 + f.y1) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-90 "
        << num(f.x0 - 30) << " " << num((f.y0 + f.y1) / 2) << ")\">" << xml_escape(y_label)
        << "</text>\n";
}

void axis_ticks(std::ostringstream& out, const Frame2D& f, bool integral_x) {
    // min and max tick on each axis is enough for orientation
    auto tick = [&](double px, double py, const std::string& label, bool on_x) {
        if (on_x)
            out << "<text x=\"" << num(px) << "\" y=\"" << num(py + 14)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">" << label
                << "</text>\n";
        else
            out << "<text x=\"" << num(px - 4) << "\" y=\"" << num(py + 3)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" << label
                << "</text>\n";
    };
    auto fmt = [&](double v, bool integral) {
        return integral ? std::to_string(static_cast<long>(std::llround(v)))
                        : format_fixed(v, 2);
    };
    tick(f.x0, f.y0, fmt(f.lo_x, integral_x), true);
    tick(f.x1, f.y0, fmt(f.hi_x, integral_x), true);
    tick(f.x0, f.y0, fmt(f.lo_y, integral_x), false);
    tick(f.x0, f.y1, fmt(f.hi_y, integral_x), false);
}

} // namespace

std::string svg_histogram(const DegreeDistribution& dist, const std::string& title) {
    if (dist.histogram.empty())
        throw DataError("histogram: empty data");
    const int width = 640, height = 420;
    std::ostringstream out;
    open_svg(out, width, height, title);

    long max_count = 0;
    for (const auto& [degree, count] : dist.histogram)
        max_count = std::max(max_count, count);

    Frame2D f{60, 370, 600, 40,
              0, static_cast<double>(dist.histogram.size()),
              0, static_cast<double>(max_count)};
    draw_axes(out, f, "degree", "nodes");

    const double slot = (f.x1 - f.x0) / static_cast<double>(dist.histogram.size());
    const double bar = std::max(1.0, slot * 0.8);
    std::size_t i = 0;
    for (const auto& [degree, count] : dist.histogram) {
        double x = f.x0 + slot * static_cast<double>(i) + (slot - bar) / 2;
        double top = f.py(static_cast<double>(count));
        out << "<rect x=\"" << num(x) << "\" y=\"" << num(top) << "\" width=\"" << num(bar)
            << "\" height=\"" << num(f.y0 - top) << "\" fill=\"steelblue\"/>\n"
            << "<text x=\"" << num(x + bar / 2) << "\" y=\"" << num(f.y0 + 14)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">" << degree
            << "</text>\n";
        ++i;
    }
    out << "<text x=\"" << num(f.x0 - 8) << "\" y=\"" << num(f.py(max_count) + 3)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" << max_count
        << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

std::string svg_loglog(const DegreeDistribution& dist, const std::string& title) {
    if (dist.loglog.empty())
        throw DataError("loglog plot: empty data");
    const int width = 640, height = 420;
    std::ostringstream out;
    open_svg(out, width, height, title);

    double lo_x = dist.loglog[0].first, hi_x = lo_x;
    double lo_y = dist.loglog[0].second, hi_y = lo_y;
    for (const auto& [x, y] : dist.loglog) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    Frame2D f{60, 370, 600, 40, lo_x, hi_x, lo_y, hi_y};
    draw_axes(out, f, "ln(degree)", "ln(count)");
    axis_ticks(out, f, false);
    for (const auto& [x, y] : dist.loglog)
        out << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
            << "\" r=\"3\" fill=\"firebrick\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string svg_scatter_matrix(const std::vector<ScatterPair>& pairs, const std::string& title) {
    if (pairs.empty())
        throw DataError("scatter matrix: empty data");
    for (const auto& pair : pairs)
        if (pair.points.empty())
            throw DataError("scatter matrix: empty panel " + pair.x_name + "/" + pair.y_name);

    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(pairs.size()))));
    const int rows = static_cast<int>((pairs.size() + static_cast<std::size_t>(cols) - 1) /
                                      static_cast<std::size_t>(cols));
    const int panel = 190, pad = 36;
    const int width = pad + cols * panel + pad;
    const int height = pad + rows * panel + pad;
    std::ostringstream out;
    open_svg(out, width, height, title);

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& pair = pairs[p];
        const int r = static_cast<int>(p) / cols;
        const int c = static_cast<int>(p) % cols;
        const double px0 = pad + c * panel + 28;
        const double py0 = pad + r * panel + panel - 28;
        const double px1 = pad + (c + 1) * panel - 8;
        const double py1 = pad + r * panel + 16;

        double lo_x = pair.points[0].first, hi_x = lo_x;
        double lo_y = pair.points[0].second, hi_y = lo_y;
        for (const auto& [x, y] : pair.points) {
            lo_x = std::min(lo_x, x);
            hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y);
            hi_y = std::max(hi_y, y);
        }
        Frame2D f{px0, py0, px1, py1, lo_x, hi_x, lo_y, hi_y};
        out << "<rect x=\"" << num(px0) << "\" y=\"" << num(py1) << "\" width=\""
            << num(px1 - px0) << "\" height=\"" << num(py0 - py1)
            << "\" fill=\"none\" stroke=\"gray\"/>\n";
        std::string label = pair.x_name + " vs " + pair.y_name +
                            (pair.degenerate_x || pair.degenerate_y ? " (degenerate)" : "");
        out << "<text x=\"" << num((px0 + px1) / 2) << "\" y=\"" << num(py1 - 4)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">"
            << xml_escape(label) << "</text>\n";
        for (const auto& [x, y] : pair.points)
            out << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
                << "\" r=\"2\" fill=\"steelblue\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bibnet
