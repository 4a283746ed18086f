#include "fbcd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fbcd {

namespace {

constexpr int W = 720, H = 480;
constexpr int ML = 70, MR = 20, MT = 40, MB = 50;  // margins

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double p = 0.03 * (hi - lo);
        lo -= p;
        hi += p;
    }
};

double sx(double x, const Range& r) { return ML + (x - r.lo) / (r.hi - r.lo) * (W - ML - MR); }
double sy(double y, const Range& r) { return H - MB - (y - r.lo) / (r.hi - r.lo) * (H - MT - MB); }

void axes(std::ostream& os, const Range& rx, const Range& ry, const std::string& title,
          const std::string& xlabel, const std::string& ylabel) {
    os << "<rect x='" << ML << "' y='" << MT << "' width='" << W - ML - MR << "' height='"
       << H - MT - MB << "' fill='none' stroke='black'/>\n";
    os << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<text x='" << W / 2 << "' y='" << H - 10 << "' text-anchor='middle' font-size='12'>"
       << xlabel << "</text>\n";
    os << "<text x='16' y='" << H / 2 << "' text-anchor='middle' font-size='12' transform='rotate(-90 16 "
       << H / 2 << ")'>" << ylabel << "</text>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = rx.lo + (rx.hi - rx.lo) * i / 5.0;
        const double fy = ry.lo + (ry.hi - ry.lo) * i / 5.0;
        os << "<text x='" << sx(fx, rx) << "' y='" << H - MB + 16
           << "' text-anchor='middle' font-size='10'>" << float(fx) << "</text>\n";
        os << "<text x='" << ML - 6 << "' y='" << sy(fy, ry) + 3
           << "' text-anchor='end' font-size='10'>" << float(fy) << "</text>\n";
    }
}

} // namespace

void write_svg_lines(std::ostream& os, const std::vector<SvgSeries>& series,
                     const std::string& title, const std::string& xlabel,
                     const std::string& ylabel) {
    Range rx, ry;
    for (const auto& s : series) {
        for (double v : s.x) rx.add(v);
        for (double v : s.y) ry.add(v);
    }
    rx.pad();
    ry.pad();
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    axes(os, rx, ry, title, xlabel, ylabel);
    int li = 0;
    for (const auto& s : series) {
        os << "<polyline fill='none' stroke='" << s.color << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            os << sx(s.x[i], rx) << ',' << sy(s.y[i], ry) << ' ';
        os << "'/>\n";
        os << "<text x='" << W - MR - 130 << "' y='" << MT + 16 + 16 * li << "' font-size='12' fill='"
           << s.color << "'>" << s.label << "</text>\n";
        ++li;
    }
    os << "</svg>\n";
}

void write_svg_heatmap(std::ostream& os, const std::vector<std::vector<int>>& cells,
                       const std::vector<std::string>& cell_names,
                       const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::string& title, const std::string& xlabel,
                       const std::string& ylabel) {
    static const char* palette[] = {"#4daf4a", "#e41a1c", "#999999", "#377eb8",
                                    "#ff7f00", "#984ea3", "#a65628"};
    const std::size_t nx = xs.size(), ny = ys.size();
    const double cw = double(W - ML - MR) / double(nx);
    const double ch = double(H - MT - MB) / double(ny);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    os << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<text x='" << W / 2 << "' y='" << H - 10 << "' text-anchor='middle' font-size='12'>"
       << xlabel << "</text>\n";
    os << "<text x='16' y='" << H / 2 << "' text-anchor='middle' font-size='12' transform='rotate(-90 16 "
       << H / 2 << ")'>" << ylabel << "</text>\n";
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const int v = cells[j][i];
            const char* col = (v >= 0 && v < 7) ? palette[v] : "#000000";
            os << "<rect x='" << ML + cw * double(i) << "' y='" << (H - MB - ch * double(j + 1))
               << "' width='" << cw << "' height='" << ch << "' fill='" << col
               << "' stroke='white'/>\n";
        }
    }
    for (std::size_t i = 0; i < nx; ++i)
        os << "<text x='" << ML + cw * (double(i) + 0.5) << "' y='" << H - MB + 16
           << "' text-anchor='middle' font-size='10'>" << float(xs[i]) << "</text>\n";
    for (std::size_t j = 0; j < ny; ++j)
        os << "<text x='" << ML - 6 << "' y='" << (H - MB - ch * (double(j) + 0.5)) + 3
           << "' text-anchor='end' font-size='10'>" << float(ys[j]) << "</text>\n";
    for (std::size_t v = 0; v < cell_names.size() && v < 7; ++v)
        os << "<text x='" << W - MR - 150 << "' y='" << MT + 16 * double(v + 1) << "' font-size='12' fill='"
           << palette[v] << "'>" << cell_names[v] << "</text>\n";
    os << "</svg>\n";
}

} // namespace fbcd
