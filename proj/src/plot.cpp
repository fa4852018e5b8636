#include "groupfn/plot.hpp"

#include <algorithm>
#include <sstream>

namespace groupfn {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

}  // namespace

void PlotDocument::add(const PwlPeriodic& pi, const std::string& label) {
    Function fn;
    fn.label = label;
    fn.color = kPalette[functions.size() % (sizeof(kPalette) / sizeof(*kPalette))];
    const auto& b = pi.breakpoints();
    const auto& v = pi.values();
    for (std::size_t k = 0; k + 1 < b.size(); ++k)
        fn.segments.push_back({b[k], v[k], b[k + 1], v[k + 1]});
    functions.push_back(std::move(fn));
}

std::string PlotDocument::to_svg() const {
    Rational ymin(0), ymax(1);
    for (const auto& fn : functions)
        for (const auto& s : fn.segments) {
            ymin = std::min({ymin, s.y0, s.y1});
            ymax = std::max({ymax, s.y0, s.y1});
        }
    const double width = 640, height = 480, margin = 40;
    const double yspan = Rational(ymax - ymin).get_d();
    auto sx = [&](const Rational& x) {
        return margin + x.get_d() * (width - 2 * margin);
    };
    auto sy = [&](const Rational& y) {
        return height - margin -
               Rational(y - ymin).get_d() / (yspan > 0 ? yspan : 1.0) *
                   (height - 2 * margin);
    };
    std::ostringstream out;
    // 12 significant digits; rendering only, reported numbers stay rational
    out.precision(12);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "  <line x1=\"" << sx(Rational(0)) << "\" y1=\"" << sy(Rational(0))
        << "\" x2=\"" << sx(Rational(1)) << "\" y2=\"" << sy(Rational(0))
        << "\" stroke=\"#999\"/>\n";
    if (grid_marks) {
        for (long i = 0; i <= *grid_marks; ++i) {
            const double x = sx(Rational(i, *grid_marks));
            out << "  <line x1=\"" << x << "\" y1=\"" << sy(ymin) << "\" x2=\""
                << x << "\" y2=\"" << sy(ymax)
                << "\" stroke=\"#eee\"/>\n";
        }
    }
    for (const auto& fn : functions) {
        out << "  <polyline fill=\"none\" stroke=\"" << fn.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < fn.segments.size(); ++k) {
            const auto& s = fn.segments[k];
            if (k == 0) out << sx(s.x0) << "," << sy(s.y0) << " ";
            out << sx(s.x1) << "," << sy(s.y1) << " ";
        }
        out << "\"><title>" << fn.label << "</title></polyline>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string PlotDocument::to_csv() const {
    std::ostringstream out;
    out << "x0,y0,x1,y1,label\n";
    for (const auto& fn : functions)
        for (const auto& s : fn.segments)
            out << to_string(s.x0) << "," << to_string(s.y0) << ","
                << to_string(s.x1) << "," << to_string(s.y1) << "," << fn.label
                << "\n";
    return out.str();
}

}  // namespace groupfn
