#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupfn/pwl.hpp"

namespace groupfn {

// Exact segment data for one or more function graphs on [0,1]; coordinates
// stay rational until render time.
struct PlotDocument {
    struct Segment {
        Rational x0, y0, x1, y1;
    };
    struct Function {
        std::string label;
        std::string color;
        std::vector<Segment> segments;  // chained continuously
    };
    std::vector<Function> functions;
    std::optional<long> grid_marks;  // tick spacing 1/grid_marks, if set

    void add(const PwlPeriodic& pi, const std::string& label);

    std::string to_svg() const;  // decimal conversion at render time only
    std::string to_csv() const;  // rows "x0,y0,x1,y1,label", rational strings
};

}  // namespace groupfn
