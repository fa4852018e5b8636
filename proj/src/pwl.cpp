#include "groupfn/pwl.hpp"

#include <algorithm>
#include <set>

#include "groupfn/errors.hpp"

namespace groupfn {

PwlPeriodic PwlPeriodic::from_breakpoints(std::vector<Rational> breakpoints,
                                          std::vector<Rational> values,
                                          Rational f) {
    if (breakpoints.size() != values.size()) throw LengthMismatch();
    if (breakpoints.size() < 2) throw LengthMismatch("need at least 2 breakpoints");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw NotIncreasing("breakpoints must span [0,1]");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (breakpoints[i] >= breakpoints[i + 1]) throw NotIncreasing();
    if (values.front() != values.back())
        throw NotPeriodic("endpoint values differ");
    if (f <= 0 || f >= 1) throw FOutOfRange();

    // Merge interior breakpoints where the slope does not change.
    std::vector<Rational> b, v;
    b.push_back(breakpoints[0]);
    v.push_back(values[0]);
    for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
        const Rational sl = (values[i] - v.back()) / (breakpoints[i] - b.back());
        const Rational sr = (values[i + 1] - values[i]) /
                            (breakpoints[i + 1] - breakpoints[i]);
        if (sl != sr) {
            b.push_back(breakpoints[i]);
            v.push_back(values[i]);
        }
    }
    b.push_back(breakpoints.back());
    v.push_back(values.back());

    PwlPeriodic pi;
    pi.bkpts_ = std::move(b);
    pi.vals_ = std::move(v);
    pi.f_ = std::move(f);
    return pi;
}

Rational PwlPeriodic::evaluate(const Rational& x) const {
    const Rational t = frac_mod1(x);
    // First breakpoint > t; the containing segment starts just before it.
    auto it = std::upper_bound(bkpts_.begin(), bkpts_.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - bkpts_.begin()) - 1;
    if (bkpts_[k] == t) return vals_[k];
    return vals_[k] + segment_slope(k) * (t - bkpts_[k]);
}

Rational PwlPeriodic::segment_slope(std::size_t k) const {
    return (vals_[k + 1] - vals_[k]) / (bkpts_[k + 1] - bkpts_[k]);
}

Rational PwlPeriodic::slope_on(const Rational& x) const {
    const Rational t = frac_mod1(x);
    auto it = std::upper_bound(bkpts_.begin(), bkpts_.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - bkpts_.begin()) - 1;
    if (bkpts_[k] == t) throw AtBreakpoint();
    return segment_slope(k);
}

std::pair<Rational, Rational> PwlPeriodic::limiting_slopes() const {
    if (num_segments() < 2) throw DegenerateFunction();
    return {segment_slope(0), segment_slope(num_segments() - 1)};
}

std::vector<Rational> PwlPeriodic::slope_values() const {
    std::set<Rational> s;
    for (std::size_t k = 0; k < num_segments(); ++k) s.insert(segment_slope(k));
    return {s.begin(), s.end()};
}

bool PwlPeriodic::is_breakpoint(const Rational& x) const {
    const Rational t = frac_mod1(x);
    return std::binary_search(bkpts_.begin(), bkpts_.end(), t);
}

Integer PwlPeriodic::grid_denominator() const {
    Integer n = f_.get_den();
    for (const auto& b : bkpts_) n = lcm(n, b.get_den());
    return n;
}

Rational sup_norm_diff(const PwlPeriodic& a, const PwlPeriodic& b) {
    std::set<Rational> pts(a.breakpoints().begin(), a.breakpoints().end());
    pts.insert(b.breakpoints().begin(), b.breakpoints().end());
    Rational best = 0;
    for (const auto& x : pts) {
        Rational d = abs(a(x) - b(x));
        if (d > best) best = d;
    }
    return best;
}

PwlPeriodic convex_combination(const PwlPeriodic& a, const PwlPeriodic& b,
                               const Rational& t) {
    if (a.f() != b.f()) throw FOutOfRange("convex_combination: f differs");
    std::set<Rational> pts(a.breakpoints().begin(), a.breakpoints().end());
    pts.insert(b.breakpoints().begin(), b.breakpoints().end());
    std::vector<Rational> bk(pts.begin(), pts.end()), vals;
    vals.reserve(bk.size());
    for (const auto& x : bk) vals.push_back(t * a(x) + (1 - t) * b(x));
    return PwlPeriodic::from_breakpoints(std::move(bk), std::move(vals), a.f());
}

}  // namespace groupfn
