#pragma once

#include <utility>
#include <vector>

#include "groupfn/rational.hpp"

namespace groupfn {

// A point i/N of the cyclic group (1/N)Z/Z.
struct GridPoint {
    long index;    // 0 <= index < modulus
    long modulus;  // N > 0

    Rational value() const { return Rational(index, modulus); }
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Continuous Z-periodic piecewise linear function on R/Z with rational
// breakpoints and values, stored on one period [0,1] with duplicated
// endpoint.  Canonical form: the slope changes at every interior breakpoint.
// Immutable after construction.
class PwlPeriodic {
public:
    // Validates and canonicalizes (merges collinear interior breakpoints).
    static PwlPeriodic from_breakpoints(std::vector<Rational> breakpoints,
                                        std::vector<Rational> values,
                                        Rational f);

    const std::vector<Rational>& breakpoints() const { return bkpts_; }
    const std::vector<Rational>& values() const { return vals_; }
    const Rational& f() const { return f_; }

    std::size_t num_segments() const { return bkpts_.size() - 1; }

    // Exact value by linear interpolation; x is reduced mod 1 first.
    Rational evaluate(const Rational& x) const;
    Rational operator()(const Rational& x) const { return evaluate(x); }

    // Derivative of the segment containing x; throws AtBreakpoint when x
    // (mod 1) is a breakpoint.
    Rational slope_on(const Rational& x) const;

    // Slope of segment k, i.e. on [breakpoints[k], breakpoints[k+1]].
    Rational segment_slope(std::size_t k) const;

    // (pi'(0+), pi'(1-)).  Throws DegenerateFunction for a constant function.
    std::pair<Rational, Rational> limiting_slopes() const;

    // The set of distinct segment slopes, sorted ascending.
    std::vector<Rational> slope_values() const;

    bool is_breakpoint(const Rational& x) const;

    // lcm of the denominators of all breakpoints and of f.
    Integer grid_denominator() const;

    friend bool operator==(const PwlPeriodic&, const PwlPeriodic&) = default;

private:
    PwlPeriodic() = default;
    std::vector<Rational> bkpts_;
    std::vector<Rational> vals_;
    Rational f_;
};

// Exact sup-norm of a-b over R/Z.  a-b is piecewise linear, so the maximum
// is attained at a breakpoint of the union refinement.
Rational sup_norm_diff(const PwlPeriodic& a, const PwlPeriodic& b);

// Pointwise t*a + (1-t)*b; requires a.f() == b.f().
PwlPeriodic convex_combination(const PwlPeriodic& a, const PwlPeriodic& b,
                               const Rational& t);

}  // namespace groupfn
