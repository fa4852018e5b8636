#pragma once

#include <cstdint>

#include "groupfn/pwl.hpp"

namespace groupfn {

// The Gomory--Johnson two-slope family.  Breakpoints
// [0, f(1-lam)/2, f(1+lam)/2, f, 1], negative slope -1/(1-f) on the middle
// and final segments, values determined by minimality.  lam = 1 degenerates
// to the single-rise gmic shape.
PwlPeriodic gj_2_slope(const Rational& f, const Rational& lam);

// Breakpoints [0, f, 1], values [0, 1, 0].
PwlPeriodic gmic(const Rational& f);

// Deterministic-from-seed minimal function with breakpoint denominators
// bounded by q_max.  Built from gj_2_slope instances via restriction,
// interpolation and averaging, all of which preserve minimality.
PwlPeriodic random_minimal(std::uint64_t seed, long q_max);

}  // namespace groupfn
