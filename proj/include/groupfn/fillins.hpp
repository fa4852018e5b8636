#pragma once

#include <optional>

#include "groupfn/groups.hpp"
#include "groupfn/pwl.hpp"

namespace groupfn {

// The computed data of the injective two-slope fill-in.
struct FillInParameters {
    long q = 0;        // base grid: breakpoints of pi lie in (1/q)Z
    Rational s_plus;   // pi'(0+), the most positive slope
    Rational s_minus;  // pi'(1-), the most negative slope
    long r = 0;        // grid refinement aligning f/2, (f+1)/2 and the 1/2-level set
    Rational delta;    // least positive grid slack on (1/(rq))Z
    Rational epsilon;  // requested approximation quality
    long m = 0;        // oversampling factor, m = r*n, m >= m_pi(epsilon)
    long n = 0;
    long D = 0;        // slope-ratio denominator: (pi'-s^-)/(s^+-s^-) in (1/D)Z
};

enum class CaseTag { CaseM, CaseW };

// Smallest positive r such that f/2, (f+1)/2 lie in (1/(rq))Z and every
// isolated solution of pi(x) = 1/2 lies in (1/(rq))Z.
long compute_r(const PwlPeriodic& pi, long q);

// Least positive subadditivity slack on the (1/(rq))-grid.
Rational compute_delta(const PwlPeriodic& pi, long r, long q);

// Smallest multiple of r that is >= 3(s^+ - s^-) / (4q min{3 eps, delta, 1}).
long compute_m(const PwlPeriodic& pi, const Rational& epsilon, long r, long q);

// Smallest positive D such that (pi'(x)-s^-)/(s^+-s^-) is an integer
// multiple of 1/D on every segment.
long compute_D(const PwlPeriodic& pi, long q);

// Lengths of the s^+ and s^- pieces of phi within the 1/(mq)-subinterval
// containing x; d_plus(x) + d_minus(x) = 1/(mq).
Rational d_plus(const PwlPeriodic& pi, const Rational& x, long mq);
Rational d_minus(const PwlPeriodic& pi, const Rational& x, long mq);

// CaseM: pi(x) < 1/2, or pi(x) = 1/2 with {x} outside [f/2, (f+1)/2].
// CaseW: the complement.
CaseTag classify_case(const PwlPeriodic& pi, const Rational& x);

struct FillInResult {
    PwlPeriodic phi;
    FillInParameters params;
};

// The injective two-slope fill-in: a two-slope extreme function phi with
// breakpoints in (1/(Dmq))Z, ||phi - pi||_inf <= epsilon, and phi = pi on
// (1/(mq))Z.  All of these properties are machine-verified before returning.
FillInResult injective_2_slope_fill_in(const PwlPeriodic& pi,
                                       const Rational& epsilon,
                                       std::optional<long> m = std::nullopt);

// The classic Gomory--Johnson fill-in: pointwise minimum of the forward
// s^+-ray and the backward s^--ray on each group cell.  Subadditive and
// two-slope, but in general not symmetric.
PwlPeriodic two_slope_fill_in(const FiniteGroupFunction& h);

}  // namespace groupfn
