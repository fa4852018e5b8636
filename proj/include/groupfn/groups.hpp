#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groupfn/minimality.hpp"
#include "groupfn/pwl.hpp"

namespace groupfn {

// A function on the cyclic group (1/N)Z/Z, given by its value vector.
struct FiniteGroupFunction {
    long N = 0;
    long f_index = 0;  // f = f_index/N, f_index in 1..N-1
    std::vector<Rational> values;

    const Rational& at(long i) const { return values[((i % N) + N) % N]; }
    Rational delta(long i, long j) const {
        return at(i) + at(j) - at(i + j);
    }
    friend bool operator==(const FiniteGroupFunction&,
                           const FiniteGroupFunction&) = default;
};

// Evidence for an extremality verdict: either the tight homogeneous system
// has only the zero solution, or a nonzero perturbation theta together with
// the decomposition h = (pi_plus + pi_minus)/2 into distinct minimal
// functions.
struct ExtremalityCertificate {
    bool extreme = false;
    std::optional<FiniteGroupFunction> perturbation;
    std::optional<std::pair<FiniteGroupFunction, FiniteGroupFunction>>
        decomposition;
};

// values[i] = pi(i/N); requires f*N integral (FNotInGroup otherwise).
FiniteGroupFunction restrict_to_finite_group(const PwlPeriodic& pi, long N);

// Piecewise linear extension through the sampled values, canonicalized.
PwlPeriodic interpolate_to_infinite_group(const FiniteGroupFunction& h);

// The Gomory conditions checked by exhaustive enumeration over the group.
MinimalityVerdict finite_minimality_test(const FiniteGroupFunction& h);

// Tight-additivity nullspace test.  h is extreme iff the homogeneous system
// theta(0) = theta(f) = 0, theta(x) + theta(y) = theta(x+y) for every
// additive pair, has only the zero solution.  Requires h minimal.
ExtremalityCertificate finite_extremality_test(const FiniteGroupFunction& h);

// Pullback along the canonical surjection C_N -> C_M (i mod M on indices);
// M must divide N.
FiniteGroupFunction pullback_to_refinement(const FiniteGroupFunction& h,
                                           long N);

// Extremality of a minimal PWL function with breakpoints in (1/q)Z, decided
// by the finite test on the 4q-refinement.
bool interpolation_extremality_test(const PwlPeriodic& pi);

namespace detail {
// Rational nullspace test for the tight system.  When certificate_needed is
// false, a full-rank verdict may be established by a (sound) modular rank
// computation; the perturbation vector, when one exists, is always computed
// by exact elimination with deterministic pivoting.
std::optional<std::vector<Rational>> tight_system_nullvector(
    const FiniteGroupFunction& h);
}  // namespace detail

}  // namespace groupfn
