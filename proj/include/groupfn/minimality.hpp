#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupfn/pwl.hpp"

namespace groupfn {

// Which of the minimality conditions a witness violates.
enum class Condition { Nonneg, Origin, AtF, Subadd, Symmetry };

std::string to_string(Condition c);

struct Witness {
    Rational x;
    Rational y;
    Condition condition;
    Rational slack;  // the offending value, e.g. negative subadditivity slack
};

struct MinimalityVerdict {
    bool minimal = false;
    std::optional<Witness> witness;

    explicit operator bool() const { return minimal; }
};

// Subadditivity slack Delta pi(x,y) = pi(x) + pi(y) - pi(x+y).
Rational delta_pi(const PwlPeriodic& pi, const Rational& x, const Rational& y);

// N x N table of grid slacks; slack[i][j] = Delta pi(i/N, j/N).
struct SlackGrid {
    long N = 0;
    std::vector<Rational> slack;  // row-major, N*N entries

    const Rational& at(long i, long j) const { return slack[i * N + j]; }
};

SlackGrid build_slack_grid(const PwlPeriodic& pi, long N);

// Exhaustive grid subadditivity check.  Requires every breakpoint of pi to
// lie in (1/N)Z; for such pi grid nonnegativity is equivalent to global
// subadditivity.  On failure the witness is the lexicographically smallest
// violating pair.
MinimalityVerdict subadditive_on_grid(const PwlPeriodic& pi, long N);

// The Gomory minimality test: nonnegativity, pi(0)=0, pi(f)=1, grid
// subadditivity, grid symmetry.  Grid modulus is the lcm of the breakpoint
// and f denominators.
MinimalityVerdict minimality_test(const PwlPeriodic& pi);

// All grid pairs (i <= j) with exactly zero slack, in lexicographic order.
std::vector<std::pair<GridPoint, GridPoint>> additive_pairs(
    const PwlPeriodic& pi, long N);

// min { Delta pi(x,y) | x,y in (1/N)Z, Delta pi(x,y) > 0 }.
Rational min_positive_slack(const PwlPeriodic& pi, long N);

// Serial reference implementations of the grid kernels, kept for testing the
// OpenMP versions above against.
namespace serial {
MinimalityVerdict subadditive_on_grid(const PwlPeriodic& pi, long N);
std::vector<std::pair<GridPoint, GridPoint>> additive_pairs(
    const PwlPeriodic& pi, long N);
Rational min_positive_slack(const PwlPeriodic& pi, long N);
}  // namespace serial

namespace detail {
// Values pi(i/N) for i = 0..N-1; throws BreakpointsNotOnGrid if some
// breakpoint is off the grid.
std::vector<Rational> value_table(const PwlPeriodic& pi, long N);
}  // namespace detail

}  // namespace groupfn
