#include "groupfn/minimality.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "groupfn/errors.hpp"

namespace groupfn {

std::string to_string(Condition c) {
    switch (c) {
        case Condition::Nonneg: return "Nonneg";
        case Condition::Origin: return "Origin";
        case Condition::AtF: return "AtF";
        case Condition::Subadd: return "Subadd";
        case Condition::Symmetry: return "Symmetry";
    }
    return "?";
}

Rational delta_pi(const PwlPeriodic& pi, const Rational& x, const Rational& y) {
    return pi(x) + pi(y) - pi(x + y);
}

namespace detail {

std::vector<Rational> value_table(const PwlPeriodic& pi, long N) {
    const Integer n(N);
    for (const auto& b : pi.breakpoints())
        if (!on_grid(b, n))
            throw BreakpointsNotOnGrid("breakpoint " + groupfn::to_string(b) +
                                       " not in (1/" + std::to_string(N) + ")Z");
    std::vector<Rational> vals(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) vals[i] = pi(Rational(i, N));
    return vals;
}

}  // namespace detail

SlackGrid build_slack_grid(const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    SlackGrid g;
    g.N = N;
    g.slack.resize(static_cast<std::size_t>(N) * N);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            g.slack[i * N + j] = vals[i] + vals[j] - vals[(i + j) % N];
    return g;
}

namespace {

MinimalityVerdict subadd_result(const std::vector<Rational>& vals, long N,
                                long vi, long vj) {
    MinimalityVerdict v;
    if (vi < 0) {
        v.minimal = true;
        return v;
    }
    v.minimal = false;
    v.witness = Witness{Rational(vi, N), Rational(vj, N), Condition::Subadd,
                        vals[vi] + vals[vj] - vals[(vi + vj) % N]};
    return v;
}

}  // namespace

MinimalityVerdict subadditive_on_grid(const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    long best_i = -1, best_j = -1;
#pragma omp parallel
    {
        long loc_i = -1, loc_j = -1;
#pragma omp for schedule(dynamic, 16) nowait
        for (long i = 0; i < N; ++i) {
            if (loc_i >= 0 && i > loc_i) continue;
            for (long j = i; j < N; ++j) {
                if (vals[i] + vals[j] < vals[(i + j) % N]) {
                    loc_i = i;
                    loc_j = j;
                    break;
                }
            }
        }
#pragma omp critical
        {
            if (loc_i >= 0 &&
                (best_i < 0 || loc_i < best_i ||
                 (loc_i == best_i && loc_j < best_j))) {
                best_i = loc_i;
                best_j = loc_j;
            }
        }
    }
    return subadd_result(vals, N, best_i, best_j);
}

MinimalityVerdict serial::subadditive_on_grid(const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    for (long i = 0; i < N; ++i)
        for (long j = i; j < N; ++j)
            if (vals[i] + vals[j] < vals[(i + j) % N])
                return subadd_result(vals, N, i, j);
    return subadd_result(vals, N, -1, -1);
}

std::vector<std::pair<GridPoint, GridPoint>> additive_pairs(
    const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    std::vector<std::pair<GridPoint, GridPoint>> out;
#pragma omp parallel
    {
        std::vector<std::pair<GridPoint, GridPoint>> loc;
#pragma omp for schedule(dynamic, 16) nowait
        for (long i = 0; i < N; ++i)
            for (long j = i; j < N; ++j)
                if (vals[i] + vals[j] == vals[(i + j) % N])
                    loc.push_back({GridPoint{i, N}, GridPoint{j, N}});
#pragma omp critical
        out.insert(out.end(), loc.begin(), loc.end());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.index, a.second.index) <
               std::pair(b.first.index, b.second.index);
    });
    return out;
}

std::vector<std::pair<GridPoint, GridPoint>> serial::additive_pairs(
    const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    std::vector<std::pair<GridPoint, GridPoint>> out;
    for (long i = 0; i < N; ++i)
        for (long j = i; j < N; ++j)
            if (vals[i] + vals[j] == vals[(i + j) % N])
                out.push_back({GridPoint{i, N}, GridPoint{j, N}});
    return out;
}

Rational min_positive_slack(const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    bool found = false;
    Rational best;
#pragma omp parallel
    {
        bool loc_found = false;
        Rational loc_best;
#pragma omp for schedule(dynamic, 16) nowait
        for (long i = 0; i < N; ++i)
            for (long j = i; j < N; ++j) {
                Rational s = vals[i] + vals[j] - vals[(i + j) % N];
                if (s > 0 && (!loc_found || s < loc_best)) {
                    loc_found = true;
                    loc_best = s;
                }
            }
#pragma omp critical
        {
            if (loc_found && (!found || loc_best < best)) {
                found = true;
                best = loc_best;
            }
        }
    }
    if (!found) throw AllSlacksZero();
    return best;
}

Rational serial::min_positive_slack(const PwlPeriodic& pi, long N) {
    const auto vals = detail::value_table(pi, N);
    bool found = false;
    Rational best;
    for (long i = 0; i < N; ++i)
        for (long j = i; j < N; ++j) {
            Rational s = vals[i] + vals[j] - vals[(i + j) % N];
            if (s > 0 && (!found || s < best)) {
                found = true;
                best = s;
            }
        }
    if (!found) throw AllSlacksZero();
    return best;
}

MinimalityVerdict minimality_test(const PwlPeriodic& pi) {
    const Integer grid = pi.grid_denominator();
    const long N = static_cast<long>(grid.get_si());

    MinimalityVerdict v;
    // Nonnegativity: a PWL function is nonnegative iff it is at breakpoints.
    for (std::size_t k = 0; k < pi.breakpoints().size(); ++k) {
        if (pi.values()[k] < 0) {
            v.witness = Witness{pi.breakpoints()[k], Rational(0),
                                Condition::Nonneg, pi.values()[k]};
            return v;
        }
    }
    if (pi(Rational(0)) != 0) {
        v.witness = Witness{Rational(0), Rational(0), Condition::Origin,
                            pi(Rational(0))};
        return v;
    }
    if (pi(pi.f()) != 1) {
        v.witness =
            Witness{pi.f(), Rational(0), Condition::AtF, pi(pi.f())};
        return v;
    }
    MinimalityVerdict sub = subadditive_on_grid(pi, N);
    if (!sub.minimal) return sub;
    // Symmetry: Delta pi(x, f-x) = 0 on the grid certifies it globally,
    // since x -> pi(x) + pi(f-x) is PWL with breakpoints on the grid.
    const auto vals = detail::value_table(pi, N);
    const long fi = static_cast<long>(
        Rational(pi.f() * Rational(grid)).get_num().get_si());
    for (long i = 0; i < N; ++i) {
        const long j = ((fi - i) % N + N) % N;
        Rational s = vals[i] + vals[j] - vals[fi % N];
        if (s != 0) {
            v.witness = Witness{Rational(i, N), Rational(j, N),
                                Condition::Symmetry, s};
            return v;
        }
    }
    v.minimal = true;
    return v;
}

}  // namespace groupfn
