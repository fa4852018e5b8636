#include "groupfn/catalog.hpp"

#include <random>
#include <vector>

#include "groupfn/errors.hpp"
#include "groupfn/groups.hpp"
#include "groupfn/minimality.hpp"

namespace groupfn {

PwlPeriodic gmic(const Rational& f) {
    if (f <= 0 || f >= 1) throw ParamOutOfRange("gmic: f must be in (0,1)");
    return PwlPeriodic::from_breakpoints({Rational(0), f, Rational(1)},
                                         {Rational(0), Rational(1), Rational(0)},
                                         f);
}

PwlPeriodic gj_2_slope(const Rational& f, const Rational& lam) {
    if (f <= 0 || f >= 1) throw ParamOutOfRange("gj_2_slope: f must be in (0,1)");
    if (lam <= 0 || lam > 1)
        throw ParamOutOfRange("gj_2_slope: lambda must be in (0,1]");
    if (lam == 1) return gmic(f);  // middle segment collapses to a single rise
    // s^- = -1/(1-f) on the middle and final segments; the value at the
    // first interior breakpoint follows from the symmetry condition.
    const Rational v1 = (1 + f * lam / (1 - f)) / 2;
    const Rational v2 = 1 - v1;
    PwlPeriodic pi = PwlPeriodic::from_breakpoints(
        {Rational(0), f * (1 - lam) / 2, f * (1 + lam) / 2, f, Rational(1)},
        {Rational(0), v1, v2, Rational(1), Rational(0)}, f);
    if (!minimality_test(pi).minimal)
        throw ParamOutOfRange("gj_2_slope: parameters give a non-minimal function");
    return pi;
}

namespace {

// All gj_2_slope instances whose breakpoint grid fits in (1/q_max)Z.
std::vector<PwlPeriodic> corpus_seeds(long q_max) {
    static const long lam_dens[] = {1, 2, 3, 4, 5};
    std::vector<PwlPeriodic> out;
    for (long b = 2; b <= q_max; ++b)
        for (long a = 1; a < b; ++a) {
            const Rational f(a, b);
            for (long ld : lam_dens)
                for (long ln = 1; ln < ld || (ld == 1 && ln == 1); ++ln) {
                    try {
                        PwlPeriodic pi = gj_2_slope(f, Rational(ln, ld));
                        if (pi.grid_denominator() <= q_max) out.push_back(pi);
                    } catch (const ParamOutOfRange&) {
                    }
                }
        }
    return out;
}

}  // namespace

PwlPeriodic random_minimal(std::uint64_t seed, long q_max) {
    if (q_max < 2) throw ParamOutOfRange("random_minimal: q_max must be >= 2");
    std::mt19937_64 rng(seed);
    const auto seeds = corpus_seeds(q_max);
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    PwlPeriodic pi = seeds[pick(seeds.size())];

    // Coarsen: restrict to a random admissible group and re-interpolate.
    // The result stays minimal but is in general no longer extreme.
    if (pick(2) == 0) {
        std::vector<long> orders;
        for (long n = 2; n <= q_max; ++n)
            if (on_grid(pi.f(), Integer(n))) orders.push_back(n);
        if (!orders.empty()) {
            const long n = orders[pick(orders.size())];
            pi = interpolate_to_infinite_group(restrict_to_finite_group(pi, n));
        }
    }

    // Average with another minimal function with the same f; convex
    // combinations of minimal functions are minimal.
    if (pick(2) == 0) {
        std::vector<const PwlPeriodic*> mates;
        const Integer q = pi.grid_denominator();
        for (const auto& other : seeds)
            if (other.f() == pi.f() && lcm(q, other.grid_denominator()) <= q_max)
                mates.push_back(&other);
        if (!mates.empty())
            pi = convex_combination(pi, *mates[pick(mates.size())], Rational(1, 2));
    }
    return pi;
}

}  // namespace groupfn
