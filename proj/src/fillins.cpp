#include "groupfn/fillins.hpp"

#include <set>

#include "groupfn/errors.hpp"
#include "groupfn/minimality.hpp"

namespace groupfn {

namespace {

const Rational kHalf(1, 2);

// Smallest positive r with r*q*x integral.
long required_refinement(const Rational& x, long q) {
    Integer d = x.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), Integer(q).get_mpz_t());
    return static_cast<long>(Integer(d / g).get_si());
}

}  // namespace

long compute_r(const PwlPeriodic& pi, long q) {
    if (!minimality_test(pi).minimal) throw NotMinimal();
    Integer r(1);
    r = lcm(r, Integer(required_refinement(pi.f() / 2, q)));
    r = lcm(r, Integer(required_refinement((pi.f() + 1) / 2, q)));
    // Isolated solutions of pi(x) = 1/2.  Level-1/2 plateaus need no
    // refinement: their endpoints are breakpoints, already in (1/q)Z.
    const auto& bk = pi.breakpoints();
    const auto& vals = pi.values();
    for (std::size_t k = 0; k + 1 < bk.size(); ++k) {
        if (vals[k] == vals[k + 1]) continue;
        if ((vals[k] - kHalf) * (vals[k + 1] - kHalf) > 0) continue;
        const Rational s = pi.segment_slope(k);
        const Rational x = bk[k] + (kHalf - vals[k]) / s;
        r = lcm(r, Integer(required_refinement(x, q)));
    }
    return static_cast<long>(r.get_si());
}

Rational compute_delta(const PwlPeriodic& pi, long r, long q) {
    return min_positive_slack(pi, r * q);
}

long compute_m(const PwlPeriodic& pi, const Rational& epsilon, long r, long q) {
    if (epsilon <= 0) throw ParamOutOfRange("epsilon must be positive");
    const auto [s_plus, s_minus] = pi.limiting_slopes();
    const Rational delta = compute_delta(pi, r, q);
    Rational denom = 3 * epsilon;
    if (delta < denom) denom = delta;
    if (Rational(1) < denom) denom = 1;
    const Rational m_pi = 3 * (s_plus - s_minus) / (4 * q * denom);
    Integer n = ceil_int(m_pi / r);
    if (n < 1) n = 1;
    return static_cast<long>(Integer(n * r).get_si());
}

long compute_D(const PwlPeriodic& pi, long q) {
    (void)q;
    const auto [s_plus, s_minus] = pi.limiting_slopes();
    if (s_plus == s_minus) throw DegenerateFunction();
    Integer d(1);
    for (std::size_t k = 0; k < pi.num_segments(); ++k) {
        const Rational ratio = (pi.segment_slope(k) - s_minus) / (s_plus - s_minus);
        d = lcm(d, ratio.get_den());
    }
    return static_cast<long>(d.get_si());
}

Rational d_plus(const PwlPeriodic& pi, const Rational& x, long mq) {
    const auto [s_plus, s_minus] = pi.limiting_slopes();
    const Rational ratio = (pi.slope_on(x) - s_minus) / (s_plus - s_minus);
    return ratio / mq;
}

Rational d_minus(const PwlPeriodic& pi, const Rational& x, long mq) {
    return Rational(1, mq) - d_plus(pi, x, mq);
}

CaseTag classify_case(const PwlPeriodic& pi, const Rational& x) {
    const Rational v = pi(x);
    if (v < kHalf) return CaseTag::CaseM;
    if (v > kHalf) return CaseTag::CaseW;
    const Rational t = frac_mod1(x);
    const Rational lo = pi.f() / 2, hi = (pi.f() + 1) / 2;
    return (t >= lo && t <= hi) ? CaseTag::CaseW : CaseTag::CaseM;
}

FillInResult injective_2_slope_fill_in(const PwlPeriodic& pi,
                                       const Rational& epsilon,
                                       std::optional<long> m_opt) {
    if (epsilon <= 0) throw ParamOutOfRange("epsilon must be positive");
    if (!minimality_test(pi).minimal)
        throw NotMinimal("fill-in requires a minimal input");
    for (std::size_t k = 0; k + 1 < pi.breakpoints().size(); ++k)
        if (pi.breakpoints()[k] != 0 && pi.values()[k] == 0)
            throw StrictPositivityRequired(
                "pi vanishes at " + to_string(pi.breakpoints()[k]));

    FillInParameters p;
    p.q = static_cast<long>(pi.grid_denominator().get_si());
    std::tie(p.s_plus, p.s_minus) = pi.limiting_slopes();
    p.r = compute_r(pi, p.q);
    p.delta = compute_delta(pi, p.r, p.q);
    p.epsilon = epsilon;
    const long m_min = compute_m(pi, epsilon, p.r, p.q);
    if (m_opt) {
        if (*m_opt % p.r != 0 || *m_opt < m_min)
            throw BadM("m must be a multiple of r=" + std::to_string(p.r) +
                       " and at least " + std::to_string(m_min));
        p.m = *m_opt;
    } else {
        p.m = m_min;
    }
    p.n = p.m / p.r;
    p.D = compute_D(pi, p.q);

    const long mq = p.m * p.q;
    const Rational cell(1, mq);
    std::vector<Rational> bk, vals;
    bk.reserve(2 * mq + 1);
    vals.reserve(2 * mq + 1);
    for (long i = 0; i < mq; ++i) {
        const Rational g(i, mq);
        const Rational v0 = pi(g), v1 = pi(g + cell);
        bk.push_back(g);
        vals.push_back(v0);
        const Rational s = (v1 - v0) * mq;
        const Rational dp = (s - p.s_minus) / (p.s_plus - p.s_minus) / mq;
        if (dp == 0 || dp == cell) continue;  // pi already runs at s^- or s^+
        const Rational vmid = (v0 + v1) / 2;
        CaseTag tag;
        if (vmid < kHalf) {
            tag = CaseTag::CaseM;
        } else if (vmid > kHalf) {
            tag = CaseTag::CaseW;
        } else {
            tag = classify_case(pi, g + cell / 2);
        }
        if (tag == CaseTag::CaseM) {
            bk.push_back(g + dp);
            vals.push_back(v0 + p.s_plus * dp);
        } else {
            const Rational dm = cell - dp;
            bk.push_back(g + dm);
            vals.push_back(v0 + p.s_minus * dm);
        }
    }
    bk.emplace_back(1);
    vals.push_back(pi(Rational(0)));
    PwlPeriodic phi =
        PwlPeriodic::from_breakpoints(std::move(bk), std::move(vals), pi.f());

    // Machine-check the claimed properties before returning.
    const long dmq = p.D * mq;
    for (const auto& b : phi.breakpoints())
        if (!on_grid(b, Integer(dmq)))
            throw VerificationFailed("breakpoint off the (1/Dmq)-grid");
    const auto slopes = phi.slope_values();
    if (slopes.size() != 2 || slopes[0] != p.s_minus || slopes[1] != p.s_plus)
        throw VerificationFailed("phi is not a two-slope function");
    const Rational slope_gap_bound = (p.s_plus - p.s_minus) / (4 * mq);
    const Rational sup = sup_norm_diff(phi, pi);
    if (sup > epsilon || sup > slope_gap_bound)
        throw VerificationFailed("approximation bound violated");
    for (long i = 0; i < mq; ++i)
        if (phi(Rational(i, mq)) != pi(Rational(i, mq)))
            throw VerificationFailed("phi differs from pi on (1/mq)Z");
    if (!subadditive_on_grid(phi, dmq).minimal)
        throw VerificationFailed("phi is not subadditive");
    if (!minimality_test(phi).minimal)
        throw VerificationFailed("phi is not minimal");
    return {std::move(phi), std::move(p)};
}

PwlPeriodic two_slope_fill_in(const FiniteGroupFunction& h) {
    if (h.values[0] != 0) throw NotSubadditive("h(0) != 0");
    for (long i = 0; i < h.N; ++i)
        for (long j = i; j < h.N; ++j)
            if (h.delta(i, j) < 0) throw NotSubadditive();
    const PwlPeriodic interp = interpolate_to_infinite_group(h);
    const auto slopes = interp.slope_values();
    const Rational s_minus = slopes.front(), s_plus = slopes.back();
    if (s_plus == s_minus) return interp;

    const long N = h.N;
    const Rational cell(1, N);
    std::vector<Rational> bk, vals;
    for (long i = 0; i < N; ++i) {
        const Rational g(i, N);
        const Rational v0 = h.values[i], v1 = h.values[(i + 1) % N];
        bk.push_back(g);
        vals.push_back(v0);
        // crossover of the forward s^+ ray and the backward s^- ray
        const Rational t = (v1 - v0 - s_minus * cell) / (s_plus - s_minus);
        if (t > 0 && t < cell) {
            bk.push_back(g + t);
            vals.push_back(v0 + s_plus * t);
        }
    }
    bk.emplace_back(1);
    vals.push_back(h.values[0]);
    return PwlPeriodic::from_breakpoints(std::move(bk), std::move(vals),
                                         Rational(h.f_index, N));
}

}  // namespace groupfn
