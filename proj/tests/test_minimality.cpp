#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupfn/catalog.hpp"
#include "groupfn/errors.hpp"
#include "groupfn/minimality.hpp"

using namespace groupfn;

namespace {

Rational random_rational(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(-3 * q, 3 * q);
    return Rational(num(rng), q);
}

}  // namespace

TEST_CASE("subadditivity slack basics") {
    const PwlPeriodic pi = gmic(Rational(1, 2));
    CHECK(delta_pi(pi, Rational(1, 4), Rational(1, 4)) == 0);
    CHECK(delta_pi(pi, Rational(1, 4), Rational(3, 4)) == 1);
    CHECK(delta_pi(pi, Rational(0), Rational(1, 3)) == 0);
    // translation invariance in each argument mod 1
    CHECK(delta_pi(pi, Rational(5, 4), Rational(1, 4)) ==
          delta_pi(pi, Rational(1, 4), Rational(1, 4)));
    CHECK(delta_pi(pi, Rational(1, 4), Rational(-3, 4)) ==
          delta_pi(pi, Rational(1, 4), Rational(1, 4)));
}

TEST_CASE("slack grid is symmetric in its arguments") {
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    const SlackGrid g = build_slack_grid(pi, 12);
    for (long i = 0; i < 12; ++i)
        for (long j = 0; j < 12; ++j) {
            CHECK(g.at(i, j) == g.at(j, i));
            CHECK(g.at(i, j) ==
                  delta_pi(pi, Rational(i, 12), Rational(j, 12)));
        }
}

TEST_CASE("grid subadditivity certifies global subadditivity") {
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    CHECK(subadditive_on_grid(pi, 6).minimal);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 1000; ++k) {
        const Rational x = random_rational(rng, 97);
        const Rational y = random_rational(rng, 89);
        CHECK(delta_pi(pi, x, y) >= 0);
    }
}

TEST_CASE("grid soundness across a corpus of minimal functions") {
    std::mt19937_64 rng(12345);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PwlPeriodic pi = random_minimal(seed, 8);
        REQUIRE(minimality_test(pi).minimal);
        for (int k = 0; k < 20; ++k) {
            const Rational x = random_rational(rng, 64);
            const Rational y = random_rational(rng, 81);
            CHECK(delta_pi(pi, x, y) >= 0);
        }
    }
}

TEST_CASE("subadditivity witness is the lexicographically least violation") {
    // convex dip before the peak: pi(1/4)+pi(1/4) < pi(1/2)
    const PwlPeriodic bad = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)},
        {Rational(0), Rational(1, 4), Rational(1), Rational(0)},
        Rational(1, 2));
    const MinimalityVerdict v = subadditive_on_grid(bad, 4);
    REQUIRE(!v.minimal);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->condition == Condition::Subadd);
    CHECK(v.witness->x == Rational(1, 4));
    CHECK(v.witness->y == Rational(1, 4));
    CHECK(v.witness->slack == Rational(-1, 2));
    CHECK(delta_pi(bad, v.witness->x, v.witness->y) == v.witness->slack);
}

TEST_CASE("serial and parallel kernels agree") {
    const PwlPeriodic good = gj_2_slope(Rational(2, 5), Rational(1, 4));
    const long N = static_cast<long>(good.grid_denominator().get_si());
    const auto vp = subadditive_on_grid(good, N);
    const auto vs = serial::subadditive_on_grid(good, N);
    CHECK(vp.minimal == vs.minimal);
    CHECK(additive_pairs(good, N) == serial::additive_pairs(good, N));
    CHECK(min_positive_slack(good, N) == serial::min_positive_slack(good, N));

    const PwlPeriodic bad = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)},
        {Rational(0), Rational(1, 4), Rational(1), Rational(0)},
        Rational(1, 2));
    const auto bp = subadditive_on_grid(bad, 8);
    const auto bs = serial::subadditive_on_grid(bad, 8);
    REQUIRE((!bp.minimal && !bs.minimal));
    CHECK(bp.witness->x == bs.witness->x);
    CHECK(bp.witness->y == bs.witness->y);
    CHECK(bp.witness->slack == bs.witness->slack);
}

TEST_CASE("additive pairs are sorted and exactly the zero-slack pairs") {
    const PwlPeriodic pi = gmic(Rational(1, 2));
    const auto pairs = additive_pairs(pi, 4);
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k)
        CHECK(std::pair(pairs[k].first.index, pairs[k].second.index) <
              std::pair(pairs[k + 1].first.index, pairs[k + 1].second.index));
    for (const auto& [a, b] : pairs) {
        CHECK(a.modulus == 4);
        CHECK(delta_pi(pi, a.value(), b.value()) == 0);
        CHECK(a.index <= b.index);
    }
    // (1/4,1/4) is additive, (1/4,3/4) is not
    CHECK(std::find(pairs.begin(), pairs.end(),
                    std::make_pair(GridPoint{1, 4}, GridPoint{1, 4})) !=
          pairs.end());
    CHECK(std::find(pairs.begin(), pairs.end(),
                    std::make_pair(GridPoint{1, 4}, GridPoint{3, 4})) ==
          pairs.end());
}

TEST_CASE("least positive slack") {
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    CHECK(min_positive_slack(pi, 6) == 1);
    // the minimum over the slack grid, cross-checked entry by entry
    const SlackGrid g = build_slack_grid(pi, 12);
    Rational expect;
    bool seen = false;
    for (const auto& s : g.slack)
        if (s > 0 && (!seen || s < expect)) {
            seen = true;
            expect = s;
        }
    REQUIRE(seen);
    CHECK(min_positive_slack(pi, 12) == expect);
    // the zero function is additive everywhere, so no positive slack exists
    const PwlPeriodic zero = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1)}, {Rational(0), Rational(0)},
        Rational(1, 2));
    CHECK_THROWS_AS(min_positive_slack(zero, 2), AllSlacksZero);
}

TEST_CASE("full minimality test") {
    CHECK(minimality_test(gmic(Rational(1, 2))).minimal);
    CHECK(minimality_test(gmic(Rational(3, 7))).minimal);
    CHECK(minimality_test(gj_2_slope(Rational(1, 2), Rational(1, 3))).minimal);

    // violates symmetry: subadditive sawtooth with pi(f) = 1 but
    // pi(x) + pi(f-x) > 1 off the peak
    const PwlPeriodic asym = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
         Rational(1)},
        {Rational(0), Rational(3, 4), Rational(1), Rational(3, 4),
         Rational(0)},
        Rational(1, 2));
    const MinimalityVerdict v = minimality_test(asym);
    REQUIRE(!v.minimal);
    CHECK(v.witness->condition == Condition::Symmetry);

    // violates pi(f)=1
    const PwlPeriodic notone = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1, 2), Rational(1)},
        {Rational(0), Rational(1, 2), Rational(0)}, Rational(1, 2));
    const MinimalityVerdict v2 = minimality_test(notone);
    REQUIRE(!v2.minimal);
    CHECK(v2.witness->condition == Condition::AtF);

    // negative value
    const PwlPeriodic neg = PwlPeriodic::from_breakpoints(
        {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)},
        {Rational(0), Rational(-1, 4), Rational(1), Rational(0)},
        Rational(1, 2));
    const MinimalityVerdict v3 = minimality_test(neg);
    REQUIRE(!v3.minimal);
    CHECK(v3.witness->condition == Condition::Nonneg);
}

TEST_CASE("minimal functions are symmetric at arbitrary rationals") {
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    std::mt19937_64 rng(99);
    for (int k = 0; k < 200; ++k) {
        const Rational x = random_rational(rng, 120);
        CHECK(delta_pi(pi, x, pi.f() - x) == 0);
    }
}

TEST_CASE("value table requires breakpoints on the grid") {
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    CHECK_THROWS_AS(detail::value_table(pi, 4), BreakpointsNotOnGrid);
    CHECK(detail::value_table(pi, 6).size() == 6);
    CHECK_THROWS_AS(subadditive_on_grid(pi, 4), BreakpointsNotOnGrid);
}
