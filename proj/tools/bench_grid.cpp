// Compares the OpenMP grid kernels against their serial reference
// implementations on progressively finer grids, asserting identical results.
#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "groupfn/catalog.hpp"
#include "groupfn/minimality.hpp"

using namespace groupfn;

namespace {

template <typename F>
double time_it(F&& fn) {
    const double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void bench(const PwlPeriodic& pi, long N) {
    MinimalityVerdict vp, vs;
    const double tp = time_it([&] { vp = subadditive_on_grid(pi, N); });
    const double ts = time_it([&] { vs = serial::subadditive_on_grid(pi, N); });
    if (vp.minimal != vs.minimal) {
        std::fprintf(stderr, "subadditive_on_grid mismatch at N=%ld\n", N);
        std::exit(1);
    }
    Rational mp, ms;
    const double tp2 = time_it([&] { mp = min_positive_slack(pi, N); });
    const double ts2 = time_it([&] { ms = serial::min_positive_slack(pi, N); });
    if (mp != ms) {
        std::fprintf(stderr, "min_positive_slack mismatch at N=%ld\n", N);
        std::exit(1);
    }
    std::printf("N=%6ld  subadd  parallel %8.3fs  serial %8.3fs  speedup %5.2fx\n",
                N, tp, ts, ts / (tp > 0 ? tp : 1e-12));
    std::printf("N=%6ld  slack   parallel %8.3fs  serial %8.3fs  speedup %5.2fx\n",
                N, tp2, ts2, ts2 / (tp2 > 0 ? tp2 : 1e-12));
}

}  // namespace

int main(int argc, char** argv) {
    const long max_n = argc > 1 ? std::atol(argv[1]) : 1440;
    const PwlPeriodic pi = gj_2_slope(Rational(1, 2), Rational(1, 3));
    std::printf("threads: %d\n", omp_get_max_threads());
    for (long N = 96; N <= max_n; N *= 2) bench(pi, N);
    std::puts("results identical across serial and parallel kernels");
    return 0;
}
