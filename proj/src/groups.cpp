#include "groupfn/groups.hpp"

#include <algorithm>
#include <cstdint>

#include "groupfn/errors.hpp"

namespace groupfn {

FiniteGroupFunction restrict_to_finite_group(const PwlPeriodic& pi, long N) {
    if (N < 2 || !on_grid(pi.f(), Integer(N)))
        throw FNotInGroup("f = " + groupfn::to_string(pi.f()) +
                          " not in (1/" + std::to_string(N) + ")Z");
    FiniteGroupFunction h;
    h.N = N;
    h.f_index = static_cast<long>(
        Rational(pi.f() * N).get_num().get_si());
    h.values.resize(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) h.values[i] = pi(Rational(i, N));
    return h;
}

PwlPeriodic interpolate_to_infinite_group(const FiniteGroupFunction& h) {
    std::vector<Rational> bk, vals;
    bk.reserve(h.N + 1);
    vals.reserve(h.N + 1);
    for (long i = 0; i <= h.N; ++i) {
        bk.emplace_back(i, h.N);
        vals.push_back(h.values[i % h.N]);
    }
    return PwlPeriodic::from_breakpoints(std::move(bk), std::move(vals),
                                         Rational(h.f_index, h.N));
}

MinimalityVerdict finite_minimality_test(const FiniteGroupFunction& h) {
    MinimalityVerdict v;
    const long N = h.N;
    for (long i = 0; i < N; ++i)
        if (h.values[i] < 0) {
            v.witness = Witness{Rational(i, N), Rational(0),
                                Condition::Nonneg, h.values[i]};
            return v;
        }
    if (h.values[0] != 0) {
        v.witness = Witness{Rational(0), Rational(0), Condition::Origin,
                            h.values[0]};
        return v;
    }
    if (h.values[h.f_index] != 1) {
        v.witness = Witness{Rational(h.f_index, N), Rational(0),
                            Condition::AtF, h.values[h.f_index]};
        return v;
    }
    for (long i = 0; i < N; ++i)
        for (long j = i; j < N; ++j) {
            Rational s = h.delta(i, j);
            if (s < 0) {
                v.witness = Witness{Rational(i, N), Rational(j, N),
                                    Condition::Subadd, s};
                return v;
            }
        }
    for (long i = 0; i < N; ++i) {
        Rational s = h.delta(i, h.f_index - i);
        if (s != 0) {
            v.witness = Witness{Rational(i, N),
                                Rational(((h.f_index - i) % N + N) % N, N),
                                Condition::Symmetry, s};
            return v;
        }
    }
    v.minimal = true;
    return v;
}

namespace {

// Sparse row of the tight homogeneous system, with integer coefficients.
struct SparseRow {
    // (column, coefficient), coefficient nonzero, columns strictly increasing
    std::vector<std::pair<long, long>> entries;
};

std::vector<SparseRow> tight_system_rows(const FiniteGroupFunction& h) {
    std::vector<SparseRow> rows;
    rows.push_back({{{0, 1}}});
    rows.push_back({{{h.f_index, 1}}});
    const long N = h.N;
    for (long i = 1; i < N; ++i)
        for (long j = i; j < N; ++j) {
            if (h.delta(i, j) != 0) continue;
            const long k = (i + j) % N;
            // theta(i) + theta(j) - theta(i+j) = 0, coefficients collected
            long c[3] = {i, j, k};
            long w[3] = {1, 1, -1};
            SparseRow row;
            for (int a = 0; a < 3; ++a) {
                bool merged = false;
                for (auto& e : row.entries)
                    if (e.first == c[a]) {
                        e.second += w[a];
                        merged = true;
                    }
                if (!merged) row.entries.push_back({c[a], w[a]});
            }
            std::erase_if(row.entries, [](const auto& e) { return e.second == 0; });
            std::sort(row.entries.begin(), row.entries.end());
            if (!row.entries.empty()) rows.push_back(std::move(row));
        }
    return rows;
}

// ---- modular full-rank fast path -------------------------------------

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// True iff the system has full column rank modulo kPrime.  Full modular rank
// implies full rational rank (some maximal minor has nonzero determinant).
bool full_rank_mod_p(const std::vector<SparseRow>& rows, long ncols) {
    std::vector<std::vector<std::uint64_t>> pivots;  // pivots[c]: row with pivot at c
    pivots.assign(ncols, {});
    long rank = 0;
    std::vector<std::uint64_t> work(ncols);
    for (const auto& row : rows) {
        std::fill(work.begin(), work.end(), 0);
        for (const auto& [c, w] : row.entries)
            work[c] = w >= 0 ? std::uint64_t(w) : kPrime - std::uint64_t(-w);
        for (long c = 0; c < ncols; ++c) {
            if (work[c] == 0) continue;
            if (pivots[c].empty()) {
                // normalize so the pivot is 1
                std::uint64_t inv = powmod(work[c], kPrime - 2);
                for (long d = c; d < ncols; ++d) work[d] = mulmod(work[d], inv);
                pivots[c] = work;
                ++rank;
                break;
            }
            std::uint64_t factor = work[c];
            for (long d = c; d < ncols; ++d) {
                std::uint64_t sub = mulmod(factor, pivots[c][d]);
                work[d] = work[d] >= sub ? work[d] - sub
                                         : work[d] + kPrime - sub;
            }
        }
        if (rank == ncols) return true;
    }
    return false;
}

// ---- exact rational elimination ---------------------------------------

// Reduced row echelon form over Q with deterministic pivoting (rows are
// processed in input order, pivot is the first nonzero column).  Returns the
// nullspace basis vector associated with the first free column, normalized
// to leading entry 1, or nullopt when the nullspace is trivial.
std::optional<std::vector<Rational>> exact_nullvector(
    const std::vector<SparseRow>& rows, long ncols) {
    std::vector<std::vector<Rational>> pivot_rows(ncols);  // indexed by pivot col
    std::vector<bool> has_pivot(ncols, false);
    long rank = 0;
    std::vector<Rational> work(ncols);
    for (const auto& row : rows) {
        std::fill(work.begin(), work.end(), Rational(0));
        for (const auto& [c, w] : row.entries) work[c] = w;
        long pivot = -1;
        for (long c = 0; c < ncols; ++c) {
            if (work[c] == 0) continue;
            if (!has_pivot[c]) {
                pivot = c;
                break;
            }
            const Rational factor = work[c];
            for (long d = c; d < ncols; ++d)
                if (pivot_rows[c][d] != 0) work[d] -= factor * pivot_rows[c][d];
        }
        if (pivot < 0) continue;
        const Rational inv = 1 / work[pivot];
        for (long d = pivot; d < ncols; ++d) work[d] *= inv;
        // keep the form fully reduced
        for (long c = 0; c < ncols; ++c)
            if (has_pivot[c] && pivot_rows[c][pivot] != 0) {
                const Rational factor = pivot_rows[c][pivot];
                for (long d = pivot; d < ncols; ++d)
                    pivot_rows[c][d] -= factor * work[d];
            }
        pivot_rows[pivot] = work;
        has_pivot[pivot] = true;
        if (++rank == ncols) return std::nullopt;
    }
    long free_col = -1;
    for (long c = 0; c < ncols; ++c)
        if (!has_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<Rational> theta(ncols, Rational(0));
    theta[free_col] = 1;
    for (long c = 0; c < ncols; ++c)
        if (has_pivot[c]) theta[c] = -pivot_rows[c][free_col];
    // normalize: first nonzero entry = 1
    for (long c = 0; c < ncols; ++c)
        if (theta[c] != 0) {
            const Rational inv = 1 / theta[c];
            for (long d = 0; d < ncols; ++d) theta[d] *= inv;
            break;
        }
    return theta;
}

}  // namespace

std::optional<std::vector<Rational>> detail::tight_system_nullvector(
    const FiniteGroupFunction& h) {
    const auto rows = tight_system_rows(h);
    if (full_rank_mod_p(rows, h.N)) return std::nullopt;
    return exact_nullvector(rows, h.N);
}

ExtremalityCertificate finite_extremality_test(const FiniteGroupFunction& h) {
    if (!finite_minimality_test(h).minimal)
        throw NotMinimal("finite_extremality_test requires a minimal input");
    ExtremalityCertificate cert;
    auto theta = detail::tight_system_nullvector(h);
    if (!theta) {
        cert.extreme = true;
        return cert;
    }
    const long N = h.N;
    const auto& t = *theta;
    auto tdelta = [&](long i, long j) -> Rational {
        return t[i % N] + t[j % N] - t[(i + j) % N];
    };
    // Largest eps keeping h +- eps*theta inside the minimality polytope,
    // halved for strict interiority.
    bool have = false;
    Rational bound;
    auto consider = [&](const Rational& r) {
        if (!have || r < bound) {
            bound = r;
            have = true;
        }
    };
    for (long i = 0; i < N; ++i)
        for (long j = i; j < N; ++j) {
            Rational dh = h.delta(i, j);
            if (dh <= 0) continue;
            Rational dt = tdelta(i, j);
            if (dt != 0) consider(dh / abs(dt));
        }
    for (long i = 0; i < N; ++i)
        if (h.values[i] > 0 && t[i] != 0) consider(h.values[i] / abs(t[i]));
    const Rational eps = have ? bound / 2 : Rational(1);

    FiniteGroupFunction pert{N, h.f_index, t};
    FiniteGroupFunction plus = h, minus = h;
    for (long i = 0; i < N; ++i) {
        plus.values[i] += eps * t[i];
        minus.values[i] -= eps * t[i];
    }
    if (plus == minus || !finite_minimality_test(plus).minimal ||
        !finite_minimality_test(minus).minimal)
        throw VerificationFailed("extremality certificate is inconsistent");
    cert.extreme = false;
    cert.perturbation = std::move(pert);
    cert.decomposition = {std::move(plus), std::move(minus)};
    return cert;
}

FiniteGroupFunction pullback_to_refinement(const FiniteGroupFunction& h,
                                           long N) {
    if (N <= 0 || N % h.N != 0) throw NotADivisor();
    if (h.f_index == 0) throw FInKernel();
    FiniteGroupFunction g;
    g.N = N;
    // smallest index mapping onto f under i -> i mod M
    g.f_index = h.f_index;
    g.values.resize(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) g.values[i] = h.values[i % h.N];
    return g;
}

bool interpolation_extremality_test(const PwlPeriodic& pi) {
    if (!minimality_test(pi).minimal)
        throw NotMinimal("interpolation_extremality_test requires minimality");
    const long q = static_cast<long>(pi.grid_denominator().get_si());
    return finite_extremality_test(restrict_to_finite_group(pi, 4 * q)).extreme;
}

}  // namespace groupfn
