#pragma once

#include <gmpxx.h>

#include <string>

namespace groupfn {

// All arithmetic in the library is exact. No floating point is used outside
// of SVG coordinate rendering.
using Integer = mpz_class;

// mpq_class with the numerator/denominator constructor canonicalized.
// mpq_class(2, 4) keeps 2/4 as stored, and equality comparison (mpq_equal)
// assumes canonical form, so the raw constructor is an easy source of wrong
// results.  GMP arithmetic preserves canonical form, so fixing construction
// fixes everything downstream.
class Rational : public mpq_class {
public:
    Rational() = default;
    Rational(const mpq_class& q) : mpq_class(q) {}
    Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}
    Rational(int n) : mpq_class(n) {}
    Rational(long n) : mpq_class(n) {}
    template <class N, class D>
    Rational(const N& num, const D& den) : mpq_class(num, den) {
        canonicalize();
    }
    using mpq_class::operator=;
};

// Parses "p/q" or "n" (optionally negative). Rejects anything else,
// in particular decimal and exponent notation.
Rational parse_rational(const std::string& s);

// Canonical "p/q" form; integers are printed without the "/1".
std::string to_string(const Rational& x);

Integer floor_int(const Rational& x);
Integer ceil_int(const Rational& x);

// x reduced modulo 1 into [0,1).
Rational frac_mod1(const Rational& x);

// {x}_{1/p}: the unique y in [0,1/p) with y == x (mod 1/p).
Rational frac_part(const Rational& x, const Integer& p);
// Nearest points of (1/p)Z below resp. above x.
Rational floor_grid(const Rational& x, const Integer& p);
Rational ceil_grid(const Rational& x, const Integer& p);

Integer lcm(const Integer& a, const Integer& b);

// True iff x*n is an integer.
bool on_grid(const Rational& x, const Integer& n);

}  // namespace groupfn
