#include "groupfn/rational.hpp"

#include <cctype>

#include "groupfn/errors.hpp"

namespace groupfn {

Rational parse_rational(const std::string& s) {
    // Accepted grammar: -?digits(/digits)?
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw ParseError("not a rational: \"" + s + "\"");
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("not a rational: \"" + s + "\"");
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size())
            throw ParseError("not a rational: \"" + s + "\"");
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("not a rational: \"" + s + "\"");
    if (q.get_den() == 0) throw ParseError("zero denominator: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer floor_int(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Integer ceil_int(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rational frac_mod1(const Rational& x) { return x - Rational(floor_int(x)); }

Rational frac_part(const Rational& x, const Integer& p) {
    Rational xp = x * Rational(p);
    return (xp - Rational(floor_int(xp))) / Rational(p);
}

Rational floor_grid(const Rational& x, const Integer& p) {
    return Rational(floor_int(x * Rational(p))) / Rational(p);
}

Rational ceil_grid(const Rational& x, const Integer& p) {
    return Rational(ceil_int(x * Rational(p))) / Rational(p);
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool on_grid(const Rational& x, const Integer& n) {
    Rational y = x * Rational(n);
    return y.get_den() == 1;
}

}  // namespace groupfn
