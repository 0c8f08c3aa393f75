#ifndef GASYM_RATIONAL_HPP
#define GASYM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gasym/errors.hpp"

namespace gasym {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator), which is exactly the representation contract we need.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw division_by_zero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw error("rational does not fit in a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw division_by_zero();
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

inline Integer integer_lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Integer integer_gcd(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// "p/q" or "p"; used both by the expression parser and structured I/O.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw error("malformed rational literal: '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace gasym

#endif
