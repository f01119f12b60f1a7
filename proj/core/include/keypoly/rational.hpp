#ifndef KEYPOLY_RATIONAL_HPP
#define KEYPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace keypoly {

/* Exact rational coefficients. mpq_class is always kept canonical
 * (gcd(num, den) = 1, den > 0), which the constructors below enforce. */
using Rational = mpq_class;
using Integer = mpz_class;

struct DegenerateCurve : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IrregularBranch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/* Signals a construction bug (e.g. an inexact division that the theory
 * says must be exact). */
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational rat(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/* Parses "p/q" or "p" (base 10). */
inline Rational rat_parse(const std::string & s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

/* Always "p/q" with q >= 1, matching the wire format. */
inline std::string rat_string(const Rational & q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign(const Rational & q) { return sgn(q); }
inline bool is_zero(const Rational & q) { return sgn(q) == 0; }

inline Rational pow_rat(const Rational & q, unsigned long e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

/* Is q the square of a rational? */
inline bool is_rational_square(const Rational & q)
{
    if (sgn(q) < 0)
        return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) &&
           mpz_perfect_square_p(q.get_den_mpz_t());
}

inline Rational sqrt_exact(const Rational & q)
{
    Rational r;
    mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/* Falling factorial j(j-1)...(j-i+1). */
inline Integer falling(long j, long i)
{
    Integer r = 1;
    for (long t = 0; t < i; t++)
        r *= (j - t);
    return r;
}

} // namespace keypoly

#endif
