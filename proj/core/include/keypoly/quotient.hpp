#ifndef KEYPOLY_QUOTIENT_HPP
#define KEYPOLY_QUOTIENT_HPP

#include "keypoly/ratfunc.hpp"
#include "keypoly/unipoly.hpp"

#include <memory>

namespace keypoly {

/* Element of E[s] / (s^2 - g) for a coefficient ring E: represented
 * as even + odd*s with the reduction s^2 -> g applied eagerly, so the
 * representative is unique. Used with E = Q[x] (g = x^2 - x for the
 * n = 2 radical identity) and E = Q(x) (g = f(x, lambda0) for the
 * quotient-ring Wronskian oracle, where s plays the role of y). */
template <typename E>
struct QuotientElem {
    E even, odd;
    E modulus; // g, with s^2 = g

    QuotientElem(E g) : even(0), odd(0), modulus(std::move(g)) {}
    QuotientElem(E ev, E od, E g)
        : even(std::move(ev)), odd(std::move(od)), modulus(std::move(g)) {}

    static QuotientElem scalar(E v, E g) { return QuotientElem(std::move(v), E(0), std::move(g)); }
    static QuotientElem s_unit(E g) { return QuotientElem(E(0), E(1), std::move(g)); }

    bool is_zero() const { return keypoly::is_zero(even) && keypoly::is_zero(odd); }

    friend QuotientElem operator+(const QuotientElem & a, const QuotientElem & b)
    {
        return QuotientElem(a.even + b.even, a.odd + b.odd, a.modulus);
    }
    friend QuotientElem operator-(const QuotientElem & a, const QuotientElem & b)
    {
        return QuotientElem(a.even - b.even, a.odd - b.odd, a.modulus);
    }
    friend QuotientElem operator*(const QuotientElem & a, const QuotientElem & b)
    {
        // (a0 + a1 s)(b0 + b1 s) = (a0 b0 + a1 b1 g) + (a0 b1 + a1 b0) s
        return QuotientElem(a.even * b.even + a.odd * b.odd * a.modulus,
                            a.even * b.odd + a.odd * b.even, a.modulus);
    }
    QuotientElem & operator+=(const QuotientElem & b) { return *this = *this + b; }
    QuotientElem & operator-=(const QuotientElem & b) { return *this = *this - b; }
    QuotientElem & operator*=(const QuotientElem & b) { return *this = *this * b; }

    friend bool operator==(const QuotientElem & a, const QuotientElem & b)
    {
        return a.even == b.even && a.odd == b.odd;
    }
};

/* Reduce a polynomial in s (coefficients in E, ascending) modulo
 * s^2 - g, returning the canonical degree <= 1 representative. */
template <typename E>
QuotientElem<E> quotient_reduce(const std::vector<E> & s_coeffs, const E & g)
{
    QuotientElem<E> r(g);
    E gp(1);
    // s^k = g^(k/2) or g^((k-1)/2) * s
    for (size_t k = 0; k < s_coeffs.size(); k++) {
        if (k >= 2 && k % 2 == 0)
            gp = gp * g;
        if (k % 2 == 0)
            r.even = r.even + s_coeffs[k] * gp;
        else
            r.odd = r.odd + s_coeffs[k] * gp;
    }
    return r;
}

} // namespace keypoly

#endif
