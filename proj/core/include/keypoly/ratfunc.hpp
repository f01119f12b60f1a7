#ifndef KEYPOLY_RATFUNC_HPP
#define KEYPOLY_RATFUNC_HPP

#include "keypoly/unipoly.hpp"

namespace keypoly {

/* Rational function in one variable over Q, kept normalized: the
 * denominator is monic and gcd(num, den) = 1. */
struct RatFunc {
    UPoly num, den;

    RatFunc() : num(), den({Rational(1)}) {}
    RatFunc(UPoly n) : num(std::move(n)), den({Rational(1)}) {}
    RatFunc(Rational q) : num(UPoly::constant(std::move(q))), den({Rational(1)}) {}
    RatFunc(long v) : num(UPoly::constant(Rational(v))), den({Rational(1)}) {}
    RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize()
    {
        if (den.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            den = UPoly({Rational(1)});
            return;
        }
        UPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        Rational l = den.lc();
        if (l != 1) {
            Rational inv = Rational(1) / l;
            num = num * inv;
            den = den * inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    /* Requires a polynomial value (den == 1). */
    const UPoly & as_poly() const
    {
        if (!is_polynomial())
            throw InternalError("RatFunc: expected a polynomial value");
        return num;
    }

    friend RatFunc operator+(const RatFunc & a, const RatFunc & b)
    {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc & a, const RatFunc & b)
    {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc & a) { RatFunc r = a; r.num = -r.num; return r; }
    friend RatFunc operator*(const RatFunc & a, const RatFunc & b)
    {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc & a, const RatFunc & b)
    {
        if (b.is_zero())
            throw std::domain_error("RatFunc division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc & operator+=(const RatFunc & b) { return *this = *this + b; }
    RatFunc & operator-=(const RatFunc & b) { return *this = *this - b; }
    RatFunc & operator*=(const RatFunc & b) { return *this = *this * b; }

    friend bool operator==(const RatFunc & a, const RatFunc & b)
    {
        return a.num == b.num && a.den == b.den;
    }

    RatFunc derivative() const
    {
        return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
    }

    RatFunc pow(unsigned e) const
    {
        RatFunc r(1);
        RatFunc b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }
};

inline bool is_zero(const RatFunc & f) { return f.is_zero(); }

} // namespace keypoly

#endif
