#ifndef KEYPOLY_UNIPOLY_HPP
#define KEYPOLY_UNIPOLY_HPP

#include "keypoly/quadext.hpp"
#include "keypoly/rational.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace keypoly {

template <typename K>
struct UniPoly;
template <typename K>
bool is_zero(const UniPoly<K> & p);

/* Dense univariate polynomial, coefficients ascending. The coefficient
 * type K is a commutative ring with exact arithmetic (Rational, QuadExt,
 * or UniPoly<Rational> when used as the coefficient ring of a PRS).
 * Trailing zeros are never stored; the zero polynomial has an empty
 * coefficient vector and degree -1. */
template <typename K>
struct UniPoly {
    std::vector<K> c;
    char var = 'x';

    UniPoly() = default;
    explicit UniPoly(char v) : var(v) {}
    UniPoly(std::vector<K> cs, char v = 'x') : c(std::move(cs)), var(v) { trim(); }
    template <typename T,
              std::enable_if_t<std::is_integral_v<T> && !std::is_same_v<T, char>, int> = 0>
    UniPoly(T k)
    {
        if (k != 0)
            c.push_back(K((long) k));
    }

    static UniPoly zero(char v = 'x') { return UniPoly(v); }
    static UniPoly constant(K k, char v = 'x')
    {
        UniPoly p(v);
        if (!keypoly::is_zero(k))
            p.c.push_back(std::move(k));
        return p;
    }
    static UniPoly monomial(K k, int e, char v = 'x')
    {
        UniPoly p(v);
        if (!keypoly::is_zero(k)) {
            p.c.assign(e + 1, K(0));
            p.c[e] = std::move(k);
        }
        return p;
    }

    void trim()
    {
        while (!c.empty() && keypoly::is_zero(c.back()))
            c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int) c.size() - 1; }
    const K & lc() const
    {
        assert(!c.empty());
        return c.back();
    }
    K coeff(int i) const { return (i >= 0 && i < (int) c.size()) ? c[i] : K(0); }

    friend UniPoly operator+(const UniPoly & p, const UniPoly & q)
    {
        UniPoly r(p.var);
        r.c.resize(std::max(p.c.size(), q.c.size()), K(0));
        for (size_t i = 0; i < p.c.size(); i++) r.c[i] = p.c[i];
        for (size_t i = 0; i < q.c.size(); i++) r.c[i] += q.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly & p, const UniPoly & q)
    {
        UniPoly r(p.var);
        r.c.resize(std::max(p.c.size(), q.c.size()), K(0));
        for (size_t i = 0; i < p.c.size(); i++) r.c[i] = p.c[i];
        for (size_t i = 0; i < q.c.size(); i++) r.c[i] -= q.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly & p)
    {
        UniPoly r = p;
        for (auto & k : r.c) k = -k;
        return r;
    }
    friend UniPoly operator*(const UniPoly & p, const UniPoly & q)
    {
        if (p.is_zero() || q.is_zero())
            return UniPoly(p.var);
        UniPoly r(p.var);
        r.c.assign(p.c.size() + q.c.size() - 1, K(0));
        for (size_t i = 0; i < p.c.size(); i++) {
            if (keypoly::is_zero(p.c[i]))
                continue;
            for (size_t j = 0; j < q.c.size(); j++)
                r.c[i + j] += p.c[i] * q.c[j];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly & p, const K & k)
    {
        UniPoly r(p.var);
        if (keypoly::is_zero(k))
            return r;
        r.c = p.c;
        for (auto & x : r.c) x = x * k;
        r.trim();
        return r;
    }
    friend UniPoly operator*(const K & k, const UniPoly & p) { return p * k; }
    UniPoly & operator+=(const UniPoly & q) { return *this = *this + q; }
    UniPoly & operator-=(const UniPoly & q) { return *this = *this - q; }
    UniPoly & operator*=(const UniPoly & q) { return *this = *this * q; }

    friend bool operator==(const UniPoly & p, const UniPoly & q) { return p.c == q.c; }

    UniPoly derivative() const
    {
        UniPoly r(var);
        for (size_t i = 1; i < c.size(); i++)
            r.c.push_back(c[i] * K((long) i));
        r.trim();
        return r;
    }

    template <typename V = K>
    V eval(const std::type_identity_t<V> & x0) const
    {
        V r(0);
        for (size_t i = c.size(); i-- > 0;)
            r = r * x0 + V(c[i]);
        return r;
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly r = constant(K(1), var);
        UniPoly b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /* p(x + a) */
    UniPoly shift(const K & a) const
    {
        UniPoly r(var);
        for (size_t i = c.size(); i-- > 0;) {
            r *= UniPoly({a, K(1)}, var);
            r += constant(c[i], var);
        }
        return r;
    }
};

/* Field-coefficient division with remainder. */
template <typename K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K> & a, const UniPoly<K> & b)
{
    if (b.is_zero())
        throw std::domain_error("UniPoly division by zero");
    UniPoly<K> q(a.var), r = a;
    if (a.degree() >= b.degree())
        q.c.assign(a.degree() - b.degree() + 1, K(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K f = r.lc() / b.lc();
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); i++)
            r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <typename K>
UniPoly<K> operator/(const UniPoly<K> & a, const UniPoly<K> & b)
{
    return divmod(a, b).first;
}
template <typename K>
UniPoly<K> operator%(const UniPoly<K> & a, const UniPoly<K> & b)
{
    return divmod(a, b).second;
}

template <typename K>
UniPoly<K> exact_div(const UniPoly<K> & a, const UniPoly<K> & b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InternalError("inexact polynomial division");
    return q;
}

inline Rational exact_div(const Rational & a, const Rational & b) { return a / b; }
inline QuadExt exact_div(const QuadExt & a, const QuadExt & b) { return a / b; }

template <typename K>
bool is_zero(const UniPoly<K> & p)
{
    return p.is_zero();
}

using UPoly = UniPoly<Rational>;

/* Scale so that coefficients are coprime integers with the same signs
 * (multiplication by a positive rational). Returns the applied factor. */
inline Rational make_primitive(UPoly & p)
{
    if (p.is_zero())
        return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto & k : p.c) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), k.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), k.get_den_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    for (auto & k : p.c) k *= s;
    return s;
}

/* Monic gcd over Q. Remainders are rescaled to primitive integer
 * vectors at every step to keep coefficient growth polynomial. */
inline UPoly gcd(UPoly a, UPoly b)
{
    make_primitive(a);
    make_primitive(b);
    while (!b.is_zero()) {
        UPoly r = a % b;
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lc() != 1)
        a = a * (Rational(1) / a.lc());
    return a;
}

inline UPoly squarefree_part(const UPoly & p)
{
    if (p.degree() <= 0)
        return p;
    UPoly g = gcd(p, p.derivative());
    if (g.degree() == 0)
        return p;
    return exact_div(p, g);
}

/* Yun's algorithm: returns factors (f_i, i) with p ~ prod f_i^i up to a
 * constant, f_i squarefree and pairwise coprime, deg f_i possibly 0. */
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(UPoly p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0)
        return out;
    UPoly d = p.derivative();
    UPoly a = gcd(p, d);
    UPoly b = exact_div(p, a);
    UPoly cpart = exact_div(d, a);
    int i = 1;
    while (b.degree() > 0) {
        UPoly zz = cpart - b.derivative();
        UPoly f = gcd(b, zz);
        if (f.degree() > 0)
            out.emplace_back(f, i);
        b = exact_div(b, f);
        cpart = exact_div(zz, f);
        i++;
    }
    return out;
}

inline std::string poly_string(const UPoly & p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; i--) {
        if (is_zero(p.coeff(i)))
            continue;
        if (!s.empty())
            s += " + ";
        s += rat_string(p.coeff(i)) + "*" + p.var + "^" + std::to_string(i);
    }
    return s;
}

} // namespace keypoly

#endif
