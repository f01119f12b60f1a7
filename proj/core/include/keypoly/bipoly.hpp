#ifndef KEYPOLY_BIPOLY_HPP
#define KEYPOLY_BIPOLY_HPP

#include "keypoly/quadext.hpp"
#include "keypoly/unipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace keypoly {

enum class Var { x, lambda };

/* Sparse bivariate polynomial in (x, lambda). Terms are stored in a map
 * keyed by the exponent pair (i = x-degree, j = lambda-degree), which is
 * lexicographic by (i, j) and therefore gives deterministic iteration and
 * serialization order. Zero coefficients are never stored. */
template <typename K>
struct BiPolyT {
    std::map<std::pair<int, int>, K> t;

    BiPolyT() = default;

    static BiPolyT constant(K k)
    {
        BiPolyT p;
        p.add_term(0, 0, std::move(k));
        return p;
    }
    static BiPolyT term(int i, int j, K k)
    {
        BiPolyT p;
        p.add_term(i, j, std::move(k));
        return p;
    }

    void add_term(int i, int j, K k)
    {
        if (keypoly::is_zero(k))
            return;
        auto it = t.find({i, j});
        if (it == t.end()) {
            t.emplace(std::make_pair(i, j), std::move(k));
        } else {
            it->second += k;
            if (keypoly::is_zero(it->second))
                t.erase(it);
        }
    }

    bool is_zero() const { return t.empty(); }

    int deg_x() const
    {
        int d = -1;
        for (auto & [e, k] : t) d = std::max(d, e.first);
        return d;
    }
    int deg_lambda() const
    {
        int d = -1;
        for (auto & [e, k] : t) d = std::max(d, e.second);
        return d;
    }
    int deg(Var v) const { return v == Var::x ? deg_x() : deg_lambda(); }

    K coeff(int i, int j) const
    {
        auto it = t.find({i, j});
        return it == t.end() ? K(0) : it->second;
    }

    friend BiPolyT operator+(const BiPolyT & p, const BiPolyT & q)
    {
        BiPolyT r = p;
        for (auto & [e, k] : q.t) r.add_term(e.first, e.second, k);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT & p, const BiPolyT & q)
    {
        BiPolyT r = p;
        for (auto & [e, k] : q.t) r.add_term(e.first, e.second, -k);
        return r;
    }
    friend BiPolyT operator-(const BiPolyT & p)
    {
        BiPolyT r;
        for (auto & [e, k] : p.t) r.t.emplace(e, -k);
        return r;
    }
    friend BiPolyT operator*(const BiPolyT & p, const BiPolyT & q)
    {
        BiPolyT r;
        for (auto & [e1, k1] : p.t)
            for (auto & [e2, k2] : q.t)
                r.add_term(e1.first + e2.first, e1.second + e2.second, k1 * k2);
        return r;
    }
    friend BiPolyT operator*(const BiPolyT & p, const K & k)
    {
        BiPolyT r;
        if (keypoly::is_zero(k))
            return r;
        for (auto & [e, c] : p.t) r.add_term(e.first, e.second, c * k);
        return r;
    }
    friend BiPolyT operator*(const K & k, const BiPolyT & p) { return p * k; }
    BiPolyT & operator+=(const BiPolyT & q) { return *this = *this + q; }
    BiPolyT & operator-=(const BiPolyT & q) { return *this = *this - q; }
    BiPolyT & operator*=(const BiPolyT & q) { return *this = *this * q; }

    friend bool operator==(const BiPolyT & p, const BiPolyT & q) { return p.t == q.t; }

    BiPolyT derivative(Var v) const
    {
        BiPolyT r;
        for (auto & [e, k] : t) {
            if (v == Var::x) {
                if (e.first > 0)
                    r.add_term(e.first - 1, e.second, k * K((long) e.first));
            } else {
                if (e.second > 0)
                    r.add_term(e.first, e.second - 1, k * K((long) e.second));
            }
        }
        return r;
    }

    BiPolyT pow(unsigned e) const
    {
        BiPolyT r = constant(K(1));
        BiPolyT b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /* p(x + a, lambda + b) */
    BiPolyT shift(const K & a, const K & b) const
    {
        // per-variable Horner via nested form
        std::vector<UniPoly<K>> rows = nested_lambda();
        BiPolyT r;
        // substitute lambda -> lambda + b first, row-wise in x
        BiPolyT acc;
        for (size_t j = rows.size(); j-- > 0;) {
            // acc = acc * (lambda + b) + rows[j](x)
            BiPolyT lam = term(0, 1, K(1)) + constant(b);
            acc = acc * lam;
            for (int i = 0; i <= rows[j].degree(); i++)
                acc.add_term(i, 0, rows[j].coeff(i));
        }
        // substitute x -> x + a
        std::vector<UniPoly<K>> cols = acc.nested_x();
        for (size_t i = cols.size(); i-- > 0;) {
            BiPolyT xa = term(1, 0, K(1)) + constant(a);
            r = r * xa;
            for (int j = 0; j <= cols[i].degree(); j++)
                r.add_term(0, j, cols[i].coeff(j));
        }
        return r;
    }

    /* p(-x, -lambda) */
    BiPolyT negate_vars() const
    {
        BiPolyT r;
        for (auto & [e, k] : t)
            r.t.emplace(e, ((e.first + e.second) % 2) ? -k : k);
        return r;
    }

    /* coefficients of lambda^j, each a polynomial in x */
    std::vector<UniPoly<K>> nested_lambda() const
    {
        std::vector<UniPoly<K>> rows(deg_lambda() + 1, UniPoly<K>('x'));
        for (auto & [e, k] : t) {
            auto & row = rows[e.second];
            if ((int) row.c.size() <= e.first)
                row.c.resize(e.first + 1, K(0));
            row.c[e.first] = k;
        }
        for (auto & r : rows) r.trim();
        return rows;
    }
    /* coefficients of x^i, each a polynomial in lambda */
    std::vector<UniPoly<K>> nested_x() const
    {
        std::vector<UniPoly<K>> cols(deg_x() + 1, UniPoly<K>('l'));
        for (auto & [e, k] : t) {
            auto & col = cols[e.first];
            if ((int) col.c.size() <= e.second)
                col.c.resize(e.second + 1, K(0));
            col.c[e.second] = k;
        }
        for (auto & r : cols) r.trim();
        return cols;
    }

    static BiPolyT from_nested_lambda(const std::vector<UniPoly<K>> & rows)
    {
        BiPolyT r;
        for (size_t j = 0; j < rows.size(); j++)
            for (int i = 0; i <= rows[j].degree(); i++)
                r.add_term(i, (int) j, rows[j].coeff(i));
        return r;
    }
    static BiPolyT from_nested_x(const std::vector<UniPoly<K>> & cols)
    {
        BiPolyT r;
        for (size_t i = 0; i < cols.size(); i++)
            for (int j = 0; j <= cols[i].degree(); j++)
                r.add_term((int) i, j, cols[i].coeff(j));
        return r;
    }

    /* specialize lambda = v, result in x */
    UniPoly<K> eval_lambda(const K & v) const
    {
        auto rows = nested_lambda();
        UniPoly<K> r('x');
        for (size_t j = rows.size(); j-- > 0;)
            r = r * UniPoly<K>({v}, 'x') + rows[j];
        return r;
    }
    /* specialize x = v, result in lambda */
    UniPoly<K> eval_x(const K & v) const
    {
        auto cols = nested_x();
        UniPoly<K> r('l');
        for (size_t i = cols.size(); i-- > 0;)
            r = r * UniPoly<K>({v}, 'l') + cols[i];
        return r;
    }
    /* substitute lambda = u(x), result in x */
    UniPoly<K> subs_lambda(const UniPoly<K> & u) const
    {
        auto rows = nested_lambda();
        UniPoly<K> r('x');
        for (size_t j = rows.size(); j-- > 0;)
            r = r * u + rows[j];
        return r;
    }
    K eval(const K & x0, const K & l0) const { return eval_lambda(l0).eval(x0); }

    /* leading coefficient with respect to x, as a polynomial in lambda */
    UniPoly<K> lc_x() const
    {
        UniPoly<K> r('l');
        int d = deg_x();
        for (auto & [e, k] : t)
            if (e.first == d) {
                if ((int) r.c.size() <= e.second)
                    r.c.resize(e.second + 1, K(0));
                r.c[e.second] = k;
            }
        r.trim();
        return r;
    }
};

using BiPoly = BiPolyT<Rational>;
using BiPolyQE = BiPolyT<QuadExt>;

template <typename K>
bool is_zero(const BiPolyT<K> & p)
{
    return p.is_zero();
}

/* Homogenize to total degree D with a third variable z, then swap the
 * roles of lambda and z and set the new z slot to 1. Term x^i lam^j maps
 * to x^i lam^(D-i-j). */
inline BiPoly homogenize_swap(const BiPoly & p, int total_degree)
{
    BiPoly r;
    for (auto & [e, k] : p.t) {
        int zexp = total_degree - e.first - e.second;
        if (zexp < 0)
            throw std::invalid_argument("homogenize_swap: total_degree too small");
        r.add_term(e.first, zexp, k);
    }
    return r;
}

enum class ShiftMode { shift_plus_one, negate };

inline BiPoly affine_shift(const BiPoly & p, ShiftMode mode)
{
    if (mode == ShiftMode::shift_plus_one)
        return p.shift(Rational(1), Rational(1));
    return p.negate_vars();
}

inline BiPolyQE to_quadext(const BiPoly & p)
{
    BiPolyQE r;
    for (auto & [e, k] : p.t)
        r.t.emplace(e, QuadExt(k));
    return r;
}

} // namespace keypoly

#endif
