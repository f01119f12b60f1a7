#ifndef KEYPOLY_QUADEXT_HPP
#define KEYPOLY_QUADEXT_HPP

#include "keypoly/rational.hpp"

#include <cmath>
#include <string>

namespace keypoly {

/* Element a + b*sqrt(d) of a real quadratic extension Q(sqrt(d)).
 *
 * d is fixed per context; d = 0 denotes a plain rational (b must then be
 * zero). Mixed-radical arithmetic is rejected: combining two elements with
 * different nonzero d throws. The branch expansions only ever need sqrt(5)
 * and sqrt(3), each in isolation. */
struct QuadExt {
    Rational a, b, d;

    QuadExt() : a(0), b(0), d(0) {}
    QuadExt(Rational a_) : a(std::move(a_)), b(0), d(0) {}
    QuadExt(long v) : a(v), b(0), d(0) {}
    QuadExt(Rational a_, Rational b_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), d(std::move(d_))
    {
        if (keypoly::is_zero(b))
            d = 0;
        else if (sign(d) <= 0 || is_rational_square(d))
            throw std::invalid_argument("QuadExt: d must be positive and not a rational square");
    }

    bool is_rational() const { return keypoly::is_zero(b); }
    bool is_zero() const { return keypoly::is_zero(a) && keypoly::is_zero(b); }

    static Rational merged_d(const QuadExt & x, const QuadExt & y)
    {
        if (x.is_rational()) return y.d;
        if (y.is_rational()) return x.d;
        if (x.d != y.d)
            throw std::invalid_argument("QuadExt: mixed radicals");
        return x.d;
    }

    QuadExt conj() const { return QuadExt(a, -b, d); }

    /* a^2 - d b^2, the field norm. */
    Rational norm() const { return a * a - d * b * b; }

    friend QuadExt operator+(const QuadExt & x, const QuadExt & y)
    {
        Rational dd = merged_d(x, y);
        return QuadExt(x.a + y.a, x.b + y.b, dd);
    }
    friend QuadExt operator-(const QuadExt & x, const QuadExt & y)
    {
        Rational dd = merged_d(x, y);
        return QuadExt(x.a - y.a, x.b - y.b, dd);
    }
    friend QuadExt operator-(const QuadExt & x) { return QuadExt(-x.a, -x.b, x.d); }
    friend QuadExt operator*(const QuadExt & x, const QuadExt & y)
    {
        Rational dd = merged_d(x, y);
        return QuadExt(x.a * y.a + dd * x.b * y.b, x.a * y.b + x.b * y.a, dd);
    }
    friend QuadExt operator/(const QuadExt & x, const QuadExt & y)
    {
        if (y.is_zero())
            throw std::domain_error("QuadExt division by zero");
        if (y.is_rational())
            return QuadExt(x.a / y.a, x.b / y.a, x.d);
        Rational n = y.norm();
        return x * QuadExt(y.a / n, -y.b / n, y.d);
    }
    QuadExt & operator+=(const QuadExt & y) { return *this = *this + y; }
    QuadExt & operator-=(const QuadExt & y) { return *this = *this - y; }
    QuadExt & operator*=(const QuadExt & y) { return *this = *this * y; }

    friend bool operator==(const QuadExt & x, const QuadExt & y)
    {
        return x.a == y.a && x.b == y.b && (x.is_rational() ? y.is_rational() : x.d == y.d);
    }

    /* Sign of a + b sqrt(d), decided exactly. */
    int sgn() const
    {
        int sa = sign(a), sb = sign(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against d b^2
        int c = cmp(a * a, d * b * b);
        if (c == 0) return 0; // impossible for d nonsquare, but harmless
        return c > 0 ? sa : sb;
    }

    double to_double() const
    {
        double v = a.get_d();
        if (!keypoly::is_zero(b))
            v += b.get_d() * std::sqrt(d.get_d());
        return v;
    }

    std::string str() const
    {
        auto compact = [](const Rational & q) {
            return q.get_den() == 1 ? q.get_num().get_str() : rat_string(q);
        };
        if (is_rational())
            return compact(a);
        return "(" + compact(a) + "," + compact(b) + ")";
    }
};

inline bool is_zero(const QuadExt & x) { return x.is_zero(); }
inline int sign(const QuadExt & x) { return x.sgn(); }

} // namespace keypoly

#endif
