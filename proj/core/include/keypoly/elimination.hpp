#ifndef KEYPOLY_ELIMINATION_HPP
#define KEYPOLY_ELIMINATION_HPP

#include "keypoly/bipoly.hpp"
#include "keypoly/families.hpp"

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace keypoly {

/* Degree drops and defect exponents of a subresultant remainder
 * sequence, recorded for diagnostics. */
struct PRSTrace {
    std::vector<int> degrees;
    std::vector<int> defects;
};

template <typename K>
UniPoly<K> scalar_exact_div(UniPoly<K> p, const std::type_identity_t<K> & d)
{
    for (auto & c : p.c) c = exact_div(c, d);
    return p;
}

template <typename K>
K pow_k(K b, int e)
{
    K r(1);
    for (; e > 0; e--) r = r * b;
    return r;
}

/* Fraction-free pseudo-remainder: lc(B)^(degA-degB+1) * A mod B. */
template <typename K>
UniPoly<K> pseudo_rem(const UniPoly<K> & A, const UniPoly<K> & B)
{
    UniPoly<K> R = A;
    int e = A.degree() - B.degree() + 1;
    const K & b = B.lc();
    while (!R.is_zero() && R.degree() >= B.degree()) {
        UniPoly<K> T = UniPoly<K>::monomial(R.lc(), R.degree() - B.degree(), R.var);
        R = R * b - T * B;
        e--;
    }
    for (; e > 0; e--) R = R * b;
    return R;
}

/* Resultant by the subresultant PRS, valid over any integral domain K
 * with exact division (Rational, or UniPoly<Rational> for bivariate
 * elimination). Matches the Sylvester determinant including sign. */
template <typename K>
K resultant_subres(UniPoly<K> A, UniPoly<K> B, PRSTrace * trace = nullptr)
{
    if (A.is_zero() || B.is_zero())
        return K(0);
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
        std::swap(A, B);
    }
    if (trace) {
        trace->degrees = {A.degree(), B.degree()};
        trace->defects.clear();
    }
    if (B.degree() == 0)
        return pow_k(B.lc(), A.degree());
    K g(1), h(1);
    while (true) {
        int dA = A.degree(), dB = B.degree();
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1))
            s = -s;
        UniPoly<K> R = pseudo_rem(A, B);
        A = std::move(B);
        B = scalar_exact_div(std::move(R), g * pow_k(h, delta));
        g = A.lc();
        if (delta > 0)
            h = exact_div(pow_k(g, delta), pow_k(h, delta - 1));
        if (trace) {
            trace->degrees.push_back(B.degree());
            trace->defects.push_back(delta - 1);
        }
        if (B.is_zero())
            return K(0);
        if (B.degree() == 0)
            break;
    }
    int dA = A.degree();
    K r = exact_div(pow_k(B.lc(), dA), pow_k(h, dA - 1));
    return s < 0 ? -r : r;
}

/* View p as a univariate polynomial in v with coefficients in the
 * other variable. */
inline UniPoly<UPoly> lift_nested(const BiPoly & p, Var v)
{
    UniPoly<UPoly> r('?');
    r.c = (v == Var::x) ? p.nested_x() : p.nested_lambda();
    r.var = (v == Var::x) ? 'x' : 'l';
    r.trim();
    return r;
}

BiPoly resultant(const BiPoly & p, const BiPoly & q, Var var, PRSTrace * trace = nullptr);

/* Dense-matrix Sylvester determinant, used as an independent oracle in
 * tests for the PRS engine. */
Rational resultant_sylvester(const UPoly & a, const UPoly & b);

/* Res_x(p, q) as a polynomial in lambda, by evaluation at integer
 * lambda nodes and Newton interpolation. Nodes where a leading
 * x-coefficient vanishes are skipped. */
UPoly resultant_x_interp(const BiPoly & p, const BiPoly & q, int threads = 1);

/* (-1)^(d(d-1)/2) Res_x(p, dp/dx) / lc_x(p), d = deg_x(p). */
BiPoly discriminant_x(const BiPoly & p, int threads = 1);

/* Same normalization in the lambda direction, PRS engine. */
BiPoly discriminant_lambda(const BiPoly & p);

struct DiscDegreeRow {
    int n;
    long observed;
    long predicted;
    bool match;
};
struct DiscDegreeReport {
    std::string family;
    std::vector<DiscDegreeRow> rows;
};

DiscDegreeReport disc_degree_report(const CurveFamily & fam, int n_max, int threads = 1);
std::string disc_degree_report_json(const DiscDegreeReport & r);

/* R1 = Res_lambda(p, dp/dx), R2 = Res_lambda(p, dp/dlambda), both as
 * x-polynomials. Common real roots of their squarefree parts are the
 * only candidate x-coordinates of affine singular points. */
std::pair<UPoly, UPoly> eliminate_singular_candidates(const BiPoly & p);

} // namespace keypoly

#endif
