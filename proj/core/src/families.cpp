#include "keypoly/families.hpp"

#include "keypoly/quotient.hpp"
#include "keypoly/ratfunc.hpp"

namespace keypoly {

CurveFamily CurveFamily::fixed(UPoly f)
{
    if (f.degree() != 3)
        throw std::invalid_argument("FixedCubic: degree 3 required");
    if (squarefree_part(f).degree() != 3)
        throw std::invalid_argument("FixedCubic: separable cubic required");
    return {FamilyKind::FixedCubic, std::move(f)};
}

BiPoly CurveFamily::f() const
{
    BiPoly r;
    switch (kind) {
        case FamilyKind::Legendre:
            // x^3 - (1+lambda) x^2 + lambda x
            r.add_term(3, 0, 1);
            r.add_term(2, 0, -1);
            r.add_term(2, 1, -1);
            r.add_term(1, 1, 1);
            break;
        case FamilyKind::ConjugatePair:
            // x^3 - 2 x^2 + (1 + lambda^2) x
            r.add_term(3, 0, 1);
            r.add_term(2, 0, -2);
            r.add_term(1, 0, 1);
            r.add_term(1, 2, 1);
            break;
        case FamilyKind::FixedCubic:
            for (int i = 0; i <= cubic.degree(); i++)
                r.add_term(i, 0, cubic.coeff(i));
            break;
    }
    return r;
}

bool CurveFamily::degenerate_at(const Rational & lambda0) const
{
    switch (kind) {
        case FamilyKind::Legendre:
            return lambda0 == 0 || lambda0 == 1;
        case FamilyKind::ConjugatePair:
            return lambda0 == 0; // x^3 - 2x^2 + x = x(x-1)^2
        case FamilyKind::FixedCubic:
            return false;
    }
    return false;
}

std::string CurveFamily::name() const
{
    switch (kind) {
        case FamilyKind::Legendre: return "legendre";
        case FamilyKind::ConjugatePair: return "conjugate";
        case FamilyKind::FixedCubic: return "fixed";
    }
    return "?";
}

const BiPoly & KeyFamily::f() const
{
    if (f_.is_zero())
        f_ = fam_.f();
    return f_;
}

const BiPoly & KeyFamily::key_poly(int n) const
{
    if (n < 0)
        throw std::invalid_argument("key_poly: n >= 0 required");
    if (cache_.empty()) {
        cache_.push_back(BiPoly::constant(1));
        cache_.push_back(f().derivative(Var::x) * Rational(1, 2));
    }
    const BiPoly fprime = f().derivative(Var::x);
    while ((int) cache_.size() <= n) {
        int m = (int) cache_.size() - 1; // have P_m, build P_{m+1}
        cache_.push_back(cache_[m].derivative(Var::x) * f() +
                         Rational(1 - 2 * m, 2) * (cache_[m] * fprime));
    }
    return cache_[n];
}

BiPoly key_poly(const CurveFamily & family, int n)
{
    KeyFamily kf(family);
    return kf.key_poly(n);
}

BiPoly gen_key_poly_closed(const KeyFamily & kf, int mu, int n)
{
    if (mu == 2) {
        if (n < 1)
            throw std::invalid_argument("gen_key_poly_closed: mu=2 requires n >= 1");
        kf.key_poly(n + 1); // fill the cache so the references below stay valid
        const BiPoly &Pn = kf.key_poly(n), &Pm = kf.key_poly(n - 1), &Pp = kf.key_poly(n + 1);
        return Rational(n + 1) * (Pn * Pn) - Rational(n) * (Pm * Pp);
    }
    if (mu == 3) {
        if (n < 2)
            throw std::invalid_argument("gen_key_poly_closed: mu=3 requires n >= 2");
        kf.key_poly(n + 2); // fill the cache so the references below stay valid
        const BiPoly &P0 = kf.key_poly(n - 2), &P1 = kf.key_poly(n - 1), &P2 = kf.key_poly(n),
                     &P3 = kf.key_poly(n + 1), &P4 = kf.key_poly(n + 2);
        BiPoly r = Rational((n + 1) * (n + 1) * (n + 2)) * (P2 * P2 * P2);
        r -= Rational(n * (n + 1)) *
             (P2 * (Rational(2 * (n + 2)) * (P1 * P3) + Rational(n - 1) * (P0 * P4)));
        r += Rational(n) * (Rational(n * n + n - 2) * (P0 * (P3 * P3)) +
                            Rational(n * (n + 1)) * ((P1 * P1) * P4));
        return r;
    }
    throw std::invalid_argument("gen_key_poly_closed: mu must be 2 or 3");
}

BiPoly gen_key_poly_closed(const CurveFamily & family, int mu, int n)
{
    KeyFamily kf(family);
    return gen_key_poly_closed(kf, mu, n);
}

BiPoly bipoly_exact_div(const BiPoly & p, const BiPoly & q)
{
    // long division in x over Q[lambda]; q must be monic in x
    auto qc = q.nested_x();
    int dq = (int) qc.size() - 1;
    if (dq < 0 || !(qc[dq] == UPoly({Rational(1)})))
        throw std::invalid_argument("bipoly_exact_div: divisor must be monic in x");
    auto pc = p.nested_x();
    int dp = (int) pc.size() - 1;
    if (dp < dq)
        throw InternalError("bipoly_exact_div: inexact division (degree)");
    std::vector<UPoly> quo(dp - dq + 1);
    for (int d = dp - dq; d >= 0; d--) {
        UPoly t = pc[d + dq];
        quo[d] = t;
        if (t.is_zero())
            continue;
        for (int i = 0; i < dq; i++)
            pc[d + i] -= t * qc[i];
        pc[d + dq] = UPoly();
    }
    for (auto & r : pc)
        if (!r.is_zero())
            throw InternalError("bipoly_exact_div: inexact division (remainder)");
    return BiPoly::from_nested_x(quo);
}

namespace {

/* Laplace expansion determinant; mu stays tiny. */
BiPoly det_bipoly(std::vector<std::vector<BiPoly>> & m)
{
    size_t n = m.size();
    if (n == 1)
        return m[0][0];
    BiPoly r;
    std::vector<std::vector<BiPoly>> sub(n - 1, std::vector<BiPoly>(n - 1));
    for (size_t k = 0; k < n; k++) {
        if (m[0][k].is_zero())
            continue;
        for (size_t i = 1; i < n; i++)
            for (size_t j = 0, jj = 0; j < n; j++)
                if (j != k)
                    sub[i - 1][jj++] = m[i][j];
        BiPoly minor = det_bipoly(sub);
        if (k % 2 == 0)
            r += m[0][k] * minor;
        else
            r -= m[0][k] * minor;
    }
    return r;
}

} // namespace

BiPoly gen_key_poly_det(const KeyFamily & kf, int mu, int n)
{
    if (mu < 1)
        throw std::invalid_argument("gen_key_poly_det: mu >= 1 required");
    if (n - mu + 1 < 0)
        throw std::invalid_argument("gen_key_poly_det: requires n - mu + 1 >= 0");
    const BiPoly & f = kf.f();
    std::vector<BiPoly> fpow(mu);
    fpow[0] = BiPoly::constant(1);
    for (int i = 1; i < mu; i++)
        fpow[i] = fpow[i - 1] * f;

    std::vector<std::vector<BiPoly>> Q(mu, std::vector<BiPoly>(mu));
    for (int j = 0; j < mu; j++) {
        for (int c = 0; c < mu; c++) {
            BiPoly e;
            int m = n + c;
            for (int i = 0; i <= std::min(j, m); i++) {
                Rational coef(binomial(m, i) * falling(j, i));
                e += coef * (BiPoly::term(j - i, 0, 1) * fpow[i] * kf.key_poly(m - i));
            }
            Q[j][c] = std::move(e);
        }
    }
    BiPoly d = det_bipoly(Q);
    int e = mu * (mu - 1) / 2;
    for (int i = 0; i < e; i++)
        d = bipoly_exact_div(d, f);
    return d;
}

BiPoly gen_key_poly_det(const CurveFamily & family, int mu, int n)
{
    KeyFamily kf(family);
    return gen_key_poly_det(kf, mu, n);
}

namespace {

using QE = QuotientElem<RatFunc>;

QE qe_derivative(const QE & e, const RatFunc & fprime_over_2f)
{
    // (a + b y)' = a' + (b' + b f'/(2f)) y  since y' = f' y / (2f)
    return QE(e.even.derivative(), e.odd.derivative() + e.odd * fprime_over_2f, e.modulus);
}

RatFunc det_ratfunc(std::vector<std::vector<RatFunc>> & m)
{
    size_t n = m.size();
    if (n == 1)
        return m[0][0];
    RatFunc r(0);
    std::vector<std::vector<RatFunc>> sub(n - 1, std::vector<RatFunc>(n - 1));
    for (size_t k = 0; k < n; k++) {
        if (m[0][k].is_zero())
            continue;
        for (size_t i = 1; i < n; i++)
            for (size_t j = 0, jj = 0; j < n; j++)
                if (j != k)
                    sub[i - 1][jj++] = m[i][j];
        RatFunc minor = det_ratfunc(sub);
        if (k % 2 == 0)
            r += m[0][k] * minor;
        else
            r -= m[0][k] * minor;
    }
    return r;
}

} // namespace

UPoly wronskian_oracle(const CurveFamily & family, int mu, int n, const Rational & lambda0)
{
    if (family.degenerate_at(lambda0))
        throw DegenerateCurve("wronskian_oracle: curve degenerates at lambda0");
    if (mu < 1 || n - mu + 1 < 0)
        throw std::invalid_argument("wronskian_oracle: (mu, n) out of range");

    KeyFamily kf(family);
    UPoly fx = kf.f().eval_lambda(lambda0);
    RatFunc f(fx);
    RatFunc fprime_over_2f(fx.derivative(), fx * Rational(2));

    // rows: sections x^j y; columns: derivative orders n..n+mu-1.
    // Every entry stays pure odd (a multiple of y).
    std::vector<std::vector<RatFunc>> g(mu, std::vector<RatFunc>(mu));
    for (int j = 0; j < mu; j++) {
        QE e(RatFunc(UPoly::monomial(Rational(1), j)), RatFunc(0), f);
        std::swap(e.even, e.odd); // x^j * y is odd
        for (int m = 0; m < n; m++)
            e = qe_derivative(e, fprime_over_2f);
        for (int c = 0; c < mu; c++) {
            if (!e.even.is_zero())
                throw InternalError("wronskian_oracle: entry not pure odd");
            g[j][c] = e.odd;
            if (c + 1 < mu)
                e = qe_derivative(e, fprime_over_2f);
        }
    }
    RatFunc d = det_ratfunc(g);
    // alpha = det(g) y^mu = (f^-n y)^mu P  =>  P = det(g) f^(n mu)
    RatFunc P = d * f.pow((unsigned) (n * mu));
    return P.as_poly();
}

} // namespace keypoly
