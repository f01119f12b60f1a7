#ifndef KEYPOLY_FAMILIES_HPP
#define KEYPOLY_FAMILIES_HPP

#include "keypoly/bipoly.hpp"

#include <deque>
#include <vector>

namespace keypoly {

enum class FamilyKind { Legendre, ConjugatePair, FixedCubic };

/* One-parameter cubic family y^2 = f(x, lambda):
 *   Legendre:      f = x(x-1)(x-lambda)         = x^3 - (1+lambda)x^2 + lambda x
 *   ConjugatePair: f = x((x-1)^2 + lambda^2)    = x^3 - 2x^2 + (1+lambda^2)x
 *   FixedCubic:    a separable cubic in Q[x] (lambda-free) */
struct CurveFamily {
    FamilyKind kind;
    UPoly cubic; // FixedCubic only

    static CurveFamily legendre() { return {FamilyKind::Legendre, {}}; }
    static CurveFamily conjugate_pair() { return {FamilyKind::ConjugatePair, {}}; }
    static CurveFamily fixed(UPoly f);

    BiPoly f() const;

    /* lambda values where the family degenerates (f inseparable). */
    bool degenerate_at(const Rational & lambda0) const;
    std::string name() const;
};

/* Key polynomials P_n, memoized per family. P_0 = 1, P_1 = f'/2,
 * P_{n+1} = (dP_n/dx) f + (1/2 - n) P_n (df/dx). Append-only cache. */
class KeyFamily {
  public:
    explicit KeyFamily(CurveFamily fam) : fam_(std::move(fam)) {}

    const CurveFamily & family() const { return fam_; }
    const BiPoly & f() const;
    const BiPoly & key_poly(int n) const;

  private:
    CurveFamily fam_;
    mutable BiPoly f_;
    mutable std::deque<BiPoly> cache_; // deque: stable references as the cache grows
};

BiPoly key_poly(const CurveFamily & family, int n);

/* Closed-form generalized key polynomials (mu = 2 for n >= 1,
 * mu = 3 for n >= 2). */
BiPoly gen_key_poly_closed(const KeyFamily & kf, int mu, int n);
BiPoly gen_key_poly_closed(const CurveFamily & family, int mu, int n);

/* Determinant construction for any mu >= 1 with n - mu + 1 >= 0: the
 * mu x mu matrix Q with Q(j, c) = sum_i C(n+c, i) (j)_i x^(j-i) f^i
 * P_{n+c-i} is assembled, det(Q) is divided exactly by f^(mu(mu-1)/2),
 * and the quotient is P_{mu,n}. Inexact division throws InternalError. */
BiPoly gen_key_poly_det(const KeyFamily & kf, int mu, int n);
BiPoly gen_key_poly_det(const CurveFamily & family, int mu, int n);

/* Independent oracle: the mu x mu Wronskian of {y, xy, ..., x^(mu-1) y}
 * at derivative orders n..n+mu-1, computed symbolically in
 * Q(x)[y]/(y^2 - f(x, lambda0)) using y' = f' y / (2f). The factor
 * (f^-n y)^mu is extracted and denominators cleared; the result equals
 * P_{mu,n}(x, lambda0). */
UPoly wronskian_oracle(const CurveFamily & family, int mu, int n, const Rational & lambda0);

/* Exact division of p by q, where q is monic in x; throws InternalError
 * if the division is not exact. */
BiPoly bipoly_exact_div(const BiPoly & p, const BiPoly & q);

} // namespace keypoly

#endif
