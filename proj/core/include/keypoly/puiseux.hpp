#ifndef KEYPOLY_PUISEUX_HPP
#define KEYPOLY_PUISEUX_HPP

#include "keypoly/bipoly.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace keypoly {

struct PolygonEdge {
    std::pair<int, int> from, to; // lattice points (x-exp, lambda-exp), from.first < to.first
    Rational slope;               // negative
    int lattice_width;            // to.first - from.first
    Rational gamma() const { return -1 / slope; } // branch exponent x^gamma
};

/* Lower Newton polygon of p at a center translated to the origin. Only
 * the strictly descending part of the hull is kept: those edges carry
 * the branches lambda ~ c x^gamma with gamma > 0. */
struct NewtonPolygon {
    std::vector<std::pair<int, int>> support;
    std::vector<std::pair<int, int>> vertices;
    std::vector<PolygonEdge> edges;
};

NewtonPolygon newton_polygon(const BiPoly & p, const std::pair<Rational, Rational> & center);

/* Substitute lambda = c x^gamma and collect the coefficient of the
 * minimal x-power: sum of a_{ij} c^j over lattice points on the edge. */
UPoly edge_polynomial(const BiPoly & p, const std::pair<Rational, Rational> & center,
                      const PolygonEdge & edge);

enum class BranchReality { real, complex_pair, unresolved };

struct PuiseuxBranch {
    std::pair<Rational, Rational> center;
    Rational gamma1;
    std::vector<QuadExt> coeffs; // c1, c2, ... for real branches
    UPoly factor;                // minimal polynomial of c1 when not real
    BranchReality reality = BranchReality::real;

    int truncation() const { return (int) coeffs.size(); }
};

/* One-term branches from every hull edge: a real branch per real root
 * of the edge polynomial (coefficients in Q or Q(sqrt(d))), a
 * complex_pair marker per conjugate root pair, and an unresolved marker
 * for irreducible factors of degree >= 3. Roots c = 0 belong to
 * steeper edges and are skipped. */
std::vector<PuiseuxBranch> initial_branches(const BiPoly & p,
                                            const std::pair<Rational, Rational> & center);

/* Extend a real branch with integer gamma1 to the given number of
 * coefficients by the regular slope -1 iteration. Throws
 * IrregularBranch when the linear lowest-order step degenerates. */
PuiseuxBranch continue_branch(const BiPoly & p, const PuiseuxBranch & branch, int terms);

constexpr int residual_order_infinite = std::numeric_limits<int>::max();

/* x-order of p(x, s(x)) for the truncated series s; the sentinel when
 * the residual vanishes identically. */
int branch_residual_order(const BiPoly & p, const PuiseuxBranch & branch);

/* r = s^2 d with d a squarefree integer, s rational, for r > 0. */
std::pair<Rational, Integer> squarefree_core(const Rational & r);

std::string branch_json(const PuiseuxBranch & branch, int residual_order);

} // namespace keypoly

#endif
