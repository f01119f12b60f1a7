#ifndef KEYPOLY_STURM_HPP
#define KEYPOLY_STURM_HPP

#include "keypoly/unipoly.hpp"

#include <string>
#include <vector>

namespace keypoly {

/* Sturm sequence p, p', then negated remainders, each rescaled to a
 * primitive integer vector (a positive factor, so sign variations are
 * unchanged). */
struct SturmChain {
    std::vector<UPoly> seq;

    explicit SturmChain(const UPoly & p);

    int variations_at(const Rational & a) const;
    int variations_at_inf(int dir) const; // dir = +1 or -1

    /* number of distinct real roots in (a, b], a < b, p(a) != 0 */
    int count(const Rational & a, const Rational & b) const;
    int count_real() const;
};

enum class FSign { positive, negative, zero };

struct RootInterval {
    Rational lo, hi;        // lo == hi for an exact rational root
    FSign sign_of_f = FSign::zero;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};

/* All real roots lie in (-B, B). */
Rational cauchy_root_bound(const UPoly & p);

/* Disjoint isolating intervals for all distinct real roots of p, sorted
 * by position, with multiplicities from the squarefree decomposition.
 * Open intervals whose endpoints are not roots, or exact points. */
std::vector<RootInterval> isolate_roots(const UPoly & p);

/* Halve the interval (keeping the root inside) until hi - lo < width.
 * p must change sign on the interval; exact roots are left alone. */
void refine_interval(const UPoly & p, RootInterval & iv, const Rational & width);

/* True certifies that p has no real roots (bisected Descartes counts
 * over integers). False means a real root exists. */
bool no_real_roots_certificate(const UPoly & p);

/* Strip the factor (x - r)^k, returning k. */
int strip_root(UPoly & p, const Rational & r);

/* The unique fraction of smallest denominator strictly between lo and
 * hi. */
Rational simplest_in_open(const Rational & lo, const Rational & hi);

/* All rational roots, found by isolating real roots, refining below the
 * rational-root separation bound, and testing the simplest candidate. */
std::vector<Rational> rational_roots(const UPoly & p);

std::string root_report_json(const std::string & poly_json,
                             const std::vector<RootInterval> & roots);

} // namespace keypoly

#endif
