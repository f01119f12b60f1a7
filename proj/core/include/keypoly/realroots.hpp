#ifndef KEYPOLY_REALROOTS_HPP
#define KEYPOLY_REALROOTS_HPP

#include "keypoly/families.hpp"
#include "keypoly/sturm.hpp"

#include <vector>

namespace keypoly {

/* Number of real roots gamma of P_{mu,n}(x, lambda0) with
 * f(gamma, lambda0) > 0. Roots shared with f are ramification points
 * and are excluded from the count. */
int count_positive_f_roots(const CurveFamily & family, int mu, int n, const Rational & lambda0);

/* All real roots of P_{mu,n}(., lambda0), each tagged with the sign of
 * f there (zero marks a ramification point shared with f). */
std::vector<RootInterval> annotated_real_roots(const CurveFamily & family, int mu, int n,
                                               const Rational & lambda0);

/* gcd(P_n(., lambda0), d/dx P_n(., lambda0)) is constant. */
bool separability_check(const CurveFamily & family, int n, const Rational & lambda0);

enum class DiscWhich { x_disc_in_lambda, lambda_disc_in_x };

struct DiscRootsResult {
    std::vector<RootInterval> roots;
    bool roots_exactly_0_1;
};

DiscRootsResult disc_real_roots(const CurveFamily & family, int n, DiscWhich which,
                                int threads = 1);

/* Affine singular point candidate. Rational points carry exact
 * coordinates; irrational x-candidates are reported as isolating boxes
 * with exact = false rather than dropped. */
struct SingularCandidate {
    bool exact;
    Rational x, lambda;
    RootInterval x_box, lambda_box;
};

std::vector<SingularCandidate> singular_points_affine(const CurveFamily & family, int n);

/* Specialized generalized key polynomial P_{mu,n}(x, lambda0). */
UPoly specialized_gen_key_poly(const CurveFamily & family, int mu, int n,
                               const Rational & lambda0);

extern const std::vector<Rational> default_lambda_grid;

} // namespace keypoly

#endif
