#ifndef KEYPOLY_ANALYSIS_HPP
#define KEYPOLY_ANALYSIS_HPP

#include "keypoly/families.hpp"
#include "keypoly/realroots.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace keypoly {

struct ReportRow {
    std::string label;
    std::string expected, observed;
    bool pass;
};

/* Aggregated pass/fail rows for one verification suite. The verdict is
 * VERIFIED-UP-TO-BOUND when every row passes, FALSIFIED otherwise;
 * failing rows keep enough detail to reproduce the check. */
struct VerificationReport {
    std::string suite;
    std::string bounds;
    std::vector<ReportRow> rows;
    double seconds = 0;

    bool all_pass() const;
    std::string verdict() const;
};

std::string report_json(const VerificationReport & r);

/* For each mu <= mu_max, mu + 2 <= n <= n_max and lambda0 in grid:
 * the number of real roots gamma of P_{mu,n}(., lambda0) with
 * f(gamma, lambda0) > 0 should be mu when n - mu is odd and 2 mu when
 * n - mu is even. Degenerate lambda0 values (0 and 1) are rejected and
 * reported as DegenerateCurve rows. */
VerificationReport verify_numerology(int mu_max, int n_max, const std::vector<Rational> & grid);

/* Exact low-degree identities:
 *  (a) P_2(x, -2x^3 + 3x^2 -+ 2 s^3) = 0 in Q[x,s]/(s^2 - (x^2 - x))
 *  (b) the depressed-cubic discriminant of P_3 satisfies
 *      Delta (1-2x)^4 = -(16/27) x^8 (x-1)^8
 *  (c) U_1^2 - U_2 = (64/27)((x - 1/2)^2 + 1/12)^3, with U_1, U_2
 *      extracted from the resolvent-cubic data of P_4
 *  (d) the resolvent constant term q_0 and discriminant Delta_0 of P_4
 *      match their factored closed forms
 *  (e) P_5(x, x) = (105/32) x^5 (x-1)^5  */
VerificationReport casework_identities();

/* Floating-point check of the closed-form root parametrizations:
 * n = 3 uses the trigonometric (Cardano) solution of the depressed
 * cubic, n = 4 the Ferrari quartic solution through the resolvent
 * cubic. Samples must avoid {0, 1, 1/2}, and [0, 1] entirely for
 * n = 4. Also checks the two sign claims that select the real Ferrari
 * root pair. */
VerificationReport numeric_parametrization_check(int n, const std::vector<double> & x_samples,
                                                 double tol);

struct ProfileError : std::runtime_error {
    explicit ProfileError(const std::string & what) : std::runtime_error(what) {}
};

/* Exact per-interval description of the real locus of P_n(x, lambda) = 0
 * over one of the x-intervals (-inf, 0), (0, 1), (1, inf).
 *
 * branch_count counts topological branches over the interval; when the
 * vertical asymptote at x = 1/2 is present, the counts left and right
 * of 1/2 are glued through the count at 1/2 itself.
 * order_pattern lists branches top to bottom at a representative
 * sample, '+' above the line lambda = x and '-' below; for the split
 * interval the two half-patterns are joined by '|'. */
struct IntervalProfile {
    int branch_count = 0;
    bool monotone = false;
    bool asymptote_at_half = false;
    bool incidence_00 = false, incidence_11 = false;
    std::string order_pattern;

    bool operator==(const IntervalProfile &) const = default;
};

struct ProfileSignature {
    std::array<IntervalProfile, 3> intervals; // (-inf,0), (0,1), (1,inf)

    bool operator==(const ProfileSignature &) const = default;
};

/* Certified profile of the real locus of P_n = 0. Branch counts come
 * from Sturm counts at samples_per_interval points per interval and are
 * required to be constant; monotonicity is the exact certificate that
 * Res_lambda(P_n, dP_n/dx) has no real roots off {0, 1}; incidences at
 * (0,0) and (1,1) are window counts just inside the interval ends.
 * Non-constant counts throw ProfileError. */
ProfileSignature profile_extract(int n, int samples_per_interval = 50);

/* profile_extract(n) == profile_extract(n mod 2 + 2) */
bool profile_compare(int n);

/* Inflection bookkeeping for the degree-(g+2) series: total real plus
 * complex inflection count (2g+2)(g+3), the part absorbed by
 * ramification, and the remainder 2 deg_x(P_{g+2}). */
struct InflectionBudget {
    long total, ramification, away;
};

InflectionBudget inflection_budget(int g);

/* Real inflectionary degree 2g(g+1) + 2(k-g)(g-1) + 2g(1 + g mod 2)(k-g)
 * for degree-k series on a genus-g curve; requires k > g >= 1. */
long omega_real(int k, int g);

/* Consolidated run of every suite: degrees, symmetry, separability,
 * discriminant degrees, root numerology, singular locus, profiles,
 * lambda-discriminant real roots, casework identities, branch data at
 * the origin, numeric parametrizations, counting formulas. Heavy
 * per-n suites are capped at n = 5 independently of n_max. A positive
 * budget_seconds aborts between suites with BudgetExceeded. */
VerificationReport verify_all(int n_max = 6, int mu_max = 3,
                              const std::vector<Rational> & grid = default_lambda_grid,
                              double budget_seconds = 0);

} // namespace keypoly

#endif
