// One pass/fail line per acceptance criterion; exit 0 iff all pass.

#include "keypoly/analysis.hpp"
#include "keypoly/elimination.hpp"
#include "keypoly/puiseux.hpp"
#include "keypoly/realroots.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

using namespace keypoly;

static int failures = 0;

static void criterion(int num, const std::string & desc, const std::function<bool()> & run)
{
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception & e) {
        note = std::string(" [") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s - %s (%.1fs)%s\n", num, ok ? "PASS" : "FAIL", desc.c_str(),
                secs, note.c_str());
    std::fflush(stdout);
    if (!ok)
        failures++;
}

static BiPoly term(int i, int j, const Rational & c)
{
    BiPoly r;
    r.add_term(i, j, c);
    return r;
}

// the displayed forms of P_2 .. P_5
static BiPoly display_p2()
{
    return term(0, 2, rat(-1, 4)) + term(3, 1, rat(-1)) + term(2, 1, rat(3, 2)) +
           term(3, 0, rat(-1)) + term(4, 0, rat(3, 4));
}

static BiPoly display_p3()
{
    return term(1, 3, rat(-3, 4)) + term(0, 3, rat(3, 8)) + term(2, 2, rat(15, 8)) +
           term(1, 2, rat(-3, 4)) + term(5, 1, rat(3, 4)) + term(4, 1, rat(-15, 8)) +
           term(6, 0, rat(-3, 8)) + term(5, 0, rat(3, 4));
}

static BiPoly display_p4()
{
    return term(2, 4, rat(-3)) + term(1, 4, rat(3)) + term(0, 4, rat(-15, 16)) +
           term(3, 3, rat(21, 2)) + term(2, 3, rat(-39, 4)) + term(1, 3, rat(3)) +
           term(4, 2, rat(-105, 8)) + term(3, 2, rat(21, 2)) + term(2, 2, rat(-3)) +
           term(7, 1, rat(-3, 2)) + term(6, 1, rat(21, 4)) + term(8, 0, rat(9, 16)) +
           term(7, 0, rat(-3, 2));
}

static BiPoly display_p5()
{
    return term(10, 0, rat(-45, 32)) + term(9, 0, rat(75, 16)) + term(8, 1, rat(-675, 32)) +
           term(9, 1, rat(75, 16)) + term(3, 2, rat(-15)) + term(4, 2, rat(135, 2)) +
           term(5, 2, rat(-945, 8)) + term(6, 2, rat(1575, 16)) + term(2, 3, rat(45, 2)) +
           term(3, 3, rat(-195, 2)) + term(4, 3, rat(2565, 16)) + term(5, 3, rat(-945, 8)) +
           term(1, 4, rat(-225, 16)) + term(2, 4, rat(1935, 32)) + term(3, 4, rat(-195, 2)) +
           term(4, 4, rat(135, 2)) + term(0, 5, rat(105, 32)) + term(1, 5, rat(-225, 16)) +
           term(2, 5, rat(45, 2)) + term(3, 5, rat(-15));
}

static UPoly lambda_only(const BiPoly & p)
{
    auto cols = p.nested_x();
    return cols.empty() ? UPoly('l') : cols[0];
}

int main()
{
    CurveFamily leg = CurveFamily::legendre();
    CurveFamily conj = CurveFamily::conjugate_pair();
    KeyFamily kf(leg);
    int threads = (int) std::max(1u, std::thread::hardware_concurrency());
    std::pair<Rational, Rational> origin{Rational(0), Rational(0)};

    criterion(1, "displayed key polynomials reproduced exactly", [&] {
        return kf.key_poly(2) == display_p2() && kf.key_poly(3) == display_p3() &&
               kf.key_poly(4) == display_p4() && kf.key_poly(5) == display_p5();
    });

    criterion(2, "deg_x(P_n) = 2n and deg_lambda(P_n) = n for n <= 12", [&] {
        for (int n = 1; n <= 12; n++) {
            const BiPoly & p = kf.key_poly(n);
            if ((int) p.nested_x().size() - 1 != 2 * n ||
                (int) p.nested_lambda().size() - 1 != n)
                return false;
        }
        return true;
    });

    criterion(3, "both symmetry identities for n <= 12", [&] {
        for (int n = 1; n <= 12; n++) {
            const BiPoly & p = kf.key_poly(n);
            if (!(homogenize_swap(p, 2 * n) == p))
                return false;
            if (!(p.shift(Rational(1), Rational(1)) == p.negate_vars()))
                return false;
        }
        return true;
    });

    BiPoly d9; // x-discriminant of P_9, reused by criterion 5
    criterion(4, "discriminant degree law incl. the 218 case", [&] {
        for (const auto & row : disc_degree_report(leg, 7, threads).rows)
            if (!row.match)
                return false;
        for (const auto & row : disc_degree_report(conj, 6, threads).rows)
            if (!row.match)
                return false;
        d9 = discriminant_x(kf.key_poly(9), threads);
        return (int) lambda_only(d9).degree() == 218;
    });

    criterion(5, "discriminant real roots: {0,1} up to n=9, conjugate root near 1/sqrt(3)",
              [&] {
                  for (int n = 2; n <= 8; n++)
                      if (!disc_real_roots(leg, n, DiscWhich::x_disc_in_lambda, threads)
                               .roots_exactly_0_1)
                          return false;
                  UPoly rest = lambda_only(d9);
                  if (rest.is_zero() || strip_root(rest, Rational(0)) == 0 ||
                      strip_root(rest, Rational(1)) == 0)
                      return false;
                  if (rest.degree() > 0 && !no_real_roots_certificate(squarefree_part(rest)))
                      return false;
                  auto c4 = disc_real_roots(conj, 4, DiscWhich::x_disc_in_lambda, threads);
                  Rational lo(5773, 10000), hi(5774, 10000);
                  for (const auto & iv : c4.roots)
                      if (lo < iv.lo && iv.hi < hi)
                          return true;
                  return false;
              });

    criterion(6, "root-count parity over mu <= 3, n <= mu+6, 14-point grid", [&] {
        for (int mu = 1; mu <= 3; mu++)
            for (int n = mu + 2; n <= mu + 6; n++)
                for (const Rational & l0 : default_lambda_grid) {
                    int expect = (n - mu) % 2 != 0 ? mu : 2 * mu;
                    if (count_positive_f_roots(leg, mu, n, l0) != expect)
                        return false;
                }
        return true;
    });

    criterion(7, "closed form vs determinant vs quotient-ring oracle", [&] {
        std::vector<Rational> probes{rat(-1), rat(1, 4), rat(2)};
        for (int mu = 2; mu <= 3; mu++)
            for (int n = mu == 2 ? 1 : 2; n <= 8; n++) {
                BiPoly det = gen_key_poly_det(kf, mu, n);
                if (!(gen_key_poly_closed(kf, mu, n) == det))
                    return false;
                for (const Rational & l0 : probes)
                    if (!(det.eval_lambda(l0) == wronskian_oracle(leg, mu, n, l0)))
                        return false;
            }
        for (int n = 3; n <= 6; n++) {
            BiPoly det = gen_key_poly_det(kf, 4, n);
            for (const Rational & l0 : probes)
                if (!(det.eval_lambda(l0) == wronskian_oracle(leg, 4, n, l0)))
                    return false;
        }
        return true;
    });

    criterion(8, "Newton polygon, edge factors, slope-1 branch through 8 terms", [&] {
        const BiPoly & p5 = kf.key_poly(5);
        auto np = newton_polygon(p5, origin);
        std::vector<std::pair<int, int>> verts{{0, 5}, {3, 2}, {9, 0}};
        if (np.vertices != verts || np.edges.size() != 2 || np.edges[0].slope != rat(-1) ||
            np.edges[1].slope != rat(-1, 3))
            return false;
        // (15/32) c^2 (c-2)(7c^2-16c+16)
        UPoly csq({Rational(0), Rational(0), Rational(1)}, 'c');
        UPoly lin({Rational(-2), Rational(1)}, 'c');
        UPoly quad({Rational(16), Rational(-16), Rational(7)}, 'c');
        if (!(edge_polynomial(p5, origin, np.edges[0]) == csq * lin * quad * rat(15, 32)))
            return false;
        auto branches = initial_branches(p5, origin);
        int l2_real = 0;
        const PuiseuxBranch * l1 = nullptr;
        for (const auto & b : branches) {
            if (b.reality != BranchReality::real)
                continue;
            if (b.gamma1 == 3 && b.coeffs[0].a == 0 && abs(b.coeffs[0].b) == rat(1, 4) &&
                b.coeffs[0].d == 5)
                l2_real++;
            if (b.gamma1 == 1)
                l1 = &b;
        }
        if (l2_real != 2 || !l1)
            return false;
        for (int terms = 1; terms <= 8; terms++) {
            PuiseuxBranch ext = continue_branch(p5, *l1, terms);
            if (branch_residual_order(p5, ext) != 5 + terms)
                return false;
            if (!(ext.coeffs[0] == QuadExt(rat(2))))
                return false;
            if (terms >= 2 && !(ext.coeffs[1] == QuadExt(rat(-1, 3))))
                return false;
        }
        return true;
    });

    criterion(9, "all five exact casework identities", [&] {
        return casework_identities().all_pass();
    });

    criterion(10, "affine singular loci are {(0,0),(1,1)} for n <= 6", [&] {
        for (int n = 2; n <= 6; n++) {
            auto cands = singular_points_affine(leg, n);
            if (cands.size() != 2)
                return false;
            bool s00 = false, s11 = false;
            for (const auto & c : cands) {
                if (!c.exact)
                    return false;
                s00 |= c.x == 0 && c.lambda == 0;
                s11 |= c.x == 1 && c.lambda == 1;
            }
            if (!s00 || !s11)
                return false;
        }
        return true;
    });

    criterion(11, "periodic profiles for n <= 6 with the expected structure", [&] {
        for (int n = 2; n <= 6; n++)
            if (!profile_compare(n))
                return false;
        if (profile_extract(4).intervals[1].branch_count != 0)
            return false;
        auto s3 = profile_extract(3);
        return s3.intervals[0].branch_count == 3 && s3.intervals[1].branch_count == 4 &&
               s3.intervals[2].branch_count == 3 && s3.intervals[0].incidence_00 &&
               !s3.intervals[0].incidence_11 && s3.intervals[1].incidence_00 &&
               s3.intervals[1].incidence_11 && s3.intervals[2].incidence_11 &&
               !s3.intervals[2].incidence_00;
    });

    criterion(12, "counting formulas and inflection budget", [&] {
        if (omega_real(2, 1) != 8 || omega_real(3, 1) != 12 || omega_real(3, 2) != 18)
            return false;
        for (int k = 2; k <= 10; k++)
            if (omega_real(k, 1) != 4 * k)
                return false;
        for (int g = 1; g <= 6; g++)
            if (inflection_budget(g).away != 4 * (g + 2))
                return false;
        return true;
    });

    criterion(13, "float parametrizations: residuals below 1e-9, sign claims", [&] {
        std::vector<double> s3, s4;
        for (int i = 0; i < 20; i++)
            s3.push_back(-5.05 + 0.5 * i);
        for (int i = 0; i < 10; i++) {
            s4.push_back(-0.15 - 0.5 * i);
            s4.push_back(1.15 + 0.5 * i);
        }
        return numeric_parametrization_check(3, s3, 1e-9).all_pass() &&
               numeric_parametrization_check(4, s4, 1e-9).all_pass();
    });

    std::printf("%s: %d/13 criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
                13 - failures);
    return failures == 0 ? 0 : 1;
}
