#include "keypoly/realroots.hpp"

#include "keypoly/elimination.hpp"

namespace keypoly {

const std::vector<Rational> default_lambda_grid = {
    rat(-5),    rat(-2),    rat(-1),    rat(-1, 2), rat(-1, 10), rat(1, 10), rat(1, 4),
    rat(1, 2),  rat(3, 4),  rat(9, 10), rat(11, 10), rat(3, 2),  rat(2),     rat(5)};

UPoly specialized_gen_key_poly(const CurveFamily & family, int mu, int n,
                               const Rational & lambda0)
{
    if (mu == 1)
        return key_poly(family, n).eval_lambda(lambda0);
    if (mu == 2 || mu == 3)
        return gen_key_poly_closed(family, mu, n).eval_lambda(lambda0);
    return gen_key_poly_det(family, mu, n).eval_lambda(lambda0);
}

int count_positive_f_roots(const CurveFamily & family, int mu, int n, const Rational & lambda0)
{
    if (family.degenerate_at(lambda0))
        throw DegenerateCurve("inseparable cubic at lambda = " + rat_string(lambda0));
    UPoly P = specialized_gen_key_poly(family, mu, n, lambda0);
    if (P.is_zero())
        throw InternalError("count_positive_f_roots: specialized polynomial vanished");
    UPoly f0 = family.f().eval_lambda(lambda0);
    // roots shared with f are ramification points, not counted
    for (UPoly g = gcd(P, f0); g.degree() > 0; g = gcd(P, f0))
        P = exact_div(P, g);
    if (P.degree() < 1)
        return 0;
    auto proots = isolate_roots(P);
    auto froots = isolate_roots(f0);
    int count = 0;
    for (auto & iv : proots) {
        bool clash = true;
        while (clash) {
            clash = false;
            for (auto & fv : froots) {
                if (iv.hi <= fv.lo || fv.hi <= iv.lo)
                    continue;
                clash = true;
                if (!iv.exact())
                    refine_interval(P, iv, (iv.hi - iv.lo) / 2);
                if (!fv.exact())
                    refine_interval(f0, fv, (fv.hi - fv.lo) / 2);
            }
        }
        int s = sign(f0.eval(iv.mid()));
        iv.sign_of_f = s > 0 ? FSign::positive : s < 0 ? FSign::negative : FSign::zero;
        if (s > 0)
            count++;
    }
    return count;
}

std::vector<RootInterval> annotated_real_roots(const CurveFamily & family, int mu, int n,
                                               const Rational & lambda0)
{
    if (family.degenerate_at(lambda0))
        throw DegenerateCurve("inseparable cubic at lambda = " + rat_string(lambda0));
    UPoly P = specialized_gen_key_poly(family, mu, n, lambda0);
    std::vector<RootInterval> out;
    if (P.degree() < 1)
        return out;
    UPoly f0 = family.f().eval_lambda(lambda0);
    UPoly shared = gcd(P, f0);
    UPoly sf = squarefree_part(P);
    auto proots = isolate_roots(P);
    auto froots = isolate_roots(f0);
    for (auto iv : proots) {
        bool ram = iv.exact() ? is_zero(f0.eval(iv.lo))
                              : shared.degree() > 0 &&
                                    SturmChain(squarefree_part(shared)).count(iv.lo, iv.hi) > 0;
        if (ram) {
            iv.sign_of_f = FSign::zero;
            out.push_back(iv);
            continue;
        }
        bool clash = true;
        while (clash) {
            clash = false;
            for (auto & fv : froots) {
                if (iv.exact() || iv.hi <= fv.lo || fv.hi <= iv.lo)
                    continue;
                clash = true;
                refine_interval(sf, iv, (iv.hi - iv.lo) / 2);
                if (!fv.exact())
                    refine_interval(f0, fv, (fv.hi - fv.lo) / 2);
            }
        }
        iv.sign_of_f = sign(f0.eval(iv.mid())) > 0 ? FSign::positive : FSign::negative;
        out.push_back(iv);
    }
    return out;
}

bool separability_check(const CurveFamily & family, int n, const Rational & lambda0)
{
    UPoly P = key_poly(family, n).eval_lambda(lambda0);
    if (P.degree() < 1)
        return true;
    return gcd(P, P.derivative()).degree() == 0;
}

namespace {

UPoly lambda_part(const BiPoly & p)
{
    UPoly r('l');
    for (auto & [e, k] : p.t) {
        if (e.first != 0)
            throw InternalError("expected a polynomial in lambda only");
        if ((int) r.c.size() <= e.second)
            r.c.resize(e.second + 1, Rational(0));
        r.c[e.second] = k;
    }
    r.trim();
    return r;
}

UPoly x_part(const BiPoly & p)
{
    UPoly r('x');
    for (auto & [e, k] : p.t) {
        if (e.second != 0)
            throw InternalError("expected a polynomial in x only");
        if ((int) r.c.size() <= e.first)
            r.c.resize(e.first + 1, Rational(0));
        r.c[e.first] = k;
    }
    r.trim();
    return r;
}

} // namespace

DiscRootsResult disc_real_roots(const CurveFamily & family, int n, DiscWhich which,
                                int threads)
{
    if (which == DiscWhich::lambda_disc_in_x && n < 2)
        throw std::invalid_argument("lambda-direction discriminant needs n >= 2");
    BiPoly p = key_poly(family, n);
    UPoly D = which == DiscWhich::x_disc_in_lambda ? lambda_part(discriminant_x(p, threads))
                                                   : x_part(discriminant_lambda(p));
    DiscRootsResult res;
    int a = strip_root(D, Rational(0));
    int b = strip_root(D, Rational(1));
    if (a)
        res.roots.push_back({Rational(0), Rational(0), FSign::zero, a});
    if (b)
        res.roots.push_back({Rational(1), Rational(1), FSign::zero, b});
    bool others = D.degree() >= 1 && !no_real_roots_certificate(D);
    if (others) {
        auto extra = isolate_roots(D);
        UPoly sf = squarefree_part(D);
        for (auto & iv : extra) {
            refine_interval(sf, iv, rat(1, 1000000));
            res.roots.push_back(iv);
        }
    }
    res.roots_exactly_0_1 = !others && a > 0 && b > 0;
    return res;
}

std::vector<SingularCandidate> singular_points_affine(const CurveFamily & family, int n)
{
    if (n < 2)
        throw std::invalid_argument("singular_points_affine needs n >= 2");
    BiPoly p = key_poly(family, n);
    auto [r1, r2] = eliminate_singular_candidates(p);
    UPoly G;
    if (r1.is_zero())
        G = squarefree_part(r2);
    else if (r2.is_zero())
        G = squarefree_part(r1);
    else
        G = gcd(squarefree_part(r1), squarefree_part(r2));
    std::vector<SingularCandidate> out;
    if (G.degree() < 1)
        return out;
    BiPoly px = p.derivative(Var::x), pl = p.derivative(Var::lambda);
    make_primitive(G);
    Rational L = abs(G.lc());
    Rational width = 1 / (L * L + 1);
    for (auto iv : isolate_roots(G)) {
        if (!iv.exact()) {
            refine_interval(G, iv, width);
            if (!iv.exact()) {
                Rational s = simplest_in_open(iv.lo, iv.hi);
                if (is_zero(G.eval(s)))
                    iv.lo = iv.hi = s;
            }
        }
        if (!iv.exact()) {
            // irrational x-candidate: reported, never dropped
            SingularCandidate c;
            c.exact = false;
            c.x_box = iv;
            out.push_back(std::move(c));
            continue;
        }
        Rational x0 = iv.lo;
        UPoly g = gcd(gcd(p.eval_x(x0), px.eval_x(x0)), pl.eval_x(x0));
        if (g.degree() < 1)
            continue; // no common lambda, candidate was spurious
        for (auto lv : isolate_roots(g)) {
            SingularCandidate c;
            c.x = x0;
            c.x_box = {x0, x0, FSign::zero, 1};
            if (!lv.exact()) {
                make_primitive(g);
                Rational Lg = abs(g.lc());
                refine_interval(g, lv, 1 / (Lg * Lg + 1));
                if (!lv.exact()) {
                    Rational s = simplest_in_open(lv.lo, lv.hi);
                    if (is_zero(g.eval(s)))
                        lv.lo = lv.hi = s;
                }
            }
            c.exact = lv.exact();
            if (c.exact)
                c.lambda = lv.lo;
            c.lambda_box = lv;
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace keypoly
