#include <doctest.h>

#include "keypoly/jsonio.hpp"
#include "keypoly/realroots.hpp"

#include <cmath>
#include <random>

using namespace keypoly;

TEST_CASE("isolate cubic roots")
{
    // x^3 - x
    UPoly p({Rational(0), Rational(-1), Rational(0), Rational(1)});
    auto r = isolate_roots(p);
    REQUIRE(r.size() == 3);
    CHECK(r[0].hi <= r[1].lo);
    CHECK(r[1].hi <= r[2].lo);
    for (auto & iv : r) CHECK(iv.multiplicity == 1);
    // the middle root is hit exactly at a bisection point
    CHECK(r[0].lo < -1);
    CHECK(r[2].hi > 1);
}

TEST_CASE("no real roots")
{
    UPoly p({Rational(1), Rational(0), Rational(1)});
    CHECK(isolate_roots(p).empty());
    CHECK(no_real_roots_certificate(p));
    UPoly q({Rational(-2), Rational(0), Rational(1)});
    CHECK(!no_real_roots_certificate(q));
    // (x^2+x+1)(x^4+3)
    UPoly a({Rational(1), Rational(1), Rational(1)});
    UPoly b({Rational(3), Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(no_real_roots_certificate(a * b));
    CHECK(!no_real_roots_certificate(a * b * UPoly({Rational(0), Rational(1)})));
}

TEST_CASE("quartic specialization has two real roots")
{
    // (3/4)x^4 - 3x^3 + 3x^2 - 1
    UPoly p = key_poly(CurveFamily::legendre(), 2).eval_lambda(Rational(2));
    CHECK(p == UPoly({Rational(-1), Rational(0), Rational(3), Rational(-3), Rational(3, 4)}));
    CHECK(isolate_roots(p).size() == 2);
}

TEST_CASE("multiplicities via squarefree structure")
{
    UPoly x({Rational(0), Rational(1)});
    UPoly one({Rational(1)});
    UPoly p = (x - one).pow(2) * (x + one + one).pow(3) * x;
    auto r = isolate_roots(p);
    REQUIRE(r.size() == 3);
    CHECK(r[0].multiplicity == 3);
    CHECK(r[1].multiplicity == 1);
    CHECK(r[2].multiplicity == 2);
}

TEST_CASE("sturm count matches a brute-force scan")
{
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> d(1, 12), c(-9, 9);
    for (int it = 0; it < 50; it++) {
        std::vector<Rational> cs(d(rng) + 1);
        for (auto & k : cs) k = Rational(c(rng));
        UPoly p(std::move(cs));
        if (p.degree() < 1)
            continue;
        UPoly sf = squarefree_part(p);
        Rational B = cauchy_root_bound(sf);
        int scans = 0;
        Rational step = 2 * B / 4000;
        int last = 0;
        for (Rational t = -B; t <= B; t += step) {
            int s = sign(sf.eval(t));
            if (s == 0)
                s = last; // grid hit a root; the flanks record the crossing
            if (last != 0 && s != last)
                scans++;
            last = s;
        }
        int exact = (int) isolate_roots(sf).size();
        // a fine scan can only miss pairs, never overcount
        CHECK(exact >= scans);
        CHECK((exact - scans) % 2 == 0);
    }
}

TEST_CASE("simplest rational in an interval")
{
    CHECK(simplest_in_open(rat(1, 3), rat(1, 2)) == rat(2, 5));
    CHECK(simplest_in_open(rat(-1, 2), rat(1, 7)) == 0);
    CHECK(simplest_in_open(rat(5, 2), rat(7, 2)) == 3);
    CHECK(simplest_in_open(rat(0), rat(1, 7)) == rat(1, 8));
    CHECK(simplest_in_open(rat(-22, 7), rat(-3)) == rat(-25, 8));
    // brute force: returned value has the minimal denominator
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    for (int it = 0; it < 200; it++) {
        Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
        if (a == b)
            continue;
        if (b < a)
            std::swap(a, b);
        Rational s = simplest_in_open(a, b);
        REQUIRE(a < s);
        REQUIRE(s < b);
        for (long q = 1; q < s.get_den().get_si(); q++) {
            for (long p = (long) floor(a.get_d() * q) - 1; rat(p, q) < b; p++)
                CHECK(!(rat(p, q) > a && rat(p, q) < b));
        }
    }
}

TEST_CASE("rational root extraction")
{
    // (3x-2)(2x+1)(x^2-2)
    UPoly p = UPoly({Rational(-2), Rational(3)}) * UPoly({Rational(1), Rational(2)})
            * UPoly({Rational(-2), Rational(0), Rational(1)});
    auto r = rational_roots(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == rat(-1, 2));
    CHECK(r[1] == rat(2, 3));

    UPoly q = p;
    CHECK(strip_root(q, rat(2, 3)) == 1);
    CHECK(q.degree() == 3);
    CHECK(strip_root(q, rat(2, 3)) == 0);
}

TEST_CASE("positivity-filtered root counts")
{
    CurveFamily leg = CurveFamily::legendre();
    CHECK(count_positive_f_roots(leg, 1, 3, Rational(2)) == 2);
    CHECK(count_positive_f_roots(leg, 1, 4, rat(1, 2)) == 1);
    CHECK(count_positive_f_roots(leg, 2, 4, Rational(-1)) == 4);
    CHECK(count_positive_f_roots(leg, 3, 5, Rational(-1)) == 6);
    CHECK_THROWS_AS((void) count_positive_f_roots(leg, 1, 3, Rational(0)), DegenerateCurve);
    CHECK_THROWS_AS((void) count_positive_f_roots(leg, 1, 3, Rational(1)), DegenerateCurve);
    // regression: these specializations once came out zero and looped forever
    CHECK(count_positive_f_roots(leg, 2, 7, rat(1, 4)) == 2);
    CHECK(count_positive_f_roots(leg, 3, 6, rat(1, 4)) == 3);
}

TEST_CASE("closed form matches determinant for every small n")
{
    // regression: cached references were invalidated while assembling mu=2,3
    CurveFamily leg = CurveFamily::legendre();
    for (int n = 1; n <= 8; n++)
        CHECK(gen_key_poly_closed(leg, 2, n) == gen_key_poly_det(leg, 2, n));
    for (int n = 2; n <= 8; n++)
        CHECK(gen_key_poly_closed(leg, 3, n) == gen_key_poly_det(leg, 3, n));
}

TEST_CASE("complete-series counts on the grid")
{
    CurveFamily leg = CurveFamily::legendre();
    for (int mu : {1, 2, 3})
        for (Rational l0 : {rat(-1), rat(1, 4), rat(2)})
            CHECK(count_positive_f_roots(leg, mu, mu + 2, l0) == 2 * mu);
}

TEST_CASE("separability checks")
{
    CHECK(separability_check(CurveFamily::legendre(), 4, rat(1, 2)));
    CHECK(separability_check(CurveFamily::conjugate_pair(), 4, rat(57735, 100000)));
    for (auto & l0 : default_lambda_grid)
        CHECK(separability_check(CurveFamily::legendre(), 1, l0));
}

TEST_CASE("discriminant real roots, x direction")
{
    auto r = disc_real_roots(CurveFamily::legendre(), 4, DiscWhich::x_disc_in_lambda);
    CHECK(r.roots_exactly_0_1);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].lo == 0);
    CHECK(r.roots[1].lo == 1);

    auto c = disc_real_roots(CurveFamily::conjugate_pair(), 4, DiscWhich::x_disc_in_lambda);
    CHECK(!c.roots_exactly_0_1);
    // roots at 0 and at +-1/sqrt(3) ~ +-0.57735
    bool low = false, high = false;
    for (auto & iv : c.roots) {
        if (iv.lo > rat(-5774, 10000) && iv.hi < rat(-5773, 10000))
            low = true;
        if (iv.lo > rat(5773, 10000) && iv.hi < rat(5774, 10000))
            high = true;
    }
    CHECK(low);
    CHECK(high);
}

TEST_CASE("discriminant real roots, lambda direction")
{
    auto r = disc_real_roots(CurveFamily::legendre(), 5, DiscWhich::lambda_disc_in_x);
    CHECK(r.roots_exactly_0_1);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].multiplicity == 24);
    CHECK(r.roots[1].multiplicity == 24);
}

TEST_CASE("affine singular points")
{
    for (int n : {2, 3, 4}) {
        auto pts = singular_points_affine(CurveFamily::legendre(), n);
        REQUIRE(pts.size() == 2);
        for (auto & p : pts) REQUIRE(p.exact);
        CHECK(pts[0].x == 0);
        CHECK(pts[0].lambda == 0);
        CHECK(pts[1].x == 1);
        CHECK(pts[1].lambda == 1);
    }
}

TEST_CASE("root report serialization")
{
    UPoly p({Rational(0), Rational(-1), Rational(0), Rational(1)});
    auto roots = isolate_roots(p);
    std::string j = root_report_json(unipoly_to_json(p, "x"), roots);
    CHECK(j.find("\"roots\"") != std::string::npos);
    CHECK(j.find("\"multiplicity\":1") != std::string::npos);
    CHECK(j.find("\"sign_of_f\":\"zero\"") != std::string::npos);
}
