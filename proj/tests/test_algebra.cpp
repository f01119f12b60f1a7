#include <doctest.h>

#include "keypoly/bipoly.hpp"
#include "keypoly/families.hpp"
#include "keypoly/jsonio.hpp"
#include "keypoly/quotient.hpp"
#include "keypoly/ratfunc.hpp"

#include <random>

using namespace keypoly;

namespace {

BiPoly random_bipoly(std::mt19937 & rng, int terms = 5)
{
    std::uniform_int_distribution<int> e(0, 4), c(-6, 6);
    BiPoly p;
    for (int t = 0; t < terms; t++)
        p.add_term(e(rng), e(rng), Rational(c(rng)));
    return p;
}

} // namespace

TEST_CASE("rational parse/format round-trip")
{
    CHECK(rat_string(rat_parse("3/6")) == "1/2");
    CHECK(rat_string(rat_parse("-4/2")) == "-2/1");
    CHECK(rat_string(Rational(0)) == "0/1");
    CHECK_THROWS(rat_parse("abc"));
}

TEST_CASE("poly_arith examples")
{
    // (x + lambda) + (x - lambda) = 2x
    BiPoly a = BiPoly::term(1, 0, 1) + BiPoly::term(0, 1, 1);
    BiPoly b = BiPoly::term(1, 0, 1) - BiPoly::term(0, 1, 1);
    CHECK(a + b == BiPoly::term(1, 0, 2));

    // Legendre cubic expands to x^3 - (1+lambda)x^2 + lambda x
    BiPoly x = BiPoly::term(1, 0, 1);
    BiPoly lam = BiPoly::term(0, 1, 1);
    BiPoly one = BiPoly::constant(1);
    BiPoly f = x * (x - one) * (x - lam);
    CHECK(f == CurveFamily::legendre().f());

    // conjugate-pair cubic: x((x-1)^2 + lambda^2) = x^3 - 2x^2 + (1+lambda^2)x
    BiPoly fc = x * ((x - one) * (x - one) + lam * lam);
    CHECK(fc == CurveFamily::conjugate_pair().f());
}

TEST_CASE("poly_derivative examples")
{
    BiPoly f = CurveFamily::legendre().f();
    BiPoly dx;
    dx.add_term(2, 0, 3);
    dx.add_term(1, 0, -2);
    dx.add_term(1, 1, -2);
    dx.add_term(0, 1, 1);
    CHECK(f.derivative(Var::x) == dx);
    BiPoly dl = BiPoly::term(1, 0, 1) - BiPoly::term(2, 0, 1);
    CHECK(f.derivative(Var::lambda) == dl);
    CHECK(BiPoly::constant(7).derivative(Var::x).is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(12345);
    for (int it = 0; it < 50; it++) {
        BiPoly a = random_bipoly(rng), b = random_bipoly(rng), c = random_bipoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("derivative linearity and Leibniz rule")
{
    std::mt19937 rng(999);
    for (int it = 0; it < 30; it++) {
        BiPoly a = random_bipoly(rng), b = random_bipoly(rng);
        for (Var v : {Var::x, Var::lambda}) {
            CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
        }
    }
}

TEST_CASE("affine_shift examples and involution")
{
    // P1 = (3x^2 - 2(1+lambda)x + lambda)/2
    BiPoly P1 = key_poly(CurveFamily::legendre(), 1);
    BiPoly expect;
    expect.add_term(2, 0, Rational(3, 2));
    expect.add_term(1, 0, 1);
    expect.add_term(1, 1, -1);
    expect.add_term(0, 1, Rational(-1, 2));
    // shifted: (3x^2 + (2-2lambda)x - lambda)/2
    CHECK(affine_shift(P1, ShiftMode::shift_plus_one) == expect);
    CHECK(affine_shift(P1, ShiftMode::negate) == expect);

    // f(x+1, lambda+1) = -f(-x, -lambda)
    BiPoly f = CurveFamily::legendre().f();
    CHECK(affine_shift(f, ShiftMode::shift_plus_one) == -affine_shift(f, ShiftMode::negate));

    std::mt19937 rng(7);
    for (int it = 0; it < 20; it++) {
        BiPoly a = random_bipoly(rng);
        auto m1 = [](const BiPoly & p) { return affine_shift(p, ShiftMode::shift_plus_one); };
        auto m2 = [](const BiPoly & p) { return affine_shift(p, ShiftMode::negate); };
        CHECK(m1(m2(m1(m2(a)))) == a);
        CHECK(m2(m2(a)) == a);
    }
}

TEST_CASE("homogenize_swap")
{
    BiPoly P1 = key_poly(CurveFamily::legendre(), 1);
    // symmetric under lambda <-> z at total degree 2
    CHECK(homogenize_swap(P1, 2) == P1);
    BiPoly x2 = BiPoly::term(2, 0, 1);
    CHECK(homogenize_swap(x2, 2) == x2);
    // lambda at degree 1 -> z, i.e. the constant-slot monomial with j = 0
    CHECK(homogenize_swap(BiPoly::term(0, 1, 1), 1) == BiPoly::term(0, 0, 1));
    CHECK_THROWS(homogenize_swap(x2, 1));
}

TEST_CASE("quotient ring reduction")
{
    // s^3 mod (s^2 - (x^2 - x)) = (x^2 - x) s
    UPoly g({Rational(0), Rational(-1), Rational(1)}); // x^2 - x
    std::vector<UPoly> s3 = {UPoly(), UPoly(), UPoly(), UPoly({Rational(1)})};
    auto r = quotient_reduce(s3, g);
    CHECK(r.even.is_zero());
    CHECK(r.odd == g);

    std::vector<UPoly> s2 = {UPoly(), UPoly(), UPoly({Rational(1)})};
    auto r2 = quotient_reduce(s2, g);
    CHECK(r2.even == g);
    CHECK(r2.odd.is_zero());

    // multiplication rule (a + bs)(c + ds) = (ac + bd g) + (ad + bc)s
    using QE = QuotientElem<UPoly>;
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    auto rnd = [&] {
        return QE(UPoly({Rational(c(rng)), Rational(c(rng))}),
                  UPoly({Rational(c(rng)), Rational(c(rng))}), g);
    };
    for (int it = 0; it < 20; it++) {
        QE a = rnd(), b = rnd(), d = rnd();
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * b == QE(a.even * b.even + a.odd * b.odd * g,
                          a.even * b.odd + a.odd * b.even, g));
    }
}

TEST_CASE("ratfunc normalization")
{
    UPoly x({Rational(0), Rational(1)});
    RatFunc r(x * x - x, x); // (x^2-x)/x = x-1
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == x - UPoly({Rational(1)}));
    RatFunc q(UPoly({Rational(1)}), x);
    CHECK((q * RatFunc(x)).as_poly() == UPoly({Rational(1)}));
}

TEST_CASE("polynomial JSON round-trip")
{
    BiPoly P2 = key_poly(CurveFamily::legendre(), 2);
    std::string s = bipoly_to_json(P2);
    CHECK(bipoly_from_json(s) == P2);
    CHECK(bipoly_to_json(bipoly_from_json(s)) == s);

    std::mt19937 rng(42);
    for (int it = 0; it < 25; it++) {
        BiPoly a = random_bipoly(rng, 8);
        CHECK(bipoly_from_json(bipoly_to_json(a)) == a);
    }
}

TEST_CASE("quadext arithmetic and sign")
{
    QuadExt r5(Rational(0), Rational(1, 4), Rational(5)); // sqrt(5)/4
    CHECK((r5 * r5) == QuadExt(Rational(5, 16)));
    CHECK(sign(r5) == 1);
    CHECK(sign(-r5) == -1);
    QuadExt a(Rational(-9, 4), Rational(1), Rational(5)); // sqrt5 - 9/4 < 0
    CHECK(sign(a) == -1);
    QuadExt b(Rational(-2), Rational(1), Rational(5)); // sqrt5 - 2 > 0
    CHECK(sign(b) == 1);
    CHECK((b / b) == QuadExt(Rational(1)));
    CHECK_THROWS(QuadExt(Rational(0), Rational(1), Rational(4)));
    QuadExt s3(Rational(1), Rational(1), Rational(3));
    CHECK_THROWS(b * s3);
}
