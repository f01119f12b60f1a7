#include <doctest.h>

#include "keypoly/families.hpp"
#include "keypoly/puiseux.hpp"

using namespace keypoly;

namespace {

const std::pair<Rational, Rational> origin{Rational(0), Rational(0)};
const std::pair<Rational, Rational> one_one{Rational(1), Rational(1)};

BiPoly p5() { return key_poly(CurveFamily::legendre(), 5); }

BiPoly cusp()
{
    // lambda^2 - x^3
    return BiPoly::term(0, 2, 1) - BiPoly::term(3, 0, 1);
}

} // namespace

TEST_CASE("newton polygon of the quintic member")
{
    auto np = newton_polygon(p5(), origin);
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.vertices[0] == std::make_pair(0, 5));
    CHECK(np.vertices[1] == std::make_pair(3, 2));
    CHECK(np.vertices[2] == std::make_pair(9, 0));
    REQUIRE(np.edges.size() == 2);
    CHECK(np.edges[0].slope == -1);
    CHECK(np.edges[1].slope == rat(-1, 3));
    CHECK(np.edges[0].gamma() == 1);
    CHECK(np.edges[1].gamma() == 3);
    CHECK(np.edges[0].lattice_width == 3);
    CHECK(np.edges[1].lattice_width == 6);

    // same polygon at the other singular point
    auto np1 = newton_polygon(p5(), one_one);
    CHECK(np1.vertices == np.vertices);
}

TEST_CASE("newton polygon of a cusp")
{
    auto np = newton_polygon(cusp(), origin);
    REQUIRE(np.vertices.size() == 2);
    CHECK(np.vertices[0] == std::make_pair(0, 2));
    CHECK(np.vertices[1] == std::make_pair(3, 0));
    REQUIRE(np.edges.size() == 1);
    CHECK(np.edges[0].slope == rat(-2, 3));
    CHECK(np.edges[0].gamma() == rat(3, 2));
    CHECK_THROWS(newton_polygon(cusp(), {Rational(0), Rational(1)}));
}

TEST_CASE("edge polynomials of the quintic member")
{
    auto np = newton_polygon(p5(), origin);
    UPoly e1 = edge_polynomial(p5(), origin, np.edges[0]);
    // (15/32) c^2 (c-2)(7c^2-16c+16)
    UPoly expect1({Rational(0), Rational(0), Rational(-32), Rational(48), Rational(-30),
                   Rational(7)},
                  'c');
    CHECK(e1 == expect1 * rat(15, 32));
    UPoly e2 = edge_polynomial(p5(), origin, np.edges[1]);
    // (15/32)(10 - 32 c^2)
    CHECK(e2 == UPoly({rat(150, 32), Rational(0), Rational(-15)}, 'c'));

    UPoly ec = edge_polynomial(cusp(), origin, newton_polygon(cusp(), origin).edges[0]);
    CHECK(ec == UPoly({Rational(-1), Rational(0), Rational(1)}, 'c'));
}

TEST_CASE("squarefree core decomposition")
{
    auto [s, d] = squarefree_core(rat(5, 16));
    CHECK(s == rat(1, 4));
    CHECK(d == 5);
    auto [s2, d2] = squarefree_core(Rational(18));
    CHECK(s2 == 3);
    CHECK(d2 == 2);
    auto [s3, d3] = squarefree_core(Rational(49));
    CHECK(s3 == 7);
    CHECK(d3 == 1);
}

TEST_CASE("initial branches of the quintic member")
{
    auto br = initial_branches(p5(), origin);
    REQUIRE(br.size() == 4);
    // shallow edge: c1 = 2 and a conjugate pair from 7c^2 - 16c + 16
    CHECK(br[0].gamma1 == 1);
    CHECK(br[0].reality == BranchReality::real);
    CHECK(br[0].coeffs[0] == QuadExt(Rational(2)));
    CHECK(br[1].gamma1 == 1);
    CHECK(br[1].reality == BranchReality::complex_pair);
    REQUIRE(br[1].factor.degree() == 2);
    CHECK(br[1].factor.coeff(1) * br[1].factor.coeff(1)
              - 4 * br[1].factor.coeff(2) * br[1].factor.coeff(0)
          < 0);
    // steep edge: c1 = +-sqrt(5)/4
    for (int i : {2, 3}) {
        CHECK(br[i].gamma1 == 3);
        CHECK(br[i].reality == BranchReality::real);
        CHECK(br[i].coeffs[0].a == 0);
        CHECK(br[i].coeffs[0].d == 5);
    }
    CHECK(br[2].coeffs[0].b == rat(-1, 4));
    CHECK(br[3].coeffs[0].b == rat(1, 4));

    auto bc = initial_branches(cusp(), origin);
    REQUIRE(bc.size() == 2);
    CHECK(bc[0].gamma1 == rat(3, 2));
    CHECK(bc[0].coeffs[0] == QuadExt(Rational(-1)));
    CHECK(bc[1].coeffs[0] == QuadExt(Rational(1)));
}

TEST_CASE("rational branch continuation")
{
    auto br = initial_branches(p5(), origin);
    PuiseuxBranch b = continue_branch(p5(), br[0], 10);
    std::vector<Rational> expect = {
        rat(2, 1),        rat(-1, 3),       rat(-2, 9),          rat(-32, 81),
        rat(-16, 27),     rat(-164, 243),   rat(-3100, 6561),    rat(3184, 19683),
        rat(73076, 59049), rat(3955412, 1594323)};
    REQUIRE(b.coeffs.size() == 10);
    for (size_t i = 0; i < expect.size(); i++) CHECK(b.coeffs[i] == QuadExt(expect[i]));

    // residual order advances by one per solved coefficient
    for (int k = 1; k <= 8; k++) {
        PuiseuxBranch t = b;
        t.coeffs.resize(k);
        CHECK(branch_residual_order(p5(), t) == 5 + k);
    }
}

TEST_CASE("quadratic-field branch continuation")
{
    auto br = initial_branches(p5(), origin);
    PuiseuxBranch plus = continue_branch(p5(), br[3], 5);
    auto qe = [](Rational a, Rational b) { return QuadExt(a, b, Rational(5)); };
    CHECK(plus.coeffs[1] == qe(0, rat(21, 40)));
    CHECK(plus.coeffs[2] == qe(rat(-15, 32), rat(1323, 1600)));
    CHECK(plus.coeffs[3] == qe(rat(-127, 64), rat(18417, 16000)));
    CHECK(plus.coeffs[4] == qe(rat(-21, 4), rat(107337, 64000)));

    // the conjugate branch mirrors it coefficient by coefficient
    PuiseuxBranch minus = continue_branch(p5(), br[2], 5);
    for (int i = 0; i < 5; i++) CHECK(minus.coeffs[i] == plus.coeffs[i].conj());

    CHECK(branch_residual_order(p5(), plus) == 9 + 5);
}

TEST_CASE("branches at the symmetric center")
{
    // P(x+1, lambda+1) = P(-x, -lambda) maps a branch lambda = phi(x) at
    // the origin to lambda = -phi(-u) at (1,1): coefficients flip sign in
    // even positions
    auto br0 = initial_branches(p5(), origin);
    auto br1 = initial_branches(p5(), one_one);
    PuiseuxBranch a = continue_branch(p5(), br0[0], 6);
    const PuiseuxBranch * mirror = nullptr;
    for (auto & b : br1)
        if (b.reality == BranchReality::real && b.gamma1 == 1)
            mirror = &b;
    REQUIRE(mirror);
    PuiseuxBranch m = continue_branch(p5(), *mirror, 6);
    for (int i = 0; i < 6; i++)
        CHECK(m.coeffs[i] == (i % 2 ? -a.coeffs[i] : a.coeffs[i]));
}

TEST_CASE("polynomial branch has infinite residual order")
{
    auto bc = initial_branches(cusp(), origin);
    CHECK(branch_residual_order(cusp(), bc[0]) == residual_order_infinite);
    CHECK(branch_residual_order(cusp(), bc[1]) == residual_order_infinite);
    CHECK_THROWS_AS((void) continue_branch(cusp(), bc[0], 3), IrregularBranch);
}

TEST_CASE("branch serialization")
{
    auto br = initial_branches(p5(), origin);
    PuiseuxBranch b = continue_branch(p5(), br[3], 2);
    std::string j = branch_json(b, branch_residual_order(p5(), b));
    CHECK(j.find("\"field\":\"Q(sqrt(5))\"") != std::string::npos);
    CHECK(j.find("\"(0,1/4)\"") != std::string::npos);
    CHECK(j.find("\"gamma1\":\"3\"") != std::string::npos);
    CHECK(j.find("\"reality\":\"real\"") != std::string::npos);

    PuiseuxBranch r = continue_branch(p5(), br[0], 2);
    std::string jr = branch_json(r, branch_residual_order(p5(), r));
    CHECK(jr.find("\"field\":\"Q\"") != std::string::npos);
    CHECK(jr.find("\"coeffs\":[\"2\",\"-1/3\"]") != std::string::npos);
}
