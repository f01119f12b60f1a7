#include "keypoly/puiseux.hpp"

#include "keypoly/sturm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace keypoly {

namespace {

long cross(const std::pair<int, int> & o, const std::pair<int, int> & a,
           const std::pair<int, int> & b)
{
    return (long) (a.first - o.first) * (b.second - o.second)
         - (long) (a.second - o.second) * (b.first - o.first);
}

BiPoly center_shift(const BiPoly & p, const std::pair<Rational, Rational> & center)
{
    if (is_zero(center.first) && is_zero(center.second))
        return p;
    return p.shift(center.first, center.second);
}

} // namespace

NewtonPolygon newton_polygon(const BiPoly & p, const std::pair<Rational, Rational> & center)
{
    BiPoly q = center_shift(p, center);
    if (!is_zero(q.coeff(0, 0)))
        throw std::invalid_argument("newton_polygon: center is not on the curve");
    NewtonPolygon np;
    for (auto & [e, k] : q.t) np.support.push_back(e);
    // one candidate per x-exponent: the lowest lambda-power
    std::vector<std::pair<int, int>> pts;
    for (auto & e : np.support) {
        if (!pts.empty() && pts.back().first == e.first)
            continue; // support is sorted lexicographically, first j is minimal
        pts.push_back(e);
    }
    std::vector<std::pair<int, int>> hull;
    for (auto & e : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), e) <= 0)
            hull.pop_back();
        hull.push_back(e);
    }
    // keep only the strictly descending chain
    for (size_t i = 0; i + 1 < hull.size(); i++) {
        if (hull[i + 1].second >= hull[i].second) {
            hull.resize(i + 1);
            break;
        }
    }
    np.vertices = hull;
    for (size_t i = 0; i + 1 < hull.size(); i++) {
        PolygonEdge e;
        e.from = hull[i];
        e.to = hull[i + 1];
        e.lattice_width = e.to.first - e.from.first;
        e.slope = Rational(e.to.second - e.from.second, e.lattice_width);
        e.slope.canonicalize();
        np.edges.push_back(e);
    }
    return np;
}

UPoly edge_polynomial(const BiPoly & p, const std::pair<Rational, Rational> & center,
                      const PolygonEdge & edge)
{
    BiPoly q = center_shift(p, center);
    UPoly E('c');
    long di = edge.to.first - edge.from.first;
    long dj = edge.to.second - edge.from.second;
    for (auto & [e, k] : q.t) {
        if (e.first < edge.from.first || e.first > edge.to.first)
            continue;
        if ((long) (e.first - edge.from.first) * dj != (long) (e.second - edge.from.second) * di)
            continue;
        if ((int) E.c.size() <= e.second)
            E.c.resize(e.second + 1, Rational(0));
        E.c[e.second] += k;
    }
    E.trim();
    return E;
}

std::pair<Rational, Integer> squarefree_core(const Rational & r)
{
    if (sign(r) <= 0)
        throw std::invalid_argument("squarefree_core needs a positive input");
    Integer m = r.get_num() * r.get_den(), sq = 1;
    for (Integer i = 2; i * i <= m; i++) {
        Integer ii = i * i;
        while (m % ii == 0) {
            m /= ii;
            sq *= i;
        }
    }
    Rational s(sq, r.get_den());
    s.canonicalize();
    return {s, m};
}

std::vector<PuiseuxBranch> initial_branches(const BiPoly & p,
                                            const std::pair<Rational, Rational> & center)
{
    std::vector<PuiseuxBranch> out;
    NewtonPolygon np = newton_polygon(p, center);
    for (auto & edge : np.edges) {
        UPoly E = edge_polynomial(p, center, edge);
        strip_root(E, Rational(0)); // c = 0 belongs to a steeper edge
        PuiseuxBranch proto;
        proto.center = center;
        proto.gamma1 = edge.gamma();
        for (auto & r : rational_roots(E)) {
            PuiseuxBranch b = proto;
            b.reality = BranchReality::real;
            b.coeffs = {QuadExt(r)};
            out.push_back(std::move(b));
            UPoly lin({-r, Rational(1)}, 'c');
            while (is_zero(E.eval(r))) E = exact_div(E, lin);
        }
        if (E.degree() == 2) {
            Rational A = E.coeff(2), B = E.coeff(1), C = E.coeff(0);
            Rational D = B * B - 4 * A * C;
            if (sign(D) > 0) {
                auto [s, d] = squarefree_core(D);
                QuadExt r1(Rational(-B / (2 * A)), Rational(s / (2 * A)), Rational(d));
                QuadExt r2 = r1.conj();
                if (sign(r2 - r1) < 0)
                    std::swap(r1, r2);
                for (auto & r : {r1, r2}) {
                    PuiseuxBranch b = proto;
                    b.reality = BranchReality::real;
                    b.coeffs = {r};
                    out.push_back(std::move(b));
                }
            } else {
                PuiseuxBranch b = proto;
                b.reality = BranchReality::complex_pair;
                b.factor = E;
                out.push_back(std::move(b));
            }
        } else if (E.degree() > 2) {
            PuiseuxBranch b = proto;
            b.reality = BranchReality::unresolved;
            b.factor = E;
            out.push_back(std::move(b));
        }
    }
    return out;
}

namespace {

bool is_integer(const Rational & q) { return q.get_den() == 1; }

/* x^-v * p(x, x^gamma (c1 + mu)) with mu in the lambda slot. */
BiPolyQE reduced_equation(const BiPoly & shifted, long gamma, const QuadExt & c1, long & v_out)
{
    long v = 0;
    bool first = true;
    for (auto & [e, k] : shifted.t) {
        long val = e.first + gamma * e.second;
        if (first || val < v) {
            v = val;
            first = false;
        }
    }
    BiPolyQE q;
    for (auto & [e, k] : shifted.t) {
        long base = e.first + gamma * e.second - v;
        QuadExt pw(Rational(1));
        // binomial expansion of (c1 + mu)^j, highest mu-power first
        for (int m = e.second; m >= 0; m--) {
            QuadExt coef = QuadExt(Rational(k) * Rational(binomial(e.second, m))) * pw;
            q.add_term((int) base, m, coef);
            if (m > 0)
                pw = pw * c1;
        }
    }
    v_out = v;
    return q;
}

UniPoly<QuadExt> stretch(const UniPoly<QuadExt> & p, long b)
{
    UniPoly<QuadExt> r(p.var);
    if (p.is_zero())
        return r;
    r.c.assign((size_t) (b * p.degree()) + 1, QuadExt(Rational(0)));
    for (int i = 0; i <= p.degree(); i++) r.c[(size_t) (b * i)] = p.coeff(i);
    r.trim();
    return r;
}

} // namespace

PuiseuxBranch continue_branch(const BiPoly & p, const PuiseuxBranch & branch, int terms)
{
    if (branch.reality != BranchReality::real || branch.coeffs.empty())
        throw std::invalid_argument("continue_branch needs a real branch");
    if (!is_integer(branch.gamma1))
        throw IrregularBranch("fractional leading exponent: continuation unsupported");
    long gamma = branch.gamma1.get_num().get_si();
    BiPoly shifted = center_shift(p, branch.center);
    long v;
    BiPolyQE q = reduced_equation(shifted, gamma, branch.coeffs[0], v);
    if (!q.coeff(0, 0).is_zero())
        throw IrregularBranch("leading coefficient does not solve the edge equation");
    QuadExt b = q.coeff(0, 1);
    if (b.is_zero())
        throw IrregularBranch("degenerate linear step");
    PuiseuxBranch out = branch;
    UniPoly<QuadExt> s('x');
    for (size_t i = 1; i < out.coeffs.size(); i++) {
        s.c.resize(i + 1, QuadExt(Rational(0)));
        s.c[i] = out.coeffs[i];
    }
    s.trim();
    while (out.truncation() < terms) {
        int m = out.truncation(); // next coefficient is c_{m+1}, order x^m
        UniPoly<QuadExt> e = q.subs_lambda(s);
        QuadExt c = -e.coeff(m) / b;
        out.coeffs.push_back(c);
        if (!c.is_zero()) {
            s.c.resize((size_t) m + 1, QuadExt(Rational(0)));
            s.c[m] = c;
            s.trim();
        }
    }
    return out;
}

int branch_residual_order(const BiPoly & p, const PuiseuxBranch & branch)
{
    if (branch.reality != BranchReality::real || branch.coeffs.empty())
        throw std::invalid_argument("branch_residual_order needs a real branch");
    BiPoly shifted = center_shift(p, branch.center);
    long a = branch.gamma1.get_num().get_si();
    long b = branch.gamma1.get_den().get_si();
    // series in t with x = t^b: sum_i c_i t^(a + (i-1) b)
    UniPoly<QuadExt> s('t');
    s.c.assign((size_t) (a + ((long) branch.coeffs.size() - 1) * b) + 1, QuadExt(Rational(0)));
    for (size_t i = 0; i < branch.coeffs.size(); i++)
        s.c[(size_t) (a + (long) i * b)] = branch.coeffs[i];
    s.trim();
    auto rows = to_quadext(shifted).nested_lambda();
    UniPoly<QuadExt> acc('t');
    for (size_t j = rows.size(); j-- > 0;) acc = acc * s + stretch(rows[j], b);
    if (acc.is_zero())
        return residual_order_infinite;
    int ord = 0;
    while (acc.coeff(ord).is_zero()) ord++;
    return (int) (ord / b);
}

std::string branch_json(const PuiseuxBranch & branch, int residual_order)
{
    nlohmann::ordered_json j;
    auto rstr = [](const Rational & q) {
        return q.get_den() == 1 ? q.get_num().get_str() : rat_string(q);
    };
    j["center"] = {rstr(branch.center.first), rstr(branch.center.second)};
    j["gamma1"] = rstr(branch.gamma1);
    Rational d(0);
    for (auto & c : branch.coeffs)
        if (!c.is_rational())
            d = c.d;
    j["field"] = is_zero(d) ? "Q" : "Q(sqrt(" + rstr(d) + "))";
    j["coeffs"] = nlohmann::ordered_json::array();
    for (auto & c : branch.coeffs) j["coeffs"].push_back(c.str());
    j["reality"] = branch.reality == BranchReality::real           ? "real"
                   : branch.reality == BranchReality::complex_pair ? "complex_pair"
                                                                   : "unresolved";
    if (branch.reality == BranchReality::real) {
        if (residual_order == residual_order_infinite)
            j["residual_order"] = "infinite";
        else
            j["residual_order"] = residual_order;
    } else {
        j["factor"] = poly_string(branch.factor);
    }
    return j.dump();
}

} // namespace keypoly
