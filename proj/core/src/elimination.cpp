#include "keypoly/elimination.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <thread>

namespace keypoly {

BiPoly resultant(const BiPoly & p, const BiPoly & q, Var var, PRSTrace * trace)
{
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("resultant of two zero polynomials");
    UPoly r = resultant_subres(lift_nested(p, var), lift_nested(q, var), trace);
    BiPoly out;
    for (int j = 0; j <= r.degree(); j++) {
        if (var == Var::x)
            out.add_term(0, j, r.coeff(j));
        else
            out.add_term(j, 0, r.coeff(j));
    }
    return out;
}

Rational resultant_sylvester(const UPoly & a, const UPoly & b)
{
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0)
        return 0;
    if (m == 0 && n == 0)
        return 1;
    int N = m + n;
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
    for (int r = 0; r < n; r++)
        for (int i = 0; i <= m; i++)
            M[r][r + i] = a.coeff(m - i);
    for (int r = 0; r < m; r++)
        for (int i = 0; i <= n; i++)
            M[n + r][r + i] = b.coeff(n - i);
    // fraction Gaussian elimination, tracking the determinant
    Rational det = 1;
    for (int col = 0; col < N; col++) {
        int piv = -1;
        for (int r = col; r < N; r++)
            if (!is_zero(M[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0)
            return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (int r = col + 1; r < N; r++) {
            if (is_zero(M[r][col]))
                continue;
            Rational f = M[r][col] / M[col][col];
            for (int c = col; c < N; c++)
                M[r][c] -= f * M[col][c];
        }
    }
    return det;
}

namespace {

/* Newton divided-difference interpolation through (nodes[i], vals[i]). */
UPoly newton_interpolate(const std::vector<Rational> & nodes, std::vector<Rational> vals,
                         char var)
{
    size_t m = nodes.size();
    for (size_t level = 1; level < m; level++)
        for (size_t i = m - 1; i >= level; i--)
            vals[i] = (vals[i] - vals[i - 1]) / (nodes[i] - nodes[i - level]);
    UPoly r(var);
    for (size_t k = m; k-- > 0;) {
        r = r * UPoly({-nodes[k], Rational(1)}, var);
        r += UPoly::constant(vals[k], var);
    }
    return r;
}

} // namespace

UPoly resultant_x_interp(const BiPoly & p, const BiPoly & q, int threads)
{
    if (p.is_zero() || q.is_zero())
        return UPoly('l');
    long bound = (long) p.deg_lambda() * q.deg_x() + (long) q.deg_lambda() * p.deg_x();
    UPoly plc = p.lc_x(), qlc = q.lc_x();
    std::vector<Rational> nodes;
    long cand = 0;
    while ((long) nodes.size() < bound + 1) {
        Rational v(cand);
        if (!is_zero(plc.eval(v)) && !is_zero(qlc.eval(v)))
            nodes.push_back(v);
        cand = cand > 0 ? -cand : -cand + 1;
    }
    std::vector<Rational> vals(nodes.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++)
            vals[i] = resultant_subres(p.eval_lambda(nodes[i]), q.eval_lambda(nodes[i]));
    };
    int nt = std::max(1, threads);
    if (nt == 1 || nodes.size() < 8) {
        work(0, nodes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (nodes.size() + nt - 1) / nt;
        for (int t = 0; t < nt; t++) {
            size_t lo = t * chunk, hi = std::min(nodes.size(), lo + chunk);
            if (lo < hi)
                pool.emplace_back(work, lo, hi);
        }
        for (auto & th : pool) th.join();
    }
    return newton_interpolate(nodes, std::move(vals), 'l');
}

BiPoly discriminant_x(const BiPoly & p, int threads)
{
    int d = p.deg_x();
    if (d < 1)
        throw std::invalid_argument("discriminant_x needs deg_x >= 1");
    UPoly res = resultant_x_interp(p, p.derivative(Var::x), threads);
    UPoly disc = exact_div(res, p.lc_x());
    if ((d * (d - 1) / 2) % 2)
        disc = -disc;
    BiPoly out;
    for (int j = 0; j <= disc.degree(); j++)
        out.add_term(0, j, disc.coeff(j));
    return out;
}

BiPoly discriminant_lambda(const BiPoly & p)
{
    int d = p.deg_lambda();
    if (d < 1)
        throw std::invalid_argument("discriminant_lambda needs deg_lambda >= 1");
    UPoly res = resultant_subres(lift_nested(p, Var::lambda),
                                 lift_nested(p.derivative(Var::lambda), Var::lambda));
    UPoly lcl = p.nested_lambda().back();
    UPoly disc = exact_div(res, lcl);
    if ((d * (d - 1) / 2) % 2)
        disc = -disc;
    BiPoly out;
    for (int i = 0; i <= disc.degree(); i++)
        out.add_term(i, 0, disc.coeff(i));
    return out;
}

DiscDegreeReport disc_degree_report(const CurveFamily & fam, int n_max, int threads)
{
    if (n_max < 1)
        throw std::invalid_argument("disc_degree_report needs n_max >= 1");
    DiscDegreeReport rep;
    rep.family = fam.name();
    KeyFamily kf(fam);
    for (int n = 1; n <= n_max; n++) {
        long pred = (fam.kind == FamilyKind::ConjugatePair) ? (4L * n * n - 2L * n)
                                                            : (3L * n * n - 3L * n + 2);
        BiPoly d = discriminant_x(kf.key_poly(n), threads);
        long obs = d.deg_lambda();
        rep.rows.push_back({n, obs, pred, obs == pred});
    }
    return rep;
}

std::string disc_degree_report_json(const DiscDegreeReport & r)
{
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["rows"] = nlohmann::ordered_json::array();
    for (auto & row : r.rows)
        j["rows"].push_back({{"n", row.n},
                             {"observed", row.observed},
                             {"predicted", row.predicted},
                             {"match", row.match}});
    return j.dump();
}

std::pair<UPoly, UPoly> eliminate_singular_candidates(const BiPoly & p)
{
    if (p.deg_x() <= 0 && p.deg_lambda() <= 0)
        throw std::invalid_argument("eliminate_singular_candidates needs a nonconstant input");
    UPoly r1 = resultant_subres(lift_nested(p, Var::lambda),
                                lift_nested(p.derivative(Var::x), Var::lambda));
    UPoly r2 = resultant_subres(lift_nested(p, Var::lambda),
                                lift_nested(p.derivative(Var::lambda), Var::lambda));
    return {r1, r2};
}

} // namespace keypoly
