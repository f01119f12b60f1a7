#include "keypoly/analysis.hpp"

#include "keypoly/elimination.hpp"
#include "keypoly/puiseux.hpp"
#include "keypoly/quotient.hpp"
#include "keypoly/ratfunc.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

namespace keypoly {

bool VerificationReport::all_pass() const
{
    for (const auto & r : rows)
        if (!r.pass)
            return false;
    return true;
}

std::string VerificationReport::verdict() const
{
    return all_pass() ? "VERIFIED-UP-TO-BOUND" : "FALSIFIED";
}

std::string report_json(const VerificationReport & r)
{
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["bounds"] = r.bounds;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto & row : r.rows) {
        nlohmann::ordered_json jr;
        jr["label"] = row.label;
        jr["expected"] = row.expected;
        jr["observed"] = row.observed;
        jr["pass"] = row.pass;
        j["rows"].push_back(jr);
    }
    j["seconds"] = r.seconds;
    j["verdict"] = r.verdict();
    return j.dump(2);
}

static void add_row(VerificationReport & rep, std::string label, std::string expected,
                    std::string observed, bool pass)
{
    rep.rows.push_back({std::move(label), std::move(expected), std::move(observed), pass});
}

static void merge_rows(VerificationReport & rep, const VerificationReport & sub)
{
    for (const auto & r : sub.rows)
        rep.rows.push_back({sub.suite + ": " + r.label, r.expected, r.observed, r.pass});
}

VerificationReport verify_numerology(int mu_max, int n_max, const std::vector<Rational> & grid)
{
    VerificationReport rep;
    rep.suite = "numerology";
    rep.bounds = "mu_max=" + std::to_string(mu_max) + " n_max=" + std::to_string(n_max) +
                 " grid=" + std::to_string(grid.size());
    auto t0 = std::chrono::steady_clock::now();
    CurveFamily fam = CurveFamily::legendre();
    for (int mu = 1; mu <= mu_max; mu++)
        for (int n = mu + 2; n <= n_max; n++)
            for (const Rational & l0 : grid) {
                std::string label = "mu=" + std::to_string(mu) + " n=" + std::to_string(n) +
                                    " lambda=" + rat_string(l0);
                if (fam.degenerate_at(l0)) {
                    add_row(rep, label, "reject", "DegenerateCurve", true);
                    continue;
                }
                int expected = (n - mu) % 2 != 0 ? mu : 2 * mu;
                int observed = count_positive_f_roots(fam, mu, n, l0);
                add_row(rep, label, std::to_string(expected), std::to_string(observed),
                        observed == expected);
            }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

static UPoly upow(const UPoly & p, unsigned e) { return p.pow(e); }

// x^a (x-1)^a
static UPoly xxm1_pow(unsigned a)
{
    return upow(UPoly({Rational(0), Rational(-1), Rational(1)}), a);
}

static std::string ratfunc_str(const RatFunc & f)
{
    return "(" + poly_string(f.num) + ")/(" + poly_string(f.den) + ")";
}

static void identity_row(VerificationReport & rep, const std::string & label, const RatFunc & lhs,
                         const RatFunc & rhs)
{
    bool ok = lhs == rhs;
    add_row(rep, label, ratfunc_str(rhs), ok ? "equal" : ratfunc_str(lhs), ok);
}

VerificationReport casework_identities()
{
    VerificationReport rep;
    rep.suite = "casework";
    rep.bounds = "n=2..5";
    auto t0 = std::chrono::steady_clock::now();
    KeyFamily kf(CurveFamily::legendre());

    // (a) the radical solution for n = 2: lambda = -2x^3 + 3x^2 -+ 2 s^3
    // with s^2 = x^2 - x kills P_2 identically
    {
        auto a = kf.key_poly(2).nested_lambda();
        UPoly g({Rational(0), Rational(-1), Rational(1)});
        UPoly A({Rational(0), Rational(0), Rational(3), Rational(-2)});
        for (int sgn : {-2, 2}) {
            QuotientElem<UPoly> lam(A, g * Rational(sgn), g);
            QuotientElem<UPoly> acc = QuotientElem<UPoly>::scalar(a.back(), g);
            for (size_t j = a.size() - 1; j-- > 0;)
                acc = acc * lam + QuotientElem<UPoly>::scalar(a[j], g);
            add_row(rep, std::string("n=2 radical root, sign ") + (sgn < 0 ? "-" : "+"), "0",
                    acc.is_zero() ? "0" : "nonzero", acc.is_zero());
        }
    }

    // (b) depressed-cubic discriminant of P_3
    {
        auto a = kf.key_poly(3).nested_lambda();
        RatFunc b2 = RatFunc(a[2]) / RatFunc(a[3]);
        RatFunc b1 = RatFunc(a[1]) / RatFunc(a[3]);
        RatFunc b0 = RatFunc(a[0]) / RatFunc(a[3]);
        RatFunc p = b1 - b2.pow(2) / RatFunc(3);
        RatFunc q = b0 - b1 * b2 / RatFunc(3) + b2.pow(3) * RatFunc(Rational(2, 27));
        RatFunc Delta = (q / RatFunc(2)).pow(2) + (p / RatFunc(3)).pow(3);
        UPoly one_minus_2x({Rational(1), Rational(-2)});
        identity_row(rep, "n=3 Delta*(1-2x)^4", Delta * RatFunc(upow(one_minus_2x, 4)),
                     RatFunc(xxm1_pow(8) * Rational(-16, 27)));
    }

    // (c), (d): resolvent-cubic data of P_4
    {
        auto a = kf.key_poly(4).nested_lambda();
        RatFunc b3 = RatFunc(a[3]) / RatFunc(a[4]);
        RatFunc b2 = RatFunc(a[2]) / RatFunc(a[4]);
        RatFunc b1 = RatFunc(a[1]) / RatFunc(a[4]);
        RatFunc b0 = RatFunc(a[0]) / RatFunc(a[4]);
        RatFunc p0 = -b0 - b2.pow(2) / RatFunc(12) + b1 * b3 / RatFunc(4);
        RatFunc q0 = -b1.pow(2) / RatFunc(8) + b0 * b2 / RatFunc(3) - b2.pow(3) / RatFunc(108) +
                     b1 * b2 * b3 / RatFunc(24) - b0 * b3.pow(2) / RatFunc(8);
        RatFunc D0 = (q0 / RatFunc(2)).pow(2) + (p0 / RatFunc(3)).pow(3);

        RatFunc beta(UPoly({Rational(1)}),
                     UPoly({Rational(5, 16), Rational(-1), Rational(1)}));
        UPoly t({Rational(-1, 2), Rational(1)}); // x - 1/2
        UPoly U1d = upow(t, 4) + upow(t, 2) * Rational(5, 6) +
                    UPoly::constant(Rational(11, 432));
        UPoly half_sq = upow(t, 2) + UPoly::constant(Rational(5, 108));

        identity_row(rep, "n=4 q0 closed form", q0,
                     beta.pow(3) * RatFunc(xxm1_pow(6) * U1d) * RatFunc(Rational(-1, 32)));
        identity_row(rep, "n=4 Delta0 closed form", D0,
                     beta.pow(6) * RatFunc(xxm1_pow(15) * half_sq) * RatFunc(Rational(1, 4096)));

        RatFunc U1 = q0 / (beta.pow(3) * RatFunc(xxm1_pow(6)) * RatFunc(Rational(-1, 32)));
        RatFunc U2 = D0 / (beta.pow(6) * RatFunc(xxm1_pow(12)) * RatFunc(Rational(1, 4096)));
        UPoly c3 = upow(t, 2) + UPoly::constant(Rational(1, 12));
        identity_row(rep, "n=4 U1^2-U2", U1.pow(2) - U2,
                     RatFunc(upow(c3, 3) * Rational(64, 27)));
    }

    // (e) P_5 along the diagonal lambda = x
    {
        auto a = kf.key_poly(5).nested_lambda();
        UPoly xs({Rational(0), Rational(1)});
        UPoly diag;
        for (size_t j = a.size(); j-- > 0;)
            diag = diag * xs + a[j];
        UPoly expect = xxm1_pow(5) * Rational(105, 32);
        bool ok = diag == expect;
        add_row(rep, "n=5 P_5(x,x)", poly_string(expect), ok ? "equal" : poly_string(diag), ok);
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

static double eval_d(const UPoly & p, double x)
{
    double r = 0;
    for (size_t i = p.c.size(); i-- > 0;)
        r = r * x + p.c[i].get_d();
    return r;
}

VerificationReport numeric_parametrization_check(int n, const std::vector<double> & x_samples,
                                                 double tol)
{
    if (n != 3 && n != 4)
        throw std::domain_error("numeric_parametrization_check: n must be 3 or 4");
    VerificationReport rep;
    rep.suite = "parametrization n=" + std::to_string(n);
    rep.bounds = "samples=" + std::to_string(x_samples.size()) + " tol=" + std::to_string(tol);
    auto t0 = std::chrono::steady_clock::now();

    auto a = key_poly(CurveFamily::legendre(), n).nested_lambda();
    auto peval = [&](double x, double l) {
        double r = 0;
        for (size_t j = a.size(); j-- > 0;)
            r = r * l + eval_d(a[j], x);
        return r;
    };
    auto scale_at = [&](double x) {
        double s = 0;
        for (const auto & aj : a)
            s = std::max(s, std::fabs(eval_d(aj, x)));
        return s;
    };
    char buf[64];
    auto resid_row = [&](const std::string & label, double x, double lam) {
        double r = std::fabs(peval(x, lam));
        double bound = tol * (1 + scale_at(x));
        snprintf(buf, sizeof buf, "%.3e", r);
        add_row(rep, label, "residual < " + std::to_string(bound), buf, r < bound);
    };

    for (double x : x_samples) {
        if (x == 0 || x == 1 || x == 0.5)
            continue;
        std::string at = "x=" + std::to_string(x);
        if (n == 3) {
            double a3 = eval_d(a[3], x);
            double b2 = eval_d(a[2], x) / a3, b1 = eval_d(a[1], x) / a3,
                   b0 = eval_d(a[0], x) / a3;
            double p = b1 - b2 * b2 / 3;
            double q = b0 - b1 * b2 / 3 + 2 * b2 * b2 * b2 / 27;
            double D = q * q / 4 + p * p * p / 27;
            if (!(D < 0)) {
                add_row(rep, at + " three real roots", "discriminant < 0", "nonnegative", false);
                continue;
            }
            double r = std::sqrt(-p / 3);
            double th = std::atan2(std::sqrt(-D), -q / 2);
            for (int k = 0; k < 3; k++) {
                double lam = 2 * r * std::cos((th + 2 * M_PI * k) / 3) - b2 / 3;
                resid_row(at + " root " + std::to_string(k), x, lam);
            }
        } else {
            if (x > 0 && x < 1)
                continue; // no real locus there; the parametrization goes complex
            double a4 = eval_d(a[4], x);
            double b3 = eval_d(a[3], x) / a4, b2 = eval_d(a[2], x) / a4,
                   b1 = eval_d(a[1], x) / a4, b0 = eval_d(a[0], x) / a4;
            double p = b2 - 3 * b3 * b3 / 8;
            double q = b3 * b3 * b3 / 8 - b2 * b3 / 2 + b1;
            double p0 = -b0 - b2 * b2 / 12 + b1 * b3 / 4;
            double q0 = -b1 * b1 / 8 + b0 * b2 / 3 - b2 * b2 * b2 / 108 + b1 * b2 * b3 / 24 -
                        b0 * b3 * b3 / 8;
            double D0 = q0 * q0 / 4 + p0 * p0 * p0 / 27;
            if (!(D0 > 0)) {
                add_row(rep, at + " resolvent", "Delta0 > 0", "nonpositive", false);
                continue;
            }
            double m0 = std::cbrt(-q0 / 2 + std::sqrt(D0)) + std::cbrt(-q0 / 2 - std::sqrt(D0));
            double m = m0 - p / 3;
            if (!(m > 0)) {
                add_row(rep, at + " resolvent root", "m > 0", "nonpositive", false);
                continue;
            }
            double s2m = std::sqrt(2 * m);
            bool claim_i = -(s2m * (p + m) - q) >= 0;
            bool claim_ii = -(s2m * (p + m) + q) >= 0;
            add_row(rep, at + " sign claim (i)", x >= 1 ? "true" : "false",
                    claim_i ? "true" : "false", claim_i == (x >= 1));
            add_row(rep, at + " sign claim (ii)", x <= 0 ? "true" : "false",
                    claim_ii ? "true" : "false", claim_ii == (x <= 0));
            int found = 0;
            for (int s1 : {1, -1}) {
                double inner = -(2 * p + 2 * m + s1 * std::sqrt(2.0) * q / std::sqrt(m));
                if (inner < 0)
                    continue;
                for (int s2 : {1, -1}) {
                    double lam = (s1 * s2m + s2 * std::sqrt(inner)) / 2 - b3 / 4;
                    resid_row(at + " root " + std::to_string(found), x, lam);
                    found++;
                }
            }
            add_row(rep, at + " real root pair", "2", std::to_string(found), found == 2);
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

struct ProfileContext {
    BiPoly P;
    std::vector<UPoly> rows; // lambda coefficients as polynomials in x
    bool asym = false;
    bool monotone = false;

    explicit ProfileContext(int n)
    {
        P = key_poly(CurveFamily::legendre(), n);
        rows = P.nested_lambda();
        UPoly lc = rows.back();
        asym = is_zero(lc.eval(Rational(1, 2)));
        UPoly l2 = lc;
        if (asym)
            strip_root(l2, Rational(1, 2));
        if (l2.degree() > 0 && !no_real_roots_certificate(squarefree_part(l2)))
            throw ProfileError("leading lambda-coefficient vanishes off x = 1/2");

        BiPoly R = resultant(P, P.derivative(Var::x), Var::lambda);
        auto rr = R.nested_lambda();
        UPoly res = rr.empty() ? UPoly() : rr[0];
        if (res.is_zero())
            throw ProfileError("vanishing monotonicity resultant");
        strip_root(res, Rational(0));
        strip_root(res, Rational(1));
        monotone = res.degree() == 0 || no_real_roots_certificate(squarefree_part(res));
    }

    UPoly lambda_poly(const Rational & x0) const
    {
        std::vector<Rational> c;
        c.reserve(rows.size());
        for (const auto & r : rows)
            c.push_back(r.eval(x0));
        while (!c.empty() && keypoly::is_zero(c.back()))
            c.pop_back();
        return UPoly(c, 'l');
    }

    int count_at(const Rational & x0) const
    {
        UPoly p = lambda_poly(x0);
        if (p.is_zero())
            throw ProfileError("identically vanishing fiber at x = " + rat_string(x0));
        return SturmChain(squarefree_part(p)).count_real();
    }

    int window_count(const Rational & x0, const Rational & center) const
    {
        UPoly p = squarefree_part(lambda_poly(x0));
        Rational w(1, 8);
        return SturmChain(p).count(center - w, center + w);
    }

    // branches top to bottom vs the line lambda = x
    std::string pattern_at(const std::vector<Rational> & candidates) const
    {
        for (const Rational & x0 : candidates) {
            if (keypoly::is_zero(P.eval(x0, x0)) || keypoly::is_zero(rows.back().eval(x0)))
                continue;
            UPoly p = squarefree_part(lambda_poly(x0));
            auto roots = isolate_roots(p);
            std::string pat;
            for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
                RootInterval iv = *it;
                while (!iv.exact() && iv.lo < x0 && x0 < iv.hi)
                    refine_interval(p, iv, (iv.hi - iv.lo) / 4);
                pat += (iv.exact() ? iv.lo > x0 : x0 <= iv.lo) ? '+' : '-';
            }
            return pat;
        }
        throw ProfileError("no admissible order-pattern sample");
    }
};

} // namespace

ProfileSignature profile_extract(int n, int samples_per_interval)
{
    if (n < 2 || samples_per_interval < 3)
        throw std::domain_error("profile_extract: need n >= 2 and >= 3 samples");
    ProfileContext ctx(n);
    ProfileSignature sig;
    const int m = samples_per_interval;
    const Rational half(1, 2), margin(1, 16);

    auto constant_count = [&](const std::vector<Rational> & xs, const char * where) {
        int c = ctx.count_at(xs[0]);
        for (const Rational & x0 : xs)
            if (ctx.count_at(x0) != c)
                throw ProfileError(std::string("branch count non-constant on ") + where);
        return c;
    };

    // (-inf, 0)
    {
        std::vector<Rational> xs;
        for (int i = 1; i <= m; i++)
            xs.push_back(Rational(-4 * i, m + 1));
        IntervalProfile & ip = sig.intervals[0];
        ip.branch_count = constant_count(xs, "(-inf,0)");
        ip.monotone = ctx.monotone;
        if (ip.branch_count > 0) {
            ip.incidence_00 = ctx.window_count(Rational(-1, 64), 0) > 0;
            ip.order_pattern =
                ctx.pattern_at({Rational(-1), Rational(-2), Rational(-1, 3)});
        }
    }

    // (0, 1)
    {
        IntervalProfile & ip = sig.intervals[1];
        ip.monotone = ctx.monotone;
        ip.asymptote_at_half = ctx.asym;
        if (!ctx.asym) {
            std::vector<Rational> xs;
            for (int i = 1; i <= m; i++)
                xs.push_back(Rational(i, m + 1));
            ip.branch_count = constant_count(xs, "(0,1)");
            if (ip.branch_count > 0)
                ip.order_pattern = ctx.pattern_at(
                    {Rational(1, 4), Rational(1, 8), Rational(3, 8), Rational(3, 4)});
        } else {
            std::vector<Rational> left, right;
            for (int i = 1; i <= m; i++) {
                Rational x0(i, m + 1);
                if (abs(x0 - half) <= margin)
                    continue;
                (x0 < half ? left : right).push_back(x0);
            }
            int cl = constant_count(left, "(0,1/2)");
            int cr = constant_count(right, "(1/2,1)");
            ip.branch_count = cl + cr - ctx.count_at(half);
            ip.order_pattern =
                ctx.pattern_at({Rational(1, 4), Rational(1, 8), Rational(3, 8)}) + "|" +
                ctx.pattern_at({Rational(3, 4), Rational(7, 8), Rational(5, 8)});
        }
        if (ip.branch_count > 0) {
            ip.incidence_00 = ctx.window_count(Rational(1, 64), 0) > 0;
            ip.incidence_11 = ctx.window_count(Rational(63, 64), 1) > 0;
        }
    }

    // (1, inf)
    {
        std::vector<Rational> xs;
        for (int i = 1; i <= m; i++)
            xs.push_back(1 + Rational(4 * i, m + 1));
        IntervalProfile & ip = sig.intervals[2];
        ip.branch_count = constant_count(xs, "(1,inf)");
        ip.monotone = ctx.monotone;
        if (ip.branch_count > 0) {
            ip.incidence_11 = ctx.window_count(Rational(65, 64), 1) > 0;
            ip.order_pattern =
                ctx.pattern_at({Rational(2), Rational(3), Rational(3, 2)});
        }
    }
    return sig;
}

bool profile_compare(int n)
{
    return profile_extract(n) == profile_extract(n % 2 + 2);
}

InflectionBudget inflection_budget(int g)
{
    if (g < 1)
        throw std::domain_error("inflection_budget: g >= 1 required");
    InflectionBudget b;
    b.total = (2L * g + 2) * (g + 3);
    b.ramification = 2L * g * (g + 1) + 2 * (g - 1);
    b.away = b.total - b.ramification;
    long degx = (long) key_poly(CurveFamily::legendre(), g + 2).nested_x().size() - 1;
    if (b.away != 2 * degx)
        throw InternalError("inflection_budget: away part disagrees with deg_x");
    return b;
}

long omega_real(int k, int g)
{
    if (g < 1 || k <= g)
        throw std::domain_error("omega_real: k > g >= 1 required");
    return 2L * g * (g + 1) + 2L * (k - g) * (g - 1) + 2L * g * (1 + g % 2) * (k - g);
}

VerificationReport verify_all(int n_max, int mu_max, const std::vector<Rational> & grid,
                              double budget_seconds)
{
    VerificationReport rep;
    rep.suite = "all";
    int heavy_cap = std::min(n_max, 5);
    rep.bounds = "n_max=" + std::to_string(n_max) + " mu_max=" + std::to_string(mu_max) +
                 " grid=" + std::to_string(grid.size()) +
                 " heavy_cap=" + std::to_string(heavy_cap);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    auto check_budget = [&] {
        if (budget_seconds > 0 && elapsed() > budget_seconds)
            throw BudgetExceeded("verify_all: budget exhausted");
    };
    CurveFamily fam = CurveFamily::legendre();
    KeyFamily kf(fam);

    for (int n = 2; n <= n_max; n++) {
        const BiPoly & P = kf.key_poly(n);
        int degx = (int) P.nested_x().size() - 1;
        int degl = (int) P.nested_lambda().size() - 1;
        add_row(rep, "degree: deg_x(P_" + std::to_string(n) + ")", std::to_string(2 * n),
                std::to_string(degx), degx == 2 * n);
        add_row(rep, "degree: deg_lambda(P_" + std::to_string(n) + ")", std::to_string(n),
                std::to_string(degl), degl == n);
        bool sym = P.shift(Rational(1), Rational(1)).negate_vars() == P;
        add_row(rep, "symmetry: P_" + std::to_string(n) + "(1-x,1-lambda)", "P_n",
                sym ? "P_n" : "different", sym);
    }
    check_budget();

    for (int n = 2; n <= n_max; n++)
        for (const Rational & l0 : grid) {
            std::string label =
                "separability: n=" + std::to_string(n) + " lambda=" + rat_string(l0);
            if (fam.degenerate_at(l0)) {
                add_row(rep, label, "reject", "DegenerateCurve", true);
                continue;
            }
            bool sep = separability_check(fam, n, l0);
            add_row(rep, label, "separable", sep ? "separable" : "repeated roots", sep);
        }
    check_budget();

    int threads = std::max(1u, std::thread::hardware_concurrency());
    for (CurveFamily f2 : {CurveFamily::legendre(), CurveFamily::conjugate_pair()}) {
        auto dd = disc_degree_report(f2, n_max, threads);
        for (const auto & row : dd.rows)
            add_row(rep, "disc degree: " + f2.name() + " n=" + std::to_string(row.n),
                    std::to_string(row.predicted), std::to_string(row.observed), row.match);
        check_budget();
    }

    merge_rows(rep, verify_numerology(mu_max, n_max, grid));
    check_budget();

    for (int n = 2; n <= heavy_cap; n++) {
        auto cands = singular_points_affine(fam, n);
        bool ok = cands.size() == 2;
        std::string obs;
        bool seen00 = false, seen11 = false;
        for (const auto & c : cands) {
            if (!c.exact) {
                ok = false;
                obs += "(irrational)";
                continue;
            }
            obs += "(" + rat_string(c.x) + "," + rat_string(c.lambda) + ")";
            seen00 |= keypoly::is_zero(c.x) && keypoly::is_zero(c.lambda);
            seen11 |= c.x == 1 && c.lambda == 1;
        }
        ok = ok && seen00 && seen11;
        add_row(rep, "singular locus: n=" + std::to_string(n), "(0,0)(1,1)", obs, ok);
        check_budget();
    }

    for (int n = 2; n <= heavy_cap; n++) {
        std::string label = "profile: n=" + std::to_string(n) + " vs n=" + std::to_string(n % 2 + 2);
        try {
            bool eq = profile_compare(n);
            add_row(rep, label, "equal", eq ? "equal" : "different", eq);
        } catch (const ProfileError & e) {
            add_row(rep, label, "equal", std::string("profile error: ") + e.what(), false);
        }
        check_budget();
    }

    for (int n = 2; n <= heavy_cap; n++) {
        auto dr = disc_real_roots(fam, n, DiscWhich::lambda_disc_in_x);
        add_row(rep, "lambda-disc real roots: n=" + std::to_string(n), "{0,1}",
                dr.roots_exactly_0_1 ? "{0,1}" : std::to_string(dr.roots.size()) + " roots",
                dr.roots_exactly_0_1);
        check_budget();
    }

    merge_rows(rep, casework_identities());
    check_budget();

    {
        const BiPoly & P5 = kf.key_poly(5);
        auto branches = initial_branches(P5, {Rational(0), Rational(0)});
        add_row(rep, "branches: P_5 at (0,0)", "4", std::to_string(branches.size()),
                branches.size() == 4);
        int real = 0;
        const PuiseuxBranch * tangent = nullptr;
        for (const auto & b : branches)
            if (b.reality == BranchReality::real) {
                real++;
                if (b.gamma1 == 1)
                    tangent = &b;
            }
        add_row(rep, "branches: real count", "3", std::to_string(real), real == 3);
        if (tangent) {
            PuiseuxBranch ext = continue_branch(P5, *tangent, 8);
            int ord = branch_residual_order(P5, ext);
            add_row(rep, "branches: slope-1 residual order", ">= 13", std::to_string(ord),
                    ord >= 13);
        } else {
            add_row(rep, "branches: slope-1 residual order", ">= 13", "branch missing", false);
        }
    }
    check_budget();

    merge_rows(rep, numeric_parametrization_check(3, {-1.0, 0.25, 2.0}, 1e-9));
    merge_rows(rep, numeric_parametrization_check(4, {-1.0, 2.0, 3.0}, 1e-9));
    check_budget();

    for (int g = 1; g <= 6; g++) {
        auto b = inflection_budget(g);
        bool ok = b.away == 4L * (g + 2) && b.total == b.ramification + b.away;
        add_row(rep, "inflection budget: g=" + std::to_string(g), std::to_string(4 * (g + 2)),
                std::to_string(b.away), ok);
    }
    for (int k = 2; k <= 10; k++) {
        long w = omega_real(k, 1);
        add_row(rep, "omega_real(" + std::to_string(k) + ",1)", std::to_string(4 * k),
                std::to_string(w), w == 4 * k);
    }

    rep.seconds = elapsed();
    return rep;
}

} // namespace keypoly
