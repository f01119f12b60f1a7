#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "keypoly/analysis.hpp"
#include "keypoly/elimination.hpp"
#include "keypoly/jsonio.hpp"
#include "keypoly/puiseux.hpp"
#include "keypoly/realroots.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace keypoly;

namespace {

CurveFamily parse_family(const std::string & s)
{
    if (s == "legendre")
        return CurveFamily::legendre();
    if (s == "conjugate")
        return CurveFamily::conjugate_pair();
    throw CLI::ValidationError("--family", "expected legendre or conjugate");
}

std::vector<Rational> parse_grid(const std::string & s)
{
    std::vector<Rational> grid;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        grid.push_back(rat_parse(tok));
    return grid;
}

void write_out(const std::string & out, const std::string & payload)
{
    if (out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::filesystem::path target(out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write " + tmp.string());
        os << payload << "\n";
    }
    std::filesystem::rename(tmp, target);
}

/* decimal approximation of an isolated root, good to `digits`
 * significant digits */
std::string root_decimal(const UPoly & sf, RootInterval iv, int digits)
{
    digits = std::min(std::max(digits, 3), 15);
    if (!iv.exact()) {
        Rational w = rat(1);
        for (int i = 0; i < digits + 3; i++)
            w /= 10;
        refine_interval(sf, iv, w);
    }
    char buf[64];
    snprintf(buf, sizeof buf, "%.*g", digits, iv.mid().get_d());
    return buf;
}

std::string profile_csv(int n, const Rational & x_min, const Rational & x_max, int samples,
                        int digits)
{
    auto rows = key_poly(CurveFamily::legendre(), n).nested_lambda();
    std::string out = "x,branch_index,lambda,multiplicity\n";
    for (int i = 0; i < samples; i++) {
        Rational x0 = x_min + (x_max - x_min) * Rational(i, samples - 1);
        std::vector<Rational> c;
        for (const auto & r : rows)
            c.push_back(r.eval(x0));
        UPoly p(c, 'l');
        if (p.degree() < 1)
            continue;
        UPoly sf = squarefree_part(p);
        auto roots = isolate_roots(p);
        char xb[64];
        snprintf(xb, sizeof xb, "%.*g", std::min(std::max(digits, 3), 15), x0.get_d());
        for (size_t b = 0; b < roots.size(); b++)
            out += std::string(xb) + "," + std::to_string(b) + "," +
                   root_decimal(sf, roots[b], digits) + "," +
                   std::to_string(roots[b].multiplicity) + "\n";
    }
    return out;
}

nlohmann::ordered_json interval_json(const IntervalProfile & ip)
{
    nlohmann::ordered_json j;
    j["branch_count"] = ip.branch_count;
    j["monotone"] = ip.monotone;
    j["asymptote_at_half"] = ip.asymptote_at_half;
    auto inc = nlohmann::ordered_json::array();
    if (ip.incidence_00)
        inc.push_back("(0,0)");
    if (ip.incidence_11)
        inc.push_back("(1,1)");
    j["incidences"] = inc;
    j["order_pattern"] = ip.order_pattern;
    return j;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"exact computations with the key polynomials of a one-parameter\n"
                 "elliptic-curve family: generation, discriminants, real root\n"
                 "counts, verification suites, real-locus profiles, branch\n"
                 "expansions"};
    app.require_subcommand(1);

    std::string family_name = "legendre", grid_str, suite = "all", out_file, center_str = "0,0",
                interval_str;
    int n = 2, mu = 1, n_max = 6, mu_max = 3, k = 2, g = 1, digits = 12, samples = 50, terms = 1;
    int threads = (int) std::max(1u, std::thread::hardware_concurrency());
    double budget_seconds = 0;
    std::string lambda_str = "2";
    bool csv = false;

    auto add_common = [&](CLI::App * c) {
        c->add_option("--out", out_file, "write output atomically to this file");
        c->add_option("--digits", digits, "significant digits for decimal output");
    };

    auto * cgen = app.add_subcommand("gen", "emit a (generalized) key polynomial as JSON");
    cgen->add_option("--family", family_name);
    cgen->add_option("--n", n)->required();
    cgen->add_option("--mu", mu);
    add_common(cgen);

    auto * cdisc = app.add_subcommand("disc", "discriminant of P_n, or a degree report");
    cdisc->add_option("--family", family_name);
    cdisc->add_option("--n", n);
    int disc_n_max = 0;
    cdisc->add_option("--n-max", disc_n_max, "emit the degree report up to this n");
    cdisc->add_option("--threads", threads);
    add_common(cdisc);

    auto * croots = app.add_subcommand("roots", "real roots of P_{mu,n}(x, lambda0)");
    croots->add_option("--family", family_name);
    croots->add_option("--n", n)->required();
    croots->add_option("--mu", mu);
    croots->add_option("--lambda", lambda_str);
    add_common(croots);

    auto * cverify = app.add_subcommand("verify", "run a verification suite");
    cverify->add_option("--suite", suite, "numerology|casework|parametrization|profiles|all");
    cverify->add_option("--n-max", n_max);
    cverify->add_option("--mu-max", mu_max);
    cverify->add_option("--grid", grid_str, "comma-separated rational lambda values");
    cverify->add_option("--budget-seconds", budget_seconds);
    cverify->add_option("--threads", threads);
    add_common(cverify);

    auto * cprofile = app.add_subcommand("profile", "real-locus profile, or branch data as CSV");
    cprofile->add_option("--n", n)->required();
    cprofile->add_option("--interval", interval_str, "x_min,x_max for CSV sampling");
    cprofile->add_option("--samples", samples);
    cprofile->add_flag("--csv", csv);
    add_common(cprofile);

    auto * cpuiseux = app.add_subcommand("puiseux", "branch expansions of P_n at a center");
    cpuiseux->add_option("--family", family_name);
    cpuiseux->add_option("--n", n)->required();
    cpuiseux->add_option("--center", center_str, "x0,lambda0 (default 0,0)");
    cpuiseux->add_option("--terms", terms, "coefficients per real branch");
    add_common(cpuiseux);

    auto * ccounts = app.add_subcommand("counts", "inflectionary counting formulas");
    ccounts->add_option("--k", k)->required();
    ccounts->add_option("--g", g);
    add_common(ccounts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CurveFamily fam = parse_family(family_name);

        if (cgen->parsed()) {
            BiPoly p = mu == 1 ? key_poly(fam, n) : gen_key_poly_det(fam, mu, n);
            write_out(out_file, bipoly_to_json(p));
        } else if (cdisc->parsed()) {
            if (disc_n_max > 0) {
                write_out(out_file, disc_degree_report_json(disc_degree_report(fam, disc_n_max,
                                                                               threads)));
            } else {
                BiPoly D = discriminant_x(key_poly(fam, n), threads);
                auto cols = D.nested_x(); // x was eliminated: one column in lambda
                write_out(out_file,
                          unipoly_to_json(cols.empty() ? UPoly('l') : cols[0], "lambda"));
            }
        } else if (croots->parsed()) {
            Rational l0 = rat_parse(lambda_str);
            auto roots = annotated_real_roots(fam, mu, n, l0);
            UPoly p = specialized_gen_key_poly(fam, mu, n, l0);
            write_out(out_file, root_report_json(unipoly_to_json(p, "x"), roots));
        } else if (cverify->parsed()) {
            std::vector<Rational> grid =
                grid_str.empty() ? default_lambda_grid : parse_grid(grid_str);
            VerificationReport rep;
            if (suite == "numerology")
                rep = verify_numerology(mu_max, n_max, grid);
            else if (suite == "casework")
                rep = casework_identities();
            else if (suite == "parametrization") {
                rep = numeric_parametrization_check(3, {-1.0, 0.25, 2.0}, 1e-9);
                auto r4 = numeric_parametrization_check(4, {-1.0, 2.0, 3.0}, 1e-9);
                rep.suite = "parametrization";
                for (const auto & row : r4.rows)
                    rep.rows.push_back(row);
            } else if (suite == "profiles") {
                rep.suite = "profiles";
                rep.bounds = "n_max=" + std::to_string(n_max);
                for (int i = 2; i <= std::min(n_max, 6); i++) {
                    bool eq = profile_compare(i);
                    rep.rows.push_back({"n=" + std::to_string(i) + " vs n=" +
                                            std::to_string(i % 2 + 2),
                                        "equal", eq ? "equal" : "different", eq});
                }
            } else if (suite == "all")
                rep = verify_all(n_max, mu_max, grid, budget_seconds);
            else
                throw CLI::ValidationError("--suite", "unknown suite " + suite);
            write_out(out_file, report_json(rep));
            if (!rep.all_pass())
                return 1;
        } else if (cprofile->parsed()) {
            if (csv) {
                Rational x_min(-1), x_max(2);
                if (!interval_str.empty()) {
                    auto ends = parse_grid(interval_str);
                    if (ends.size() != 2 || !(ends[0] < ends[1]))
                        throw CLI::ValidationError("--interval", "expected x_min,x_max");
                    x_min = ends[0];
                    x_max = ends[1];
                }
                if (samples < 2)
                    throw CLI::ValidationError("--samples", "need at least 2");
                write_out(out_file, profile_csv(n, x_min, x_max, samples, digits));
            } else {
                ProfileSignature sig = profile_extract(n, std::max(samples, 3));
                nlohmann::ordered_json j;
                j["n"] = n;
                j["(-inf,0)"] = interval_json(sig.intervals[0]);
                j["(0,1)"] = interval_json(sig.intervals[1]);
                j["(1,inf)"] = interval_json(sig.intervals[2]);
                write_out(out_file, j.dump(2));
            }
        } else if (cpuiseux->parsed()) {
            auto ends = parse_grid(center_str);
            if (ends.size() != 2)
                throw CLI::ValidationError("--center", "expected x0,lambda0");
            BiPoly p = key_poly(fam, n);
            auto branches = initial_branches(p, {ends[0], ends[1]});
            auto arr = nlohmann::ordered_json::array();
            for (const auto & b : branches) {
                PuiseuxBranch ext = b;
                if (b.reality == BranchReality::real && terms > 1) {
                    try {
                        ext = continue_branch(p, b, terms);
                    } catch (const IrregularBranch &) {
                        // fractional or degenerate step: keep the one-term branch
                    }
                }
                int ord = ext.reality == BranchReality::real ? branch_residual_order(p, ext) : 0;
                arr.push_back(nlohmann::ordered_json::parse(branch_json(ext, ord)));
            }
            write_out(out_file, arr.dump(2));
        } else if (ccounts->parsed()) {
            nlohmann::ordered_json j;
            j["omega_real"] = omega_real(k, g);
            write_out(out_file, j.dump());
        }
    } catch (const CLI::ValidationError & e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded & e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception & e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
