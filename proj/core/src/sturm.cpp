#include "keypoly/sturm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace keypoly {

SturmChain::SturmChain(const UPoly & p)
{
    UPoly a = p;
    make_primitive(a);
    seq.push_back(a);
    if (a.degree() < 1)
        return;
    UPoly b = a.derivative();
    make_primitive(b);
    seq.push_back(b);
    while (seq.back().degree() > 0) {
        UPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero())
            break;
        make_primitive(r);
        seq.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rational & a) const
{
    int v = 0, last = 0;
    for (auto & q : seq) {
        int s = sign(q.eval(a));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            v++;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_inf(int dir) const
{
    int v = 0, last = 0;
    for (auto & q : seq) {
        if (q.is_zero())
            continue;
        int s = sign(q.lc());
        if (dir < 0 && (q.degree() & 1))
            s = -s;
        if (last != 0 && s != last)
            v++;
        last = s;
    }
    return v;
}

int SturmChain::count(const Rational & a, const Rational & b) const
{
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_real() const
{
    return variations_at_inf(-1) - variations_at_inf(+1);
}

Rational cauchy_root_bound(const UPoly & p)
{
    if (p.degree() < 1)
        return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); i++)
        m = std::max(m, Rational(abs(p.coeff(i))));
    return 1 + m / abs(p.lc());
}

namespace {

struct IsoWork {
    RootInterval iv;
    size_t factor; // index into the squarefree decomposition
};

void iso_rec(const SturmChain & ch, const UPoly & f, const Rational & a, const Rational & b,
             size_t fidx, std::vector<IsoWork> & out)
{
    int k = ch.count(a, b);
    if (k == 0)
        return;
    if (k == 1) {
        out.push_back({{a, b, FSign::zero, 1}, fidx});
        return;
    }
    Rational m = (a + b) / 2;
    if (is_zero(f.eval(m))) {
        out.push_back({{m, m, FSign::zero, 1}, fidx});
        Rational d = (b - a) / 4;
        while (is_zero(f.eval(m - d)) || is_zero(f.eval(m + d)) || ch.count(m - d, m + d) != 1)
            d /= 2;
        iso_rec(ch, f, a, m - d, fidx, out);
        iso_rec(ch, f, m + d, b, fidx, out);
    } else {
        iso_rec(ch, f, a, m, fidx, out);
        iso_rec(ch, f, m, b, fidx, out);
    }
}

bool overlap(const RootInterval & u, const RootInterval & v)
{
    return !(u.hi <= v.lo || v.hi <= u.lo);
}

} // namespace

void refine_interval(const UPoly & p, RootInterval & iv, const Rational & width)
{
    if (iv.exact())
        return;
    int slo = sign(p.eval(iv.lo));
    while (iv.hi - iv.lo >= width) {
        Rational m = iv.mid();
        int sm = sign(p.eval(m));
        if (sm == 0) {
            iv.lo = iv.hi = m;
            return;
        }
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
}

std::vector<RootInterval> isolate_roots(const UPoly & p)
{
    if (p.is_zero())
        throw std::invalid_argument("isolate_roots of the zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() < 1)
        return out;
    auto factors = squarefree_decomposition(p);
    std::vector<IsoWork> work;
    std::vector<UPoly> polys;
    for (size_t fi = 0; fi < factors.size(); fi++) {
        const UPoly & f = factors[fi].first;
        if (f.degree() < 1)
            continue;
        polys.resize(fi + 1);
        polys[fi] = f;
        SturmChain ch(f);
        Rational B = cauchy_root_bound(f);
        iso_rec(ch, f, -B, B, fi, work);
        for (auto it = work.rbegin(); it != work.rend() && it->factor == fi; ++it)
            it->iv.multiplicity = factors[fi].second;
    }
    // factors are pairwise coprime: shrink until all intervals disjoint
    bool again = true;
    while (again) {
        again = false;
        std::sort(work.begin(), work.end(),
                  [](const IsoWork & u, const IsoWork & v) { return u.iv.lo < v.iv.lo; });
        for (size_t i = 0; i + 1 < work.size(); i++) {
            if (!overlap(work[i].iv, work[i + 1].iv))
                continue;
            again = true;
            for (auto * w : {&work[i], &work[i + 1]}) {
                if (w->iv.exact())
                    continue;
                Rational width = (w->iv.hi - w->iv.lo) / 2;
                refine_interval(polys[w->factor], w->iv, width);
            }
        }
    }
    for (auto & w : work) out.push_back(w.iv);
    std::sort(out.begin(), out.end(),
              [](const RootInterval & u, const RootInterval & v) { return u.lo < v.lo; });
    return out;
}

int strip_root(UPoly & p, const Rational & r)
{
    int k = 0;
    UPoly lin({-r, Rational(1)}, p.var);
    while (!p.is_zero() && is_zero(p.eval(r))) {
        p = exact_div(p, lin);
        k++;
    }
    return k;
}

namespace {

int sign_variations(const std::vector<Rational> & c)
{
    int v = 0, last = 0;
    for (auto & k : c) {
        int s = sign(k);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            v++;
        last = s;
    }
    return v;
}

/* Descartes bound for roots in (0, 1): variations of (1+x)^n p(1/(1+x)). */
int descartes_01(const UPoly & p)
{
    UPoly rev(p.var);
    rev.c.assign(p.c.rbegin(), p.c.rend());
    rev.trim();
    return sign_variations(rev.shift(Rational(1)).c);
}

bool no_roots_01(const UPoly & p, int depth)
{
    int v = descartes_01(p);
    if (v == 0)
        return true;
    if (v & 1)
        return false; // odd bound guarantees a root
    if (depth <= 0) {
        // rare: fall back to an exact count
        SturmChain ch(squarefree_part(p));
        return ch.count(Rational(0), Rational(1)) == 0
               && !is_zero(p.eval(Rational(0)));
    }
    Rational half(1, 2);
    if (is_zero(p.eval(half)))
        return false;
    // p(x/2) and p((x+1)/2)
    UPoly left(p.var), right(p.var);
    left.c = p.c;
    Rational s(1);
    for (auto & k : left.c) {
        k *= s;
        s /= 2;
    }
    left.trim();
    right = left.shift(Rational(1));
    return no_roots_01(left, depth - 1) && no_roots_01(right, depth - 1);
}

} // namespace

bool no_real_roots_certificate(const UPoly & p)
{
    if (p.is_zero())
        return false;
    if (p.degree() < 1)
        return true;
    UPoly q = p;
    make_primitive(q);
    if (is_zero(q.eval(Rational(0))))
        return false;
    Rational B = cauchy_root_bound(q);
    // positive axis: roots of q in (0,B) are roots of q(Bx) in (0,1)
    for (int dir : {+1, -1}) {
        UPoly s(q.var);
        s.c = q.c;
        Rational f(1);
        for (auto & k : s.c) {
            k *= f;
            f *= dir > 0 ? B : -B;
        }
        s.trim();
        if (!no_roots_01(s, 64))
            return false;
    }
    return true;
}

Rational simplest_in_open(const Rational & lo, const Rational & hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("simplest_in_open: empty interval");
    if (sign(lo) < 0 && sign(hi) > 0)
        return 0;
    if (sign(hi) <= 0)
        return -simplest_in_open(-hi, -lo);
    // 0 <= lo < hi
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rational lo_f = lo - Rational(fl), hi_f = hi - Rational(fl);
    if (hi_f > 1)
        return Rational(fl) + 1;
    if (is_zero(lo_f)) {
        // smallest q with 1/q inside (0, hi_f)
        Rational inv = 1 / hi_f;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        q += 1;
        return Rational(fl) + Rational(1) / Rational(q);
    }
    return Rational(fl) + 1 / simplest_in_open(1 / hi_f, 1 / lo_f);
}

std::vector<Rational> rational_roots(const UPoly & p)
{
    std::vector<Rational> out;
    if (p.degree() < 1)
        return out;
    UPoly sf = squarefree_part(p);
    make_primitive(sf);
    // with coprime integer coefficients any rational root has denominator
    // dividing lc, and fractions with denominator <= L are 1/L^2 apart
    Rational L = abs(sf.lc());
    Rational width = 1 / (L * L + 1);
    for (auto iv : isolate_roots(sf)) {
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        refine_interval(sf, iv, width);
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        Rational s = simplest_in_open(iv.lo, iv.hi);
        if (is_zero(sf.eval(s)))
            out.push_back(s);
    }
    return out;
}

std::string root_report_json(const std::string & poly_json,
                             const std::vector<RootInterval> & roots)
{
    nlohmann::ordered_json j;
    j["poly"] = nlohmann::ordered_json::parse(poly_json);
    j["roots"] = nlohmann::ordered_json::array();
    for (auto & r : roots) {
        const char * s = r.sign_of_f == FSign::positive  ? "positive"
                         : r.sign_of_f == FSign::negative ? "negative"
                                                          : "zero";
        j["roots"].push_back({{"lo", rat_string(r.lo)},
                              {"hi", rat_string(r.hi)},
                              {"sign_of_f", s},
                              {"multiplicity", r.multiplicity}});
    }
    return j.dump();
}

} // namespace keypoly
