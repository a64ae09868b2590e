#include "gpx/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpx {

namespace {

MPoly primitive_pos(MPoly p) {
    if (p.is_zero()) return p;
    p = p.divide_rat(p.content());
    if (p.leading_coeff().sign() < 0) p = -p;
    return p;
}

MPoly content_in(const MPoly& a, int var) {
    auto cs = a.coeffs_in(var);
    MPoly g = MPoly::zero(a.ring());
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = MPoly::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Rational roots of a dense univariate rational-coefficient polynomial.
std::vector<Rat> rational_roots(const std::vector<Rat>& cs);

void collect_candidates(const MPoly& p, std::vector<MPoly>& out);

void push_candidate(const MPoly& f, std::vector<MPoly>& out) {
    MPoly c = primitive_pos(f);
    if (c.is_zero() || c.is_constant()) return;
    for (auto& e : out)
        if (e == c) return;
    out.push_back(c);
}

// Split a polynomial quadratic in `var` via its discriminant when the
// discriminant is a perfect square.
void quadratic_candidates(const MPoly& p, int var, std::vector<MPoly>& out) {
    auto cs = p.coeffs_in(var);
    if (cs.size() != 3) return;
    MPoly a = cs[2], b = cs[1], c = cs[0];
    MPoly disc = b * b - a * c * Rat(4);
    auto s = poly_sqrt(disc);
    if (!s) return;
    MPoly x = MPoly::var(p.ring(), var);
    MPoly f1 = a * x * Rat(2) + b - *s;
    MPoly f2 = a * x * Rat(2) + b + *s;
    if (f1.is_zero() || f2.is_zero()) return; // double root at 0 handled by monomials
    push_candidate(f1, out);
    push_candidate(f2, out);
    collect_candidates(primitive_pos(f1), out);
    collect_candidates(primitive_pos(f2), out);
}

void collect_candidates(const MPoly& p, std::vector<MPoly>& out) {
    if (p.is_zero() || p.is_constant()) return;
    auto vars = p.vars_used();

    // Monomial content.
    for (int v : vars) {
        int m = p.total_degree() + 1;
        for (auto& [e, c] : p.terms())
            m = std::min(m, v < (int)e.size() ? e[v] : 0);
        if (m > 0) {
            push_candidate(MPoly::var(p.ring(), v), out);
            auto q = MPoly::div_exact(p, MPoly::var(p.ring(), v, m));
            if (q) collect_candidates(*q, out);
            return;
        }
    }

    // Per-variable content split.
    for (int v : vars) {
        if (vars.size() < 2) break;
        MPoly cont = content_in(p, v);
        if (!cont.is_constant()) {
            collect_candidates(cont, out);
            push_candidate(cont, out);
            auto q = MPoly::div_exact(p, cont);
            if (q) collect_candidates(*q, out);
            return;
        }
    }

    // Univariate: rational roots give linear factors.
    if (auto v = p.sole_var()) {
        auto cs = p.univariate(*v);
        if (cs && cs->size() >= 2) {
            for (const Rat& r : rational_roots(*cs)) {
                MPoly lin = MPoly::var(p.ring(), *v) - MPoly::constant(p.ring(), r);
                push_candidate(lin, out);
            }
        }
    }

    // Quadratic-in-one-variable discriminant split.
    for (int v : vars)
        if (p.degree(v) == 2) quadratic_candidates(p, v, out);

    push_candidate(p, out);
}

std::vector<Rat> rational_roots(const std::vector<Rat>& cs0) {
    std::vector<Rat> roots;
    std::vector<Rat> cs = cs0;
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    if (cs.size() < 2) return roots;
    size_t low = 0;
    while (low < cs.size() && cs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rat(0));
    // Clear to integer coefficients.
    mpz_class lcm = 1;
    for (size_t i = low; i < cs.size(); ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), cs[i].den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (size_t i = low; i < cs.size(); ++i)
        ic.push_back(cs[i].num() * (lcm / cs[i].den()));
    auto dt = factor_int(ic.front());
    auto dl = factor_int(ic.back());
    auto divisors = [](const std::vector<std::pair<long long, int>>& f) {
        std::vector<mpz_class> d{1};
        for (auto& [p, m] : f) {
            size_t n = d.size();
            mpz_class pk = 1;
            for (int k = 1; k <= m; ++k) {
                pk *= p;
                for (size_t i = 0; i < n; ++i) d.push_back(d[i] * pk);
            }
        }
        return d;
    };
    auto eval_at = [&](const Rat& x) {
        Rat acc(0);
        for (size_t i = ic.size(); i-- > 0;)
            acc = acc * x + Rat(ic[i]);
        return acc;
    };
    for (auto& pn : divisors(dt))
        for (auto& qd : divisors(dl)) {
            mpq_class q(pn, qd);
            q.canonicalize();
            for (int s : {1, -1}) {
                Rat cand(mpq_class(s * q));
                if (eval_at(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::optional<MPoly> poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return MPoly::zero(p.ring());
    if (p.is_constant()) {
        Rat c = p.constant_value();
        if (c.sign() < 0) return std::nullopt;
        mpz_class ns, ds;
        if (mpz_perfect_square_p(c.num().get_mpz_t()) &&
            mpz_perfect_square_p(c.den().get_mpz_t())) {
            mpz_sqrt(ns.get_mpz_t(), c.num().get_mpz_t());
            mpz_sqrt(ds.get_mpz_t(), c.den().get_mpz_t());
            mpq_class r(ns, ds);
            r.canonicalize();
            return MPoly::constant(p.ring(), Rat(r));
        }
        return std::nullopt;
    }
    if (p.total_degree() % 2 != 0 || p.leading_coeff().sign() < 0) return std::nullopt;
    // Build the root term by term from the leading side: each step the
    // leading term of the residual must be divisible by twice the root's
    // leading term.
    ExpVec le = p.leading_exps();
    for (int e : le)
        if (e % 2 != 0) return std::nullopt;
    Rat lc = p.leading_coeff();
    MPoly half(p.ring());
    {
        mpz_class ns, ds;
        if (!mpz_perfect_square_p(lc.num().get_mpz_t()) ||
            !mpz_perfect_square_p(lc.den().get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(ns.get_mpz_t(), lc.num().get_mpz_t());
        mpz_sqrt(ds.get_mpz_t(), lc.den().get_mpz_t());
        ExpVec he = le;
        for (auto& e : he) e /= 2;
        mpq_class hc(ns, ds);
        hc.canonicalize();
        half.add_term(he, Rat(hc));
    }
    MPoly s = half;
    int guard = 0;
    while (true) {
        MPoly r = p - s * s;
        if (r.is_zero()) return s;
        // next term = lt(r) / (2*lt(half))
        ExpVec re = r.leading_exps();
        ExpVec he = half.leading_exps();
        ExpVec d(std::max(re.size(), he.size()), 0);
        for (size_t i = 0; i < d.size(); ++i) {
            int ri = i < re.size() ? re[i] : 0;
            int hi = i < he.size() ? he[i] : 0;
            if (ri < hi) return std::nullopt;
            d[i] = ri - hi;
        }
        while (!d.empty() && d.back() == 0) d.pop_back();
        MPoly t(p.ring());
        t.add_term(d, r.leading_coeff() / (half.leading_coeff() * Rat(2)));
        // The new term must not outrank the current leading term.
        GradedLexLess less;
        if (!less(t.leading_exps(), s.leading_exps())) return std::nullopt;
        s = s + t;
        if (++guard > 2000) return std::nullopt;
    }
}

MPoly square_part(const MPoly& p0) {
    MPoly p = primitive_pos(p0);
    MPoly s = MPoly::constant(p0.ring(), Rat(1));
    if (p.is_zero() || p.is_constant()) return s;
    bool progress = true;
    int guard = 0;
    while (progress && ++guard < 64) {
        progress = false;
        // Monomial squares.
        for (int v : p.vars_used()) {
            int m = p.total_degree() + 1;
            for (auto& [e, c] : p.terms())
                m = std::min(m, v < (int)e.size() ? e[v] : 0);
            if (m >= 2) {
                int half = m / 2;
                s = s * MPoly::var(p.ring(), v, half);
                p = *MPoly::div_exact(p, MPoly::var(p.ring(), v, 2 * half));
                progress = true;
            }
        }
        if (auto full = poly_sqrt(p)) {
            if (!full->is_constant() || !p.is_one()) {
                s = s * primitive_pos(*full);
                p = MPoly::constant(p.ring(), Rat(1));
                progress = false;
                break;
            }
        }
        for (int v : p.vars_used()) {
            MPoly g = MPoly::gcd(p, p.derivative(v));
            if (g.is_constant()) continue;
            Factorization f = factorize(g);
            for (auto& [fac, mult] : f.factors) {
                while (true) {
                    auto q = MPoly::div_exact(p, fac * fac);
                    if (!q) break;
                    p = *q;
                    s = s * fac;
                    progress = true;
                }
            }
            if (progress) break;
        }
    }
    return primitive_pos(s);
}

Factorization factorize(const MPoly& p) {
    Factorization out;
    out.content = Rat(0);
    if (p.is_zero()) return out;
    Rat c = p.content();
    if (p.leading_coeff().sign() < 0) c = -c;
    out.content = c;
    MPoly rest = p.divide_rat(c);
    if (rest.is_constant()) return out;

    std::vector<MPoly> cands;
    collect_candidates(rest, cands);
    // Deterministic order: lowest degree and canonical compare first.
    std::sort(cands.begin(), cands.end(), [](const MPoly& a, const MPoly& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return MPoly::cmp(a, b) < 0;
    });
    for (auto& f : cands) {
        int mult = 0;
        while (true) {
            auto q = MPoly::div_exact(rest, f);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(f, mult);
        if (rest.is_constant()) break;
    }
    if (!rest.is_constant()) {
        out.factors.emplace_back(primitive_pos(rest), 1);
        Rat rc = rest.content();
        if (rest.leading_coeff().sign() < 0) rc = -rc;
        out.content *= rc;
    } else {
        out.content *= rest.constant_value();
    }
    return out;
}

std::vector<std::pair<long long, int>> factor_int(const mpz_class& n0) {
    std::vector<std::pair<long long, int>> out;
    mpz_class n = abs(n0);
    if (n <= 1) return out;
    for (long long d = 2; d * d <= 1000000LL * 1000000LL; ++d) {
        if (d > 1000000) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)d)) continue;
        int m = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)d)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)d);
            ++m;
        }
        out.emplace_back(d, m);
        if (n == 1) return out;
    }
    if (n != 1) {
        if (n.fits_slong_p()) out.emplace_back(n.get_si(), 1);
        else out.emplace_back(-1, 1); // flagged oversized cofactor; callers treat as opaque
    }
    return out;
}

std::pair<Rat, Rat> square_split(const Rat& c0) {
    Rat c = c0.abs();
    if (c.is_zero()) return {Rat(0), Rat(0)};
    auto split_z = [](const mpz_class& z) {
        mpz_class s = 1, r = 1;
        for (auto& [p, m] : factor_int(z)) {
            if (p < 0) { r *= z; break; } // opaque cofactor stays under the radical
            for (int i = 0; i < m / 2; ++i) s *= p;
            if (m % 2) r *= p;
        }
        return std::make_pair(s, r);
    };
    auto [ns, nr] = split_z(c.num());
    auto [ds, dr] = split_z(c.den());
    mpq_class s(ns, ds);
    s.canonicalize();
    mpq_class r(nr, dr);
    r.canonicalize();
    return {Rat(s), Rat(r)};
}

} // namespace gpx
