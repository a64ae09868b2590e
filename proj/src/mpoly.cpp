#include "gpx/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gpx {

namespace {

int vec_degree(const ExpVec& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

void trim(ExpVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

ExpVec add_vecs(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

} // namespace

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = vec_degree(a), db = vec_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai < bi;
    }
    return false;
}

RingPtr MPoly::merge_rings(const MPoly& a, const MPoly& b) {
    if (a.ring_) return a.ring_;
    return b.ring_;
}

MPoly MPoly::constant(RingPtr ring, const Rat& c) {
    MPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

MPoly MPoly::var(RingPtr ring, int idx, int power) {
    if (idx < 0) throw std::invalid_argument("negative variable index");
    MPoly p(std::move(ring));
    if (power < 0) throw std::invalid_argument("negative monomial power");
    if (power == 0) return constant(p.ring_, Rat(1));
    ExpVec e(idx + 1, 0);
    e[idx] = power;
    p.terms_[e] = Rat(1);
    return p;
}

void MPoly::add_term(const ExpVec& e0, const Rat& c) {
    if (c.is_zero()) return;
    ExpVec e = e0;
    trim(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find({});
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, vec_degree(e));
    return d;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_)
        if (var < (int)e.size()) d = std::max(d, e[var]);
    return d;
}

bool MPoly::uses_var(int var) const { return degree(var) > 0; }

std::vector<int> MPoly::vars_used() const {
    std::vector<int> r;
    size_t width = 0;
    for (auto& [e, c] : terms_) width = std::max(width, e.size());
    for (size_t i = 0; i < width; ++i) {
        for (auto& [e, c] : terms_)
            if (i < e.size() && e[i] > 0) {
                r.push_back((int)i);
                break;
            }
    }
    return r;
}

std::optional<int> MPoly::sole_var() const {
    auto v = vars_used();
    if (v.size() == 1) return v[0];
    return std::nullopt;
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(merge_rings(*this, o));
    r.terms_ = terms_;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(merge_rings(*this, o));
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_)
            r.add_term(add_vecs(ea, eb), ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MPoly r = constant(ring_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

int MPoly::cmp(const MPoly& a, const MPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GradedLexLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second < ib->second) return -1;
        if (ib->second < ia->second) return 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Rat MPoly::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

ExpVec MPoly::leading_exps() const {
    if (terms_.empty()) return {};
    return terms_.rbegin()->first;
}

Rat MPoly::content() const {
    if (terms_.empty()) return Rat(1);
    Rat g(0);
    for (auto& [e, c] : terms_) g = Rat::gcd(g, c);
    return g;
}

MPoly MPoly::divide_rat(const Rat& c) const {
    if (c.is_zero()) throw std::domain_error("division by zero rational");
    return *this * c.inv();
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    Rat r(0);
    for (auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
            t *= point[i].pow(e[i]);
        }
        r += t;
    }
    return r;
}

double MPoly::eval_d(const std::vector<double>& point) const {
    double r = 0;
    for (auto& [e, c] : terms_) {
        double t = c.to_double();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
            double b = point[i];
            for (int k = 0; k < e[i]; ++k) t *= b;
        }
        r += t;
    }
    return r;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
    MPoly r(ring_ ? ring_ : value.ring());
    for (auto& [e, c] : terms_) {
        MPoly t = constant(r.ring(), c);
        ExpVec rest = e;
        int k = 0;
        if (var < (int)rest.size()) {
            k = rest[var];
            rest[var] = 0;
            trim(rest);
        }
        if (k > 0) t = t * value.pow(k);
        MPoly mono(r.ring());
        mono.terms_[rest] = Rat(1);
        r = r + t * mono;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(ring_);
    for (auto& [e, c] : terms_) {
        if (var >= (int)e.size() || e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        trim(d);
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = degree(var);
    std::vector<MPoly> cs(d + 1, MPoly(ring_));
    for (auto& [e, c] : terms_) {
        int k = var < (int)e.size() ? e[var] : 0;
        ExpVec rest = e;
        if (var < (int)rest.size()) rest[var] = 0;
        trim(rest);
        cs[k].add_term(rest, c);
    }
    return cs;
}

MPoly MPoly::from_coeffs_in(RingPtr ring, int var, const std::vector<MPoly>& cs) {
    MPoly r(ring);
    MPoly x = var >= 0 ? MPoly::var(ring, var) : MPoly::constant(ring, Rat(1));
    for (size_t k = 0; k < cs.size(); ++k)
        r = r + cs[k] * x.pow((int)k);
    return r;
}

std::optional<std::vector<Rat>> MPoly::univariate(int var) const {
    for (int v : vars_used())
        if (v != var) return std::nullopt;
    std::vector<Rat> cs(degree(var) + 1, Rat(0));
    for (auto& [e, c] : terms_) {
        int k = var < (int)e.size() ? e[var] : 0;
        cs[k] = c;
    }
    return cs;
}

// -- gcd -------------------------------------------------------------------

namespace {

// Pseudo-remainder of a by b viewed as univariate in `var` over MPoly
// coefficients: lc(b)^(da-db+1) * a = q*b + r.
MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var) {
    int db = b.degree(var);
    auto bc = b.coeffs_in(var);
    MPoly lcb = bc[db];
    MPoly r = a;
    RingPtr ring = a.ring() ? a.ring() : b.ring();
    MPoly x = MPoly::var(ring, var);
    int guard = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        auto rc = r.coeffs_in(var);
        int dr = r.degree(var);
        MPoly lead = rc[dr];
        // r := lcb*r - lead * x^(dr-db) * b
        r = lcb * r - lead * x.pow(dr - db) * b;
        if (++guard > 10000) throw std::runtime_error("pseudo_rem diverged");
    }
    return r;
}

// Content of a w.r.t. var: gcd of its MPoly coefficients.
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

MPoly make_canonical(MPoly p) {
    if (p.is_zero()) return p;
    p = p.divide_rat(p.content());
    if (p.leading_coeff().sign() < 0) p = -p;
    return p;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return make_canonical(b);
    if (b.is_zero()) return make_canonical(a);
    if (a.is_constant() || b.is_constant())
        return constant(merge_rings(a, b), Rat(1));

    auto va = a.vars_used(), vb = b.vars_used();
    int var = std::max(va.back(), vb.back());
    if (!a.uses_var(var)) return gcd(a, content_in(b, var));
    if (!b.uses_var(var)) return gcd(content_in(a, var), b);

    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly gc = gcd(ca, cb);
    std::optional<MPoly> pa = div_exact(a, ca), pb = div_exact(b, cb);
    if (!pa || !pb) throw std::runtime_error("content division failed");

    MPoly A = *pa, B = *pb;
    if (A.degree(var) < B.degree(var)) std::swap(A, B);
    // Primitive polynomial remainder sequence.
    int guard = 0;
    while (true) {
        MPoly r = pseudo_rem(A, B, var);
        if (r.is_zero()) break;
        MPoly cr = content_in(r, var);
        auto pr = div_exact(r, cr);
        if (!pr) throw std::runtime_error("primitive part failed");
        A = B;
        B = *pr;
        if (B.degree(var) == 0) {
            B = constant(A.ring(), Rat(1));
            break;
        }
        if (++guard > 1000) throw std::runtime_error("gcd PRS diverged");
    }
    return make_canonical(gc * make_canonical(B));
}

std::optional<MPoly> MPoly::div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) return std::nullopt;
    RingPtr ring = merge_rings(a, b);
    MPoly r = a, q(ring);
    ExpVec lb = b.leading_exps();
    Rat lcb = b.leading_coeff();
    int guard = 0;
    while (!r.is_zero()) {
        ExpVec lr = r.leading_exps();
        // Divisibility of exponent vectors.
        ExpVec d(std::max(lr.size(), lb.size()), 0);
        bool ok = true;
        for (size_t i = 0; i < d.size(); ++i) {
            int ri = i < lr.size() ? lr[i] : 0;
            int bi = i < lb.size() ? lb[i] : 0;
            if (ri < bi) { ok = false; break; }
            d[i] = ri - bi;
        }
        if (!ok) return std::nullopt;
        trim(d);
        Rat qc = r.leading_coeff() / lcb;
        MPoly qt(ring);
        qt.add_term(d, qc);
        q = q + qt;
        r = r - qt * b;
        if (++guard > 100000) return std::nullopt;
    }
    return q;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded lex, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = vec_degree(e) > 0;
        if (!has_vars || !ac.is_one()) {
            os << ac.str();
            if (has_vars) os << "*";
        }
        bool fv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            os << (ring_ ? ring_->name((int)i) : "x" + std::to_string(i));
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace gpx
