#include "gpx/ratfun.hpp"

#include <stdexcept>

namespace gpx {

RatFun RatFun::of(MPoly num, MPoly den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    RatFun r;
    if (num.is_zero()) {
        r.num_ = num;
        r.den_ = MPoly::constant(den.ring(), Rat(1));
        return r;
    }
    MPoly g = MPoly::gcd(num, den);
    if (!g.is_one()) {
        auto qn = MPoly::div_exact(num, g);
        auto qd = MPoly::div_exact(den, g);
        if (!qn || !qd) throw std::runtime_error("gcd does not divide");
        num = *qn;
        den = *qd;
    }
    Rat c = den.content();
    den = den.divide_rat(c);
    num = num.divide_rat(c);
    if (den.leading_coeff().sign() < 0) {
        den = -den;
        num = -num;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

std::optional<Rat> RatFun::as_rat() const {
    if (!is_constant()) return std::nullopt;
    return constant_value();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return of(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return of(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return of(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e == 0) return of(MPoly::constant(ring(), Rat(1)));
    const RatFun base = e < 0 ? inv() : *this;
    long k = e < 0 ? -e : e;
    RatFun r = base;
    for (long i = 1; i < k; ++i) r = r * base;
    return r;
}

int RatFun::cmp(const RatFun& a, const RatFun& b) {
    int c = MPoly::cmp(a.num_, b.num_);
    if (c != 0) return c;
    return MPoly::cmp(a.den_, b.den_);
}

std::vector<int> RatFun::vars_used() const {
    auto v = num_.vars_used();
    for (int x : den_.vars_used())
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
}

Rat RatFun::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("rational function pole at evaluation point");
    return num_.eval(point) / d;
}

double RatFun::eval_d(const std::vector<double>& point) const {
    return num_.eval_d(point) / den_.eval_d(point);
}

RatFun RatFun::subst(int var, const RatFun& value) const {
    // Compose numerator and denominator separately via Horner in `var`.
    auto compose = [&](const MPoly& p) -> RatFun {
        if (!p.uses_var(var)) return of(p);
        auto cs = p.coeffs_in(var);
        RatFun acc = of(cs.back());
        for (int k = (int)cs.size() - 2; k >= 0; --k)
            acc = acc * value + of(cs[k]);
        return acc;
    };
    RatFun d = compose(den_);
    if (d.is_zero()) throw std::domain_error("substitution hits a pole");
    return compose(num_) / d;
}

RatFun RatFun::derivative(int var) const {
    return of(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    bool npar = num_.term_count() > 1;
    bool dpar = den_.term_count() > 1 || den_.total_degree() > 0;
    std::string r = npar ? "(" + n + ")" : n;
    r += "/";
    r += dpar ? "(" + d + ")" : d;
    return r;
}

} // namespace gpx
