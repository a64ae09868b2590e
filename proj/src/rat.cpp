#include "gpx/rat.hpp"

#include <stdexcept>

namespace gpx {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("rational inverse of zero");
    return Rat(mpq_class(1 / v_));
}

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit a long");
    return v_.get_num().get_si();
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
    if (e < 0 && is_zero()) throw std::domain_error("zero to negative power");
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
    mpq_class r(n, d);
    r.canonicalize();
    return Rat(r);
}

Rat Rat::gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_class ad = a.num() * b.den(), bc = b.num() * a.den();
    mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), bc.get_mpz_t());
    mpq_class r(g, a.den() * b.den());
    r.canonicalize();
    return Rat(r).abs();
}

std::optional<Rat> Rat::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (!(std::isdigit((unsigned char)c) || c == '/' || c == '-' || c == '+'))
            return std::nullopt;
    try {
        mpq_class v(s);
        if (v.get_den() == 0) return std::nullopt;
        v.canonicalize();
        return Rat(v);
    } catch (...) {
        return std::nullopt;
    }
}

std::string Rat::str() const {
    return v_.get_str();
}

} // namespace gpx
