#pragma once

#include "gpx/mpoly.hpp"

#include <optional>

namespace gpx {

/// Rational function over the parameter ring, kept canonical:
///   - gcd(num, den) = 1 (polynomial gcd and joint scaling removed),
///   - den has coprime integer coefficients and positive leading coefficient
///     under graded lex.
/// Equal rational functions have identical representations.
class RatFun {
public:
    RatFun() = default;
    /// Canonicalizing constructor; throws on zero denominator.
    static RatFun of(MPoly num, MPoly den);
    static RatFun of(MPoly num) { MPoly one = MPoly::constant(num.ring(), Rat(1)); return of(std::move(num), std::move(one)); }
    static RatFun constant(RingPtr ring, const Rat& c) { return of(MPoly::constant(std::move(ring), c)); }
    static RatFun var(RingPtr ring, int idx) { return of(MPoly::var(std::move(ring), idx)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    RingPtr ring() const { return num_.ring() ? num_.ring() : den_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_poly() const { return den_.is_one(); }
    /// Constant value when is_constant().
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    /// Constant integer value, if any.
    std::optional<Rat> as_rat() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun pow(long e) const;
    RatFun inv() const;

    bool operator==(const RatFun& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const RatFun& o) const { return cmp(*this, o) != 0; }
    static int cmp(const RatFun& a, const RatFun& b);

    bool uses_var(int var) const { return num_.uses_var(var) || den_.uses_var(var); }
    std::vector<int> vars_used() const;

    /// Exact evaluation; throws on denominator zero at the point.
    Rat eval(const std::vector<Rat>& point) const;
    double eval_d(const std::vector<double>& point) const;
    RatFun subst(int var, const RatFun& value) const;
    RatFun derivative(int var) const;

    std::string str() const;

private:
    MPoly num_, den_; // default: 0/1 in a null ring
};

} // namespace gpx
