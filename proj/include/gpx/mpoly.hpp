#pragma once

#include "gpx/rat.hpp"
#include "gpx/symtab.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gpx {

/// Exponent vector of a monomial; entries align with SymbolTable indices.
/// Trailing zeroes are trimmed so vectors stay comparable as the table grows.
using ExpVec = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex on the
/// (trimmed) exponent vectors.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over the rationals. No zero coefficients
/// are stored; exponent vectors carry no trailing zeroes.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, const Rat& c);
    static MPoly var(RingPtr ring, int idx, int power = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<ExpVec, Rat, GradedLexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    /// Value when is_constant(); zero polynomial yields 0.
    Rat constant_value() const;

    int total_degree() const;
    int degree(int var) const;
    bool uses_var(int var) const;
    std::vector<int> vars_used() const;
    /// Index of the single used variable, if exactly one.
    std::optional<int> sole_var() const;
    size_t term_count() const { return terms_.size(); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    MPoly pow(int e) const;

    bool operator==(const MPoly& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const MPoly& o) const { return cmp(*this, o) != 0; }
    static int cmp(const MPoly& a, const MPoly& b);

    /// Leading term under graded lex.
    Rat leading_coeff() const;
    ExpVec leading_exps() const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial yields 1.
    Rat content() const;
    MPoly divide_rat(const Rat& c) const;

    Rat eval(const std::vector<Rat>& point) const;
    double eval_d(const std::vector<double>& point) const;
    /// Substitute variable -> polynomial.
    MPoly subst(int var, const MPoly& value) const;
    MPoly derivative(int var) const;

    /// Coefficients of `var^k` as polynomials in the remaining variables,
    /// index = k, size = degree(var)+1. Requires nonzero polynomial.
    std::vector<MPoly> coeffs_in(int var) const;
    static MPoly from_coeffs_in(RingPtr ring, int var, const std::vector<MPoly>& cs);
    /// Dense rational coefficient list when the polynomial uses no variable
    /// other than `var` (constant allowed).
    std::optional<std::vector<Rat>> univariate(int var) const;

    static MPoly gcd(const MPoly& a, const MPoly& b);
    static std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b);

    void add_term(const ExpVec& e, const Rat& c);

    std::string str() const;

private:
    RingPtr ring_;
    std::map<ExpVec, Rat, GradedLexLess> terms_;

    static RingPtr merge_rings(const MPoly& a, const MPoly& b);
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

} // namespace gpx
