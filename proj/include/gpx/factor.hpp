#pragma once

#include "gpx/mpoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gpx {

/// p == content * prod(factors[i].first ^ factors[i].second); each factor is
/// primitive with positive leading coefficient. Factor extraction is a
/// bounded, best-effort procedure (per-variable content splits, monomials,
/// quadratic discriminants, rational roots); anything it cannot split stays
/// as a single factor.
struct Factorization {
    Rat content;
    std::vector<std::pair<MPoly, int>> factors;
};

Factorization factorize(const MPoly& p);

/// Exact polynomial square root, if p is a perfect square.
std::optional<MPoly> poly_sqrt(const MPoly& p);

/// Largest S found with S^2 | p (monomials, repeated factors).
MPoly square_part(const MPoly& p);

/// Trial-division factorization of |n|; pairs (prime, multiplicity). A
/// leftover cofactor > 1 that resists division is returned as a final
/// pseudo-prime entry.
std::vector<std::pair<long long, int>> factor_int(const mpz_class& n);

/// Splits |c| = s^2 * r with r squarefree (per factor_int); returns (s, r).
std::pair<Rat, Rat> square_split(const Rat& c);

} // namespace gpx
