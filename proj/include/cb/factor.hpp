#pragma once

#include "cb/poly.hpp"

#include <cstdint>

namespace cb {

struct Factorization {
    Rational content;                          // leading coefficient of the input
    std::vector<std::pair<PolyQ, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization over Q for deg <= 6. Squarefree decomposition, rational
// roots, then modular factorization with Hensel lifting and recombination for the
// rootless part. `seed` drives the randomized equal-degree splitting.
Factorization factor_over_Q(const PolyQ& f, uint64_t seed = 0);

bool is_irreducible_over_Q(const PolyQ& f, uint64_t seed = 0);

// Irreducibility of f mod p. Requires good reduction: p divides neither the
// numerator of the leading coefficient nor any coefficient denominator.
bool is_irreducible_mod_p(const PolyQ& f, const Int& p);

// f = c * g * conj(g) with g monic quadratic irreducible over Q(sqrt(d)).
// f must have degree 4. Returns nothing when no such factorization exists.
struct ConjugateFactorization {
    Rational c;
    PolyQuad g;
};
std::optional<ConjugateFactorization> conjugate_factorization(const PolyQ& f, const Int& d);

// Squarefree d with Q(sqrt(d)) inside Q[t]/(P) for irreducible quartic P.
// Resolvent-cubic candidates, each confirmed by conjugate_factorization.
// Result is sorted; its size is 0, 1 or 3.
std::vector<Int> quadratic_subfields(const PolyQ& P, uint64_t seed = 0);

struct QuadFactorization {
    Rational content;
    std::vector<std::pair<PolyQuad, int>> factors;  // monic irreducible over Q(sqrt(d))
};

// Factorization of a rational polynomial (deg <= 4) over Q(sqrt(d)).
QuadFactorization factor_over_quad(const PolyQ& f, const Int& d, uint64_t seed = 0);

// Quadratic g over Q(sqrt(d)): irreducible iff disc(g) is not a square there.
bool quad_quadratic_irreducible(const PolyQuad& g);

}  // namespace cb
