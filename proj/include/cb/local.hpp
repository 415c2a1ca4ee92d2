#pragma once

#include "cb/poly.hpp"

#include <set>

namespace cb {

// A place of Q: a finite prime or the real place.
struct Place {
    bool finite = true;
    Int p = 0;  // the prime when finite

    static Place real() {
        Place v;
        v.finite = false;
        return v;
    }
    // Validates primality.
    static Place prime(const Int& p);

    bool is_real() const { return !finite; }
    bool operator==(const Place& o) const { return finite == o.finite && p == o.p; }
    bool operator<(const Place& o) const {
        if (finite != o.finite) return !finite;  // real sorts first
        return p < o.p;
    }
    std::string to_string() const;
};

// Local invariant of a quaternion class: an element of (1/2)Z/Z.
enum class Inv { zero = 0, half = 1 };

inline Inv inv_add(Inv a, Inv b) {
    return static_cast<Inv>(static_cast<int>(a) ^ static_cast<int>(b));
}
std::string inv_to_string(Inv v);

// v_p of a nonzero rational, exact.
long val_p(const Int& p, const Rational& x);
// The p-free part x / p^{v_p(x)} reduced modulo `modulus` (a power of p).
// x nonzero, result in [0, modulus).
Int unit_mod(const Int& p, const Rational& x, const Int& modulus);

// Truncated p-adic number: zero, or unit * p^val with the unit known modulo
// p^prec (prec >= 1, unit in (0, p^prec) and coprime to p). A zero value means
// "indistinguishable from 0 at this precision": val is then a lower bound on
// the valuation and unit is 0.
struct PadicNum {
    Int p;
    bool zero = false;
    long val = 0;
    Int unit = 0;
    int prec = 0;
};

PadicNum padic_from_rational(const Int& p, const Rational& x, int prec);
PadicNum padic_neg(const PadicNum& a);
PadicNum padic_add(const PadicNum& a, const PadicNum& b);
PadicNum padic_mul(const PadicNum& a, const PadicNum& b);
PadicNum padic_inv(const PadicNum& a);  // a must be nonzero-determined

// x in Q_p^{x2}. Needs prec >= 1 (odd p) or >= 3 (p = 2); throws LimitError on
// insufficient precision or a zero-flagged input.
bool padic_is_square(const PadicNum& x);
// Square root of a p-adic square. Branch normalization: for odd p the unit's
// residue mod p lies in (0, p/2); for p = 2 the unit is 1 mod 4 (and one bit of
// relative precision is lost). The other root is the negation.
PadicNum padic_sqrt(const PadicNum& x);

// z in Q_v^{x2} for exact rational z != 0.
bool rational_is_local_square(const Rational& z, const Place& v);

// Hilbert symbol (a, b)_v for nonzero rationals: 0 iff z^2 = a x^2 + b y^2 has
// a nontrivial solution over the completion at v.
Inv hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// (a, b)_p with one exact rational slot and one truncated p-adic slot.
Inv hilbert_symbol_mixed(const Rational& a, const PadicNum& b);

// The finite, even-sized set of places where (a, b) is 1/2.
std::set<Place> ramified_places(const Rational& a, const Rational& b,
                                long factor_bound = 1000000);

enum class Splitting { split, inert, ramified };
std::string splitting_to_string(Splitting s);

// Behavior of the place v in Q(sqrt(d)); d squarefree, not 0 or 1. At the real
// place: split for d > 0, ramified (complex) for d < 0.
Splitting splitting_type(const Int& d, const Place& v);

// A completion of Q(sqrt(d)) described from below: the underlying place of Q
// and how it behaves in the extension.
struct LocalQuadExt {
    Place v;
    Int d;
    Splitting splitting;
};

LocalQuadExt make_local_ext(const Int& d, const Place& v);

// z in (L_w)^{x2} for rational z != 0, where L_w is the completion described
// by ext. Equivalent to: z or z*d is a square in Q_v.
bool square_in_local_quad_ext(const Rational& z, const LocalQuadExt& ext);

// Solvability of z^2 = a x^2 + b y^2 over L_w (a, b nonzero rationals). At a
// non-split place the quadratic extension kills the 2-torsion class, so the
// conic always has points; at a split place this is the Q_v condition.
bool conic_solvable_over_local_ext(const Rational& a, const Rational& b,
                                   const LocalQuadExt& ext);

// Sample points hitting every sign region of the nonzero polynomial g over R:
// one point below all real roots, one beyond each root, one above all roots.
// Sturm-chain based, exact.
std::vector<Rational> real_sign_sample_points(const PolyQ& g);

// Roots in F_p of the integer polynomial with the given ascending coefficients
// (not all divisible by p). Sorted, each root in [0, p).
std::vector<Int> poly_roots_mod_p(const std::vector<Int>& coeffs, const Int& p,
                                  uint64_t seed = 0);

// One attained value of (a, c*f(t))_v together with the parameter that attains
// it; t = infinity is the smooth fiber at the infinite point (even degree).
struct SymbolWitness {
    bool at_infinity = false;
    Rational t = 0;
    Inv value = Inv::zero;
};

struct SymbolValueSet {
    std::set<Inv> values;
    std::vector<SymbolWitness> witnesses;  // one per attained value

    bool contains(Inv v) const { return values.count(v) > 0; }
};

// The exact set { (a, c*f(t))_v : t in P^1(Q_v), f(t) != 0 }, a and c nonzero,
// f nonzero. Computed by residue-disc subdivision on both affine charts with
// unit-square pinning; never silently truncated: exhausting max_depth with an
// undecided disc throws LimitError.
SymbolValueSet symbol_value_set(const Rational& a, const Rational& c, const PolyQ& f,
                                const Place& v, int max_depth = 40, uint64_t seed = 0);

}  // namespace cb
