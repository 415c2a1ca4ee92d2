#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cb/exact.hpp"
#include "cb/factor.hpp"
#include "cb/poly.hpp"

namespace cb {

// A closed point P of the projective line together with the residue class
// alpha_P in k(P)^x / k(P)^{x2} attached to the degenerate fiber above it.
// The representative is rational when the class is constant, a QuadElem when
// deg P = 2 and the class needs the quadratic residue field, and a polynomial
// in Q[t]/(P) for deg P in {3, 4}.
struct FiberDatum {
    enum class Rep { rational, quadratic, polynomial };

    ClosedPoint point;
    Rep rep = Rep::rational;
    Rational alpha_rational;
    QuadElem alpha_quad;
    PolyQ alpha_poly;

    static FiberDatum with_rational(const ClosedPoint& P, const Rational& alpha);
    static FiberDatum with_quadratic(const ClosedPoint& P, const QuadElem& alpha);
    static FiberDatum with_polynomial(const ClosedPoint& P, const PolyQ& alpha);

    int degree() const { return point.degree(); }
    // Nm_{k(P)/Q}(alpha_P)
    Rational norm() const;
    std::string alpha_to_string() const;
};

// The fiber data of the same bundle after base change to L = Q(sqrt(d)).
// Points are monic irreducible over L; residues stay rational, become
// elements of L at points that split into degree-1 pairs, or keep their
// rational-side representative at points that remain irreducible.
struct FiberDatumL {
    enum class Rep { rational, quadelem, polynomial };

    Int d;
    PolyQuad point;
    Rep rep = Rep::rational;
    Rational alpha_rational;
    QuadElem alpha_quad;  // an element of Q(sqrt(alpha_quad.d))
    PolyQ alpha_poly;
    int parent = 0;     // index into the rational-side locus
    int conjugate = 0;  // index of the Galois-conjugate point (itself when fixed)

    int degree() const { return point.degree(); }
    // Nm_{k(Q)/L}(alpha) as an element of L
    QuadElem norm() const;
    std::string alpha_to_string() const;
};

// Conic bundle input: either a Chatelet surface y^2 - a z^2 = c f(t) with
// deg f in {3, 4}, or an explicit list of fiber data.  Degree-3 surfaces are
// rewritten in the coordinate s with t = r + 1/s (r a non-root), which turns
// c f(t) into c F(s) for the quartic F(s) = s (f(r) s^3 + f'(r) s^2 +
// (f''(r)/2) s + lc f); the singular locus then gains the rational point
// s = 0.  All derived data lives in the quartic working model.
struct ConicBundleData {
    bool chatelet = false;
    Rational a;            // chatelet class; nonsquare
    Rational input_c;      // as given
    PolyQ input_f;         // as given, degree 3 or 4
    Rational c;            // working model multiplier (c_can)
    PolyQ f;               // working model quartic, primitive integer coefficients
    std::vector<FiberDatum> S;
    int geometric_fiber_count = 0;

    static ConicBundleData make_chatelet(const Rational& a, const Rational& c, const PolyQ& f,
                                         unsigned long seed = 0);
    static ConicBundleData make_general(const std::vector<FiberDatum>& S);
};

const std::vector<FiberDatum>& singular_locus(const ConicBundleData& X);

// Subspace V of F_2^{|S|} cut out by the norm-product square condition,
// together with the all-ones quotient convention.
struct F2Space {
    int ambient = 0;
    std::vector<std::vector<int>> basis;  // reduced row echelon bit-vectors
    bool quotient_by_all_ones = true;

    int dim() const { return static_cast<int>(basis.size()); }
    int quotient_dim() const { return dim() - 1; }
    bool contains(const std::vector<int>& v) const;
    std::string to_string() const;  // basis rows as bit-strings
};

struct F2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries;  // rows x cols

    int rank() const;
    std::string to_string() const;
};

// Generator A_eps = sum of corestrictions of (alpha_P, t - tau_P) over the
// support of eps.  When every supported residue lies in one rational square
// class a, the sum collapses to the single symbol (a, prod P(t)).
struct BrauerGeneratorQ {
    std::vector<int> epsilon;
    bool has_symbol = false;
    Rational a;
    PolyQ symbol_poly;

    // trivial value at the infinity chart: even degree and monic second slot
    bool trivial_at_infinity() const;
    std::string to_string(const std::vector<FiberDatum>& S) const;
};

struct BrauerGeneratorL {
    std::vector<int> epsilon;
    bool has_symbol = false;
    Rational a;
    PolyQuad symbol_poly;

    bool trivial_at_infinity() const;
    std::string to_string(const std::vector<FiberDatumL>& SL) const;
};

struct BrauerQuotient {
    F2Space V;
    std::vector<BrauerGeneratorQ> generators;  // one per nonzero quotient coset
    int quotient_dim() const { return V.quotient_dim(); }
};

struct BrauerQuotientL {
    Int d;
    F2Space V;
    std::vector<BrauerGeneratorL> generators;
    int quotient_dim() const { return V.quotient_dim(); }
};

// Exhaustive enumeration of the norm-product condition; |S| <= 6.
BrauerQuotient brauer_quotient(const std::vector<FiberDatum>& S);

struct GaloisOrbit {
    int parent = 0;
    bool split = false;
    std::vector<int> children;  // indices into SL
};

struct BaseChangeResult {
    Int d;
    std::vector<FiberDatumL> SL;
    std::vector<GaloisOrbit> orbits;  // one per rational-side point
};

// Factors every point of S over L = Q(sqrt(d)) and transports residues.
// Points split into Galois-conjugate pairs or stay irreducible; residue
// transport at a splitting point is supported for rational residues and for
// quadratic residues at degree-2 points (where sqrt(disc P) lands in L).
BaseChangeResult base_change_locus(const std::vector<FiberDatum>& S, const QuadDisc& d,
                                   unsigned long seed = 0);

BrauerQuotientL brauer_quotient_L(const BaseChangeResult& bc);

struct RestrictionData {
    BaseChangeResult base_change;
    BrauerQuotient over_Q;
    BrauerQuotientL over_L;
    F2Matrix matrix;  // induced map between the all-ones quotients
    bool surjective = false;
    bool injective = false;
};

RestrictionData restriction_map(const std::vector<FiberDatum>& S, const QuadDisc& d,
                                unsigned long seed = 0);

enum class NonsurjCase { case_i, case_ii, not_applicable };
std::string nonsurj_case_to_string(NonsurjCase c);

// For a four-fiber bundle, matches the two configurations that permit a
// non-surjective restriction map when X has no L-points: (i) one degree-4
// point splitting into a conjugate degree-2 pair; (ii) two degree-2 points,
// fixed, whose residue norms are nonsquares that become squares over L.
NonsurjCase classify_nonsurjective(const ConicBundleData& X, const QuadDisc& d,
                                   unsigned long seed = 0);

// The at-most-three quadratic extensions over which a four-fiber bundle can
// reach a non-surjective restriction map: quadratic subfields of the quartic
// residue field, and the square class of Nm(alpha_P) for a degree-2 pair.
std::set<Int> critical_extensions_four_fibers(const ConicBundleData& X, unsigned long seed = 0);

// All squarefree d with Q(sqrt(d)) inside one of the guarded fields: the
// residue fields k(P) and the fields Q(sqrt(beta_T)) for the norm products
// beta_T over subsets T of S.  Extensions avoiding this set leave the
// restriction map an isomorphism.
std::set<Int> problematic_set_M(const ConicBundleData& X, unsigned long seed = 0);

}  // namespace cb
