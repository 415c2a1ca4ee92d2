#pragma once

#include "cb/brauer.hpp"
#include "cb/lfield.hpp"

#include <optional>

namespace cb {

// Solvability of y^2 - a z^2 = c f(t) over one completion, with a parameter
// witness when solvable.
struct SolvableReport {
    bool solvable = false;
    SymbolWitness witness;  // valid when solvable
};

// A point exists iff 0 is among the attained values of (a, c f(t))_v.
SolvableReport chatelet_local_solvable(const Rational& a, const Rational& c, const PolyQ& f,
                                       const Place& v, int max_depth = 40, uint64_t seed = 0);

// One row of an adelic solvability table. Rows over Q leave `extension` false
// and use only `v`; rows over L = Q(sqrt d) carry the full place w.
struct LocalSolvability {
    bool extension = false;
    Place v;
    PlaceOfL w;
    bool solvable = false;
    std::string rule;  // how the row was decided
    bool has_witness = false;
    SymbolWitness witness;
};

struct AdelicReport {
    bool solvable = false;
    bool extension = false;
    Int d = 0;  // valid when extension
    std::vector<LocalSolvability> table;
};

// Adelic solvability over Q: the conjunction over the finite bad set
// {real, 2} + primes of a, c, disc(f) lead(f); any other completion has points
// (certifiable on demand through chatelet_local_solvable).
AdelicReport adelic_solvable(const ConicBundleData& X, int max_depth = 40, uint64_t seed = 0);
// Over L: split places repeat the Q_p computation; non-split places always
// have points because restriction to an even-degree completion kills the
// quaternion class of every smooth fiber.
AdelicReport adelic_solvable(const ConicBundleData& X, const QuadDisc& d, int max_depth = 40,
                             uint64_t seed = 0);

// A parameter value attaining one invariant; t is rational at split places and
// an element of L at non-split ones.
struct EvalWitness {
    bool at_infinity = false;
    bool quadratic = false;  // t lives in L proper
    Rational t = 0;
    QuadElem tq;
    Inv value = Inv::zero;

    EvalWitness() : tq(QuadElem::from_rational(Int(2), Rational(0))) {}
};

// Image of the evaluation map of one Brauer generator on the local points of
// one completion of L. Empty value_set means the completion has no points.
struct LocalEvalReport {
    PlaceOfL w;
    std::set<Inv> value_set;
    std::vector<EvalWitness> witnesses;  // one per attained value
    std::string note;

    LocalEvalReport()
        : w{Int(2), Place::real(), Splitting::split, 0} {}
    bool contains(Inv val) const { return value_set.count(val) > 0; }
};

// The set { inv_w (gen.a, g(t))_w : t in P^1(L_w), fiber at t smooth with an
// L_w-point } for a generator in symbol form (gen.a, g). Shortcuts: {0}
// without search when gen.a is a square in L_w or w has good reduction;
// otherwise residue-disc subdivision in L_w with unit-square pinning on both
// the fiber polynomial and the generator (trying the equivalent representative
// c*f/g when g itself stalls). Never silently truncated.
LocalEvalReport evaluation_image(const BrauerGeneratorL& gen, const PlaceOfL& w,
                                 const Rational& a, const Rational& c, const PolyQ& f,
                                 int max_depth = 40, int precision = 20, uint64_t seed = 0);

enum class BmDecision { obstruction_present, no_obstruction, inconclusive };
std::string bm_decision_to_string(BmDecision d);

struct BmReport {
    BmDecision decision = BmDecision::inconclusive;
    int dimension_over_L = 0;
    bool has_generator = false;
    BrauerGeneratorL generator;
    std::vector<LocalEvalReport> places;  // the finite bad set; others are {0}
    bool total_forced = false;            // every per-place set is a singleton
    Inv total = Inv::zero;                // the forced invariant sum
    std::string note;
};

// Brauer-Manin decision for the single-generator 2-torsion case over
// L = Q(sqrt d). Requires adelic points over L. Quotients of dimension 0 carry
// no obstruction; dimension >= 2 (or a generator without a symbol form) is
// reported inconclusive with the computed group.
BmReport bm_obstruction_quadratic(const ConicBundleData& X, const QuadDisc& d,
                                  int max_depth = 40, int precision = 20, uint64_t seed = 0);

// Sum of inv_v(a, c) over the ramified places of (a, c) that split in
// Q(sqrt d). Zero certifies, for the associated norm-form surface with empty
// adelic set over Q, that the Hasse principle holds over every even-degree
// extension.
Inv parity_criterion(const Rational& a, const Rational& c, const QuadDisc& d);

enum class Conclusion {
    rational_point_exists,
    hasse_principle_holds_over_L,
    bm_obstruction_over_L,
    no_adelic_points,
    inconclusive,
};
std::string conclusion_to_string(Conclusion c);

enum class Conditionality { unconditional, schinzel_conditional };
std::string conditionality_to_string(Conditionality c);

struct Verdict {
    Conclusion conclusion = Conclusion::inconclusive;
    std::vector<std::string> citations;  // rule identifiers, in application order
    Conditionality conditionality = Conditionality::unconditional;
    std::string note;
    bool has_d = false;
    Int d = 0;
    bool has_adelic = false;
    AdelicReport adelic;
    bool has_bm = false;
    BmReport bm;
};

// Rule cascade: (1) a degree-1 singular point yields a rational point; (2) an
// empty adelic set (over L when d is given) settles the question; (3) four
// geometric fibers with a nonzero quotient over Q or adelic points over Q
// satisfy the Hasse principle over every even-degree extension; (4) d outside
// the problematic set: the principle holds over Q(sqrt d), conditionally on
// Schinzel's hypothesis when more than five fibers degenerate; (5) d inside
// the problematic set: run the Brauer-Manin computation.
Verdict hasse_verdict(const ConicBundleData& X, const std::optional<QuadDisc>& d,
                      int max_depth = 40, int precision = 20, uint64_t seed = 0);

}  // namespace cb
