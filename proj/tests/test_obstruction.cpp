#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cb/obstruction.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace cb;

namespace {

PolyQ poly(std::initializer_list<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return PolyQ(c);
}

const PolyQ quartic_571 = poly({1, 0, 7, 0, 5});

ConicBundleData theorem_surface() {
    return ConicBundleData::make_chatelet(Rational(5), Rational(3, 5), quartic_571);
}

bool cites(const Verdict& V, const std::string& rule) {
    return std::find(V.citations.begin(), V.citations.end(), rule) != V.citations.end();
}

// Every reported witness must satisfy, under exact re-evaluation: the fiber
// over it is smooth and locally solvable, and the representative symbol takes
// exactly the recorded value there.
void check_witnesses(const LocalEvalReport& rep, const BrauerGeneratorL& gen, const Rational& a,
                     const Rational& c, const PolyQ& f) {
    PolyQuad cfL = PolyQuad::from_rational_poly(rep.w.d, PolyQ::constant(c) * f);
    for (const EvalWitness& e : rep.witnesses) {
        CHECK(rep.value_set.count(e.value) == 1);
        if (e.at_infinity) {
            CHECK(f.degree() % 2 == 0);
            if (gen.symbol_poly.is_monic() && gen.symbol_poly.degree() % 2 == 0)
                CHECK(e.value == Inv::zero);
            continue;
        }
        QuadElem t = e.quadratic ? e.tq : QuadElem::from_rational(rep.w.d, e.t);
        QuadElem fiber = cfL.eval(t);
        REQUIRE(!fiber.is_zero());
        CHECK(hilbert_symbol_quad(a, fiber, rep.w) == Inv::zero);
        QuadElem gv = gen.symbol_poly.eval(t);
        REQUIRE(!gv.is_zero());
        CHECK(hilbert_symbol_quad(gen.a, gv, rep.w) == e.value);
    }
}

}  // namespace

TEST_CASE("local solvability of chatelet fibrations") {
    ConicBundleData X = theorem_surface();

    SolvableReport bad = chatelet_local_solvable(X.a, X.c, X.f, Place::prime(Int(3)));
    CHECK(!bad.solvable);

    for (const Place& v : {Place::real(), Place::prime(Int(2)), Place::prime(Int(5)),
                           Place::prime(Int(29))}) {
        SolvableReport s = chatelet_local_solvable(X.a, X.c, X.f, v);
        CHECK(s.solvable);
        if (!s.witness.at_infinity) {
            Rational fib = X.c * X.f.eval(s.witness.t);
            REQUIRE(fib != 0);
            CHECK(hilbert_symbol(X.a, fib, v) == Inv::zero);
        }
    }

    // y^2 + z^2 = t^4 + 1 has points everywhere
    PolyQ circ = poly({1, 0, 0, 0, 1});
    for (const Place& v : {Place::real(), Place::prime(Int(2)), Place::prime(Int(3)),
                           Place::prime(Int(5)), Place::prime(Int(13))})
        CHECK(chatelet_local_solvable(Rational(-1), Rational(1), circ, v).solvable);
}

TEST_CASE("adelic solvability over Q and over quadratic extensions") {
    ConicBundleData X = theorem_surface();

    AdelicReport over_q = adelic_solvable(X);
    CHECK(!over_q.solvable);
    CHECK(!over_q.extension);
    for (const LocalSolvability& row : over_q.table) {
        CHECK(row.solvable == !(row.v == Place::prime(Int(3))));
        CHECK(row.rule == "local-symbol-search");
    }

    AdelicReport over_29 = adelic_solvable(X, QuadDisc::make(Rational(29)));
    CHECK(over_29.solvable);
    CHECK(over_29.extension);
    CHECK(over_29.d == 29);
    for (const LocalSolvability& row : over_29.table) CHECK(row.solvable);
    // 3 is inert in Q(sqrt 29), so the failing completion disappears
    bool saw_inert_3 = false;
    for (const LocalSolvability& row : over_29.table)
        if (row.v == Place::prime(Int(3))) {
            saw_inert_3 = true;
            CHECK(row.w.splitting == Splitting::inert);
            CHECK(row.rule == "lem-even-degree-conic");
        }
    CHECK(saw_inert_3);

    // 3 splits in Q(sqrt 7), so the failure persists there
    AdelicReport over_7 = adelic_solvable(X, QuadDisc::make(Rational(7)));
    CHECK(!over_7.solvable);

    std::vector<FiberDatum> general = {
        FiberDatum::with_rational(ClosedPoint::make(poly({-2, 0, 1})), Rational(5))};
    CHECK_THROWS_AS(adelic_solvable(ConicBundleData::make_general(general)), InputError);
}

TEST_CASE("evaluation image at the split places of the key example") {
    ConicBundleData X = theorem_surface();
    QuadDisc d29 = QuadDisc::make(Rational(29));
    RestrictionData rd = restriction_map(X.S, d29);
    REQUIRE(rd.over_L.quotient_dim() == 1);
    const BrauerGeneratorL& gen = rd.over_L.generators[0];

    // 5 splits in Q(sqrt 29); the two completions take the two constant values
    std::vector<PlaceOfL> above5 = places_of_L_above(Int(29), Place::prime(Int(5)));
    REQUIRE(above5.size() == 2);
    std::set<Inv> seen;
    for (const PlaceOfL& w : above5) {
        LocalEvalReport rep = evaluation_image(gen, w, X.a, X.c, X.f);
        REQUIRE(rep.value_set.size() == 1);
        seen.insert(*rep.value_set.begin());
        check_witnesses(rep, gen, X.a, X.c, X.f);
    }
    CHECK(seen == std::set<Inv>{Inv::zero, Inv::half});

    // everywhere else in the bad set the class is constant zero
    for (const Place& v : {Place::real(), Place::prime(Int(2)), Place::prime(Int(3)),
                           Place::prime(Int(29))})
        for (const PlaceOfL& w : places_of_L_above(Int(29), v)) {
            LocalEvalReport rep = evaluation_image(gen, w, X.a, X.c, X.f);
            CHECK(rep.value_set == std::set<Inv>{Inv::zero});
            CHECK(!rep.note.empty());
            check_witnesses(rep, gen, X.a, X.c, X.f);
        }

    // good-reduction places far from the bad set are constant zero too
    for (long p : {7, 11, 13, 53})
        for (const PlaceOfL& w : places_of_L_above(Int(29), Place::prime(Int(p)))) {
            LocalEvalReport rep = evaluation_image(gen, w, X.a, X.c, X.f);
            CHECK(rep.value_set == std::set<Inv>{Inv::zero});
            check_witnesses(rep, gen, X.a, X.c, X.f);
        }

    CHECK_THROWS_AS(evaluation_image(gen, places_of_L_above(Int(2), Place::prime(Int(3)))[0],
                                     X.a, X.c, X.f),
                    InputError);
}

TEST_CASE("evaluation image at a nonsplit place") {
    // y^2 - 3 z^2 = t^4 - 2 over Q(sqrt 2): the quartic splits into conjugate
    // quadratic factors and the quotient is generated by (3, t^2 -+ sqrt 2)
    ConicBundleData X = ConicBundleData::make_chatelet(Rational(3), Rational(1),
                                                       poly({-2, 0, 0, 0, 1}));
    QuadDisc d2 = QuadDisc::make(Rational(2));
    RestrictionData rd = restriction_map(X.S, d2);
    CHECK(rd.over_Q.quotient_dim() == 0);
    REQUIRE(rd.over_L.quotient_dim() == 1);
    const BrauerGeneratorL& gen = rd.over_L.generators[0];
    REQUIRE(gen.has_symbol);
    CHECK(gen.a == 3);
    CHECK(gen.symbol_poly.degree() == 2);

    std::vector<PlaceOfL> above3 = places_of_L_above(Int(2), Place::prime(Int(3)));
    REQUIRE(above3.size() == 1);
    REQUIRE(above3[0].splitting == Splitting::inert);
    LocalEvalReport rep = evaluation_image(gen, above3[0], X.a, X.c, X.f);
    CHECK(rep.value_set == std::set<Inv>{Inv::zero, Inv::half});
    check_witnesses(rep, gen, X.a, X.c, X.f);

    // the ramified dyadic completion: accept a decided image or an honest cap
    std::vector<PlaceOfL> above2 = places_of_L_above(Int(2), Place::prime(Int(2)));
    REQUIRE(above2.size() == 1);
    REQUIRE(above2[0].splitting == Splitting::ramified);
    try {
        LocalEvalReport r2 = evaluation_image(gen, above2[0], X.a, X.c, X.f);
        check_witnesses(r2, gen, X.a, X.c, X.f);
        CHECK((!r2.value_set.empty() || !r2.note.empty()));
    } catch (const LimitError&) {
        // a depth or enumeration cap is an acceptable honest outcome here
    }
}

TEST_CASE("evaluation image at the real places") {
    // a = -1 makes the real locus the set where c f > 0; the representative
    // t^2 - sqrt 5 changes sign across the locus at one embedding only
    PolyQ f = poly({6, 0, -5, 0, 1});  // (t^2-2)(t^2-3)
    BrauerGeneratorL gen;
    gen.has_symbol = true;
    gen.a = Rational(-1);
    gen.symbol_poly = PolyQuad(Int(5), {QuadElem(Int(5), Rational(0), Rational(-1)),
                                        QuadElem::from_rational(Int(5), Rational(0)),
                                        QuadElem::from_rational(Int(5), Rational(1))});

    std::vector<PlaceOfL> reals = places_of_L_above(Int(5), Place::real());
    REQUIRE(reals.size() == 2);
    std::map<int, std::set<Inv>> by_index;
    for (const PlaceOfL& w : reals) {
        LocalEvalReport rep = evaluation_image(gen, w, Rational(-1), Rational(1), f);
        by_index[w.index] = rep.value_set;
        check_witnesses(rep, gen, Rational(-1), Rational(1), f);
    }
    // embedding sending sqrt 5 to +sqrt 5: negative on |t| < sqrt 2, positive
    // beyond sqrt 3; the conjugate embedding sees t^2 + sqrt 5 > 0 throughout
    CHECK(by_index[0] == std::set<Inv>{Inv::zero, Inv::half});
    CHECK(by_index[1] == std::set<Inv>{Inv::zero});

    // empty locus: c f always negative and the leading form negative too
    PolyQ neg = poly({-1, 0, 0, 0, -1});
    LocalEvalReport none = evaluation_image(gen, reals[0], Rational(-1), Rational(1), neg);
    CHECK(none.value_set.empty());
    CHECK(none.note.find("no real points") != std::string::npos);
}

TEST_CASE("brauer-manin decision for the key example") {
    ConicBundleData X = theorem_surface();
    QuadDisc d29 = QuadDisc::make(Rational(29));
    BmReport bm = bm_obstruction_quadratic(X, d29);
    CHECK(bm.decision == BmDecision::obstruction_present);
    CHECK(bm.dimension_over_L == 1);
    CHECK(bm.has_generator);
    CHECK(bm.total_forced);
    CHECK(bm.total == Inv::half);
    REQUIRE(bm.places.size() == 7);  // real x2, 2, 3, 5 x2, 29
    for (const LocalEvalReport& rep : bm.places) {
        CHECK(rep.value_set.size() == 1);
        check_witnesses(rep, bm.generator, X.a, X.c, X.f);
    }

    // no adelic points over Q(sqrt 7): the computation refuses to start
    CHECK_THROWS_AS(bm_obstruction_quadratic(X, QuadDisc::make(Rational(7))), InputError);

    // d = 2 leaves the quotient trivial: nothing to sum
    BmReport bm2 = bm_obstruction_quadratic(X, QuadDisc::make(Rational(2)));
    CHECK(bm2.decision == BmDecision::no_obstruction);
    CHECK(bm2.dimension_over_L == 0);

    CHECK(bm_decision_to_string(bm.decision) == "obstruction_present");
    CHECK(bm_decision_to_string(bm2.decision) == "no_obstruction");
}

TEST_CASE("parity criterion") {
    CHECK(parity_criterion(Rational(5), Rational(3), QuadDisc::make(Rational(29))) == Inv::half);
    CHECK(parity_criterion(Rational(5), Rational(3), QuadDisc::make(Rational(19))) == Inv::zero);
    CHECK(parity_criterion(Rational(1), Rational(7), QuadDisc::make(Rational(29))) == Inv::zero);
    CHECK_THROWS_AS(parity_criterion(Rational(0), Rational(3), QuadDisc::make(Rational(29))),
                    InputError);

    // symmetry and square-class invariance
    std::mt19937_64 rng(11);
    std::vector<long> pool = {-30, -15, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15, 21, 29};
    for (int i = 0; i < 40; ++i) {
        Rational a(pool[rng() % pool.size()]);
        Rational c(pool[rng() % pool.size()]);
        QuadDisc d = QuadDisc::make(Rational(pool[rng() % pool.size()]));
        Inv lhs = parity_criterion(a, c, d);
        CHECK(lhs == parity_criterion(c, a, d));
        CHECK(lhs == parity_criterion(a, Rational(c * 36), d));
        CHECK(parity_criterion(a, Rational(c * c), d) == Inv::zero);
    }
}

TEST_CASE("verdicts for the key example") {
    ConicBundleData X = theorem_surface();

    Verdict v0 = hasse_verdict(X, std::nullopt);
    CHECK(v0.conclusion == Conclusion::no_adelic_points);
    CHECK(cites(v0, "obs-adelic-emptiness"));
    CHECK(v0.has_adelic);
    CHECK(!v0.adelic.solvable);

    Verdict v29 = hasse_verdict(X, QuadDisc::make(Rational(29)));
    CHECK(v29.conclusion == Conclusion::bm_obstruction_over_L);
    CHECK(cites(v29, "thm-bm-sum"));
    CHECK(cites(v29, "cor-nonsurjective-cases"));
    CHECK(v29.conditionality == Conditionality::unconditional);
    CHECK(v29.has_bm);
    CHECK(v29.bm.decision == BmDecision::obstruction_present);

    Verdict v2 = hasse_verdict(X, QuadDisc::make(Rational(2)));
    CHECK(v2.conclusion == Conclusion::hasse_principle_holds_over_L);
    CHECK(cites(v2, "thm-problematic-avoidance"));
    CHECK(cites(v2, "thm-bmo-five-fibers"));
    CHECK(v2.conditionality == Conditionality::unconditional);

    CHECK(conclusion_to_string(v29.conclusion) == "bm_obstruction_over_L");
    CHECK(conditionality_to_string(v29.conditionality) == "unconditional");
}

TEST_CASE("verdicts from structural rules") {
    // a rational singular parameter forces a rational point
    ConicBundleData R = ConicBundleData::make_chatelet(Rational(5), Rational(1),
                                                       poly({0, 2, -2, -1, 1}));
    Verdict vr = hasse_verdict(R, QuadDisc::make(Rational(29)));
    CHECK(vr.conclusion == Conclusion::rational_point_exists);
    CHECK(cites(vr, "lem-split-fiber-rational-point"));

    // four-fiber rule fires as soon as adelic points exist over Q
    ConicBundleData C = ConicBundleData::make_chatelet(Rational(-1), Rational(1),
                                                       poly({1, 0, 0, 0, 1}));
    Verdict vc = hasse_verdict(C, std::nullopt);
    CHECK(vc.conclusion == Conclusion::hasse_principle_holds_over_L);
    CHECK(cites(vc, "thm-four-fibers"));

    // fiber data without a surface model: the problematic set still splits
    // extensions into decided and undecided ones
    QuadElem alpha(Int(2), Rational(1), Rational(1));
    std::vector<FiberDatum> pair = {
        FiberDatum::with_quadratic(ClosedPoint::make(poly({-2, 0, 1})), alpha),
        FiberDatum::with_quadratic(ClosedPoint::make(poly({2, 4, 1})), alpha)};
    ConicBundleData G = ConicBundleData::make_general(pair);
    std::set<Int> M = problematic_set_M(G);
    REQUIRE(M.count(Int(-1)) == 1);
    Verdict vg = hasse_verdict(G, QuadDisc::make(Rational(-1)));
    CHECK(vg.conclusion == Conclusion::inconclusive);
    CHECK(vg.note.find("problematic") != std::string::npos);
    Verdict vh = hasse_verdict(G, QuadDisc::make(Rational(7)));
    CHECK(vh.conclusion == Conclusion::hasse_principle_holds_over_L);
    CHECK(cites(vh, "thm-problematic-avoidance"));

    Verdict vn = hasse_verdict(G, std::nullopt);
    CHECK(vn.conclusion == Conclusion::inconclusive);
}

TEST_CASE("no obstruction is ever reported on surfaces with rational points") {
    std::mt19937_64 rng(7);
    std::vector<long> apool = {-1, 2, 3, 5, -5, 6, 7, 10, 13};
    int tried = 0;
    for (int iter = 0; iter < 60 && tried < 8; ++iter) {
        std::vector<Rational> cs(5);
        for (int i = 0; i < 4; ++i) cs[i] = Rational(static_cast<long>(rng() % 9) - 4);
        cs[4] = Rational(1);
        PolyQ f(cs);
        if (!is_squarefree(f)) continue;
        Rational a(apool[rng() % apool.size()]);
        if (is_square_rational(a)) continue;
        Rational t0(static_cast<long>(rng() % 7) - 3);
        if (f.eval(t0) == 0) continue;
        Rational c = Rational(1) / f.eval(t0);  // forces the point (t0, 1, 0)
        ConicBundleData X;
        try {
            X = ConicBundleData::make_chatelet(a, c, f);
        } catch (const InputError&) {
            continue;
        }
        ++tried;

        std::set<Int> dcands;
        try {
            dcands = critical_extensions_four_fibers(X);
        } catch (const InputError&) {
            // rational branch points make the four-fiber classification moot
        }
        dcands.insert(Int(2));
        int used = 0;
        for (const Int& dv : dcands) {
            if (used >= 2) break;
            if (dv == 1) continue;
            ++used;
            QuadDisc d = QuadDisc::make(Rational(dv));
            try {
                BmReport bm = bm_obstruction_quadratic(X, d);
                CHECK(bm.decision != BmDecision::obstruction_present);
            } catch (const InputError&) {
                // the surface fails a precondition elsewhere; skip
            } catch (const LimitError&) {
            }
            try {
                Verdict V = hasse_verdict(X, d);
                CHECK(V.conclusion != Conclusion::bm_obstruction_over_L);
                CHECK(V.conclusion != Conclusion::no_adelic_points);
            } catch (const LimitError&) {
            }
        }
    }
    CHECK(tried == 8);
}

TEST_CASE("evaluation image input validation") {
    ConicBundleData X = theorem_surface();
    RestrictionData rd = restriction_map(X.S, QuadDisc::make(Rational(29)));
    const BrauerGeneratorL& gen = rd.over_L.generators[0];
    PlaceOfL w = places_of_L_above(Int(29), Place::prime(Int(5)))[0];

    CHECK_THROWS_AS(evaluation_image(gen, w, Rational(0), X.c, X.f), InputError);
    CHECK_THROWS_AS(evaluation_image(gen, w, X.a, Rational(0), X.f), InputError);
    CHECK_THROWS_AS(evaluation_image(gen, w, X.a, X.c, poly({3})), InputError);
    CHECK_THROWS_AS(evaluation_image(gen, w, X.a, X.c, poly({1, 2, 1})), InputError);

    BrauerGeneratorL bare;
    bare.has_symbol = false;
    CHECK_THROWS_AS(evaluation_image(bare, w, X.a, X.c, X.f), InputError);

    std::vector<FiberDatum> general = {
        FiberDatum::with_rational(ClosedPoint::make(poly({-2, 0, 1})), Rational(5))};
    CHECK_THROWS_AS(
        bm_obstruction_quadratic(ConicBundleData::make_general(general), QuadDisc::make(Rational(7))),
        InputError);
}
