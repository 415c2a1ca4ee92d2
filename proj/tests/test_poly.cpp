#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cb/factor.hpp"
#include "cb/poly.hpp"

using namespace cb;

namespace {

PolyQ P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    PolyQ f = P({1, 2, 1});  // (t+1)^2
    PolyQ g = P({-1, 1});    // t - 1
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK(f * g == P({-1, -1, 1, 1}));
    CHECK(f + g == P({0, 3, 1}));
    CHECK(f - f == PolyQ());
    CHECK(PolyQ().is_zero());
    CHECK(f.eval(Rational(2)) == 9);
    CHECK(f.derivative() == P({2, 2}));
    CHECK(P({0, 0, 0}).is_zero());
    CHECK_THROWS_AS(PolyQ().lc(), InputError);
}

TEST_CASE("divmod and gcd") {
    PolyQ a = P({-1, 0, 0, 1});  // t^3 - 1
    PolyQ b = P({-1, 1});        // t - 1
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == P({1, 1, 1}));
    CHECK(q * b + r == a);

    auto [q2, r2] = divmod(P({1, 1}), P({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == P({1, 1}));
    CHECK_THROWS_AS(divmod(a, PolyQ()), InputError);

    PolyQ u = P({-2, 1}) * P({1, 1}) * P({3, 1});
    PolyQ v = P({-2, 1}) * P({3, 1});
    CHECK(poly_gcd(u, v) == P({-2, 1}) * P({3, 1}));
    CHECK(poly_gcd(P({1, 1}), P({1, 0, 1})) == P({1}));
    // gcd is monic regardless of input scaling
    CHECK(poly_gcd(Rational(4) * u, Rational(-3) * v) == v);
}

TEST_CASE("evaluation in a quadratic field") {
    PolyQ f = P({-2, 0, 1});  // t^2 - 2
    QuadElem root(2, 0, 1);   // sqrt(2)
    CHECK(f.eval_quad(root).is_zero());
    QuadElem z(2, 1, 1);
    CHECK(f.eval_quad(z) == QuadElem(2, 1, 2));  // (1+s)^2-2 = 1+2s
}

TEST_CASE("compose_affine and reversal") {
    PolyQ f = P({0, 0, 1});  // t^2
    CHECK(f.compose_affine(Rational(1), Rational(2)) == P({1, 4, 4}));

    PolyQ g = P({2, 3, 0, 1});  // t^3 + 3t + 2
    // s^4 g(1/s) = 2 s^4 + 3 s^3 + s
    CHECK(g.reversal(4) == P({0, 1, 0, 3, 2}));
    CHECK(g.reversal(3) == P({1, 0, 3, 2}));
    CHECK_THROWS_AS(g.reversal(2), InputError);

    // reversal twice with matching degree recovers the original
    PolyQ h = P({5, -1, 7});
    CHECK(h.reversal(2).reversal(2) == h);
}

TEST_CASE("resultant and discriminant") {
    CHECK(resultant(P({-1, 1}), P({-3, 1})) == -2);  // a - b for t-a, t-b
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
    CHECK(resultant(P({-2, 0, 1}), P({-2, 0, 1})) == 0);
    CHECK(poly_discriminant(P({1, 3, 1})) == 5);        // b^2 - 4c
    CHECK(poly_discriminant(P({1, 3, 2})) == 1);        // (b^2-4ac)... for 2t^2+3t+1
    CHECK(poly_discriminant(P({0, -1, 0, 1})) == 4);    // t^3 - t
    CHECK(poly_discriminant(P({-2, 0, 0, 1})) == -108); // t^3 - 2: -27q^2
    CHECK(poly_discriminant(P({1, 0, -10, 0, 1}).monic()) == 147456);  // t^4-10t^2+1
}

TEST_CASE("squarefree detection and decomposition") {
    CHECK(is_squarefree(P({-1, 0, 1})));
    CHECK_FALSE(is_squarefree(P({1, 2, 1})));
    PolyQ f = Rational(3) * (P({-1, 1}) * P({-1, 1}) * P({1, 0, 1}));
    auto dec = squarefree_decomposition(f);
    CHECK(dec.content == 3);
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0].first == P({1, 0, 1}));
    CHECK(dec.parts[0].second == 1);
    CHECK(dec.parts[1].first == P({-1, 1}));
    CHECK(dec.parts[1].second == 2);

    PolyQ re = PolyQ::constant(dec.content);
    for (auto& [part, mult] : dec.parts)
        for (int i = 0; i < mult; ++i) re = re * part;
    CHECK(re == f);
}

TEST_CASE("primitive integer form") {
    PolyQ f({Rational(1, 2), Rational(3, 4)});
    auto [mult, prim] = primitive_integer_form(f);
    REQUIRE(prim.size() == 2);
    CHECK(prim[0] == 2);
    CHECK(prim[1] == 3);
    CHECK(mult == Rational(1, 4));

    auto [m2, p2] = primitive_integer_form(P({-4, -6}));
    CHECK(p2[0] == 2);
    CHECK(p2[1] == 3);
    CHECK(m2 == -2);
}

TEST_CASE("PolyQuad arithmetic and conjugation") {
    QuadElem one = QuadElem::from_rational(2, 1);
    QuadElem rt(2, 0, 1);
    PolyQuad g(2, {rt, one});  // t + sqrt(2)
    PolyQuad prod = g * g.conj();
    CHECK(prod == PolyQuad::from_rational_poly(2, P({-2, 0, 1})));
    CHECK(prod.is_rational());
    CHECK_FALSE(g.is_rational());
    CHECK(g.eval(QuadElem(2, 0, -1)).is_zero());
    CHECK(g.derivative() == PolyQuad(2, {one}));
    PolyQuad sum = g + g.conj();
    CHECK(sum == PolyQuad(2, {QuadElem::from_rational(2, 0), QuadElem::from_rational(2, 2)}));
    CHECK_THROWS_AS(g + PolyQuad(3, {one.conj()}), InputError);
}

TEST_CASE("closed point validation") {
    CHECK(ClosedPoint::make(P({-2, 0, 1})).degree() == 2);
    CHECK(ClosedPoint::make(P({5, 1})).degree() == 1);
    CHECK_THROWS_AS(ClosedPoint::make(P({-1, 0, 1})), InputError);   // reducible
    CHECK_THROWS_AS(ClosedPoint::make(P({-2, 0, 2})), InputError);   // not monic
    CHECK_THROWS_AS(ClosedPoint::make(P({1})), InputError);          // constant
    CHECK_THROWS_AS(ClosedPoint::make(P({1, 0, 0, 0, 0, 1})), InputError);  // degree 5
}

TEST_CASE("factor_over_Q on split quadratics and cubics") {
    auto f = factor_over_Q(P({-1, 0, 1}));
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == P({-1, 1}));
    CHECK(f.factors[1].first == P({1, 1}));

    auto g = factor_over_Q(P({-6, 11, -6, 1}));  // (t-1)(t-2)(t-3)
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0].first == P({-3, 1}));
    CHECK(g.factors[1].first == P({-2, 1}));
    CHECK(g.factors[2].first == P({-1, 1}));
}

TEST_CASE("factor_over_Q content and rational roots") {
    // 6(t - 1/2)(t + 1/3) = 6t^2 - t - 1
    auto f = factor_over_Q(P({-1, -1, 6}));
    CHECK(f.content == 6);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == PolyQ({Rational(-1, 2), Rational(1)}));
    CHECK(f.factors[1].first == PolyQ({Rational(1, 3), Rational(1)}));
}

TEST_CASE("factor_over_Q keeps irreducibles whole") {
    // Splits into two modular factors at every prime, so recombination must
    // reject every proper subset.
    auto f = factor_over_Q(P({1, 0, -10, 0, 1}));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == P({1, 0, -10, 0, 1}));
    CHECK(f.factors[0].second == 1);

    auto g = factor_over_Q(P({1, 0, 7, 0, 5}));  // 5t^4 + 7t^2 + 1
    CHECK(g.content == 5);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first ==
          PolyQ({Rational(1, 5), Rational(0), Rational(7, 5), Rational(0), Rational(1)}));
}

TEST_CASE("factor_over_Q with multiplicities and equal-degree splitting") {
    PolyQ f = P({1, 1, 1}) * P({1, 1, 1}) * P({-2, 0, 1});
    auto fac = factor_over_Q(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == P({-2, 0, 1}));
    CHECK(fac.factors[0].second == 1);
    CHECK(fac.factors[1].first == P({1, 1, 1}));
    CHECK(fac.factors[1].second == 2);

    // (t^2-2)(t^2-3): both quadratics stay irreducible mod suitable primes,
    // exercising the equal-degree split.
    auto g = factor_over_Q(P({-2, 0, 1}) * P({-3, 0, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == P({-3, 0, 1}));
    CHECK(g.factors[1].first == P({-2, 0, 1}));
}

TEST_CASE("factor_over_Q classic quartics") {
    auto f = factor_over_Q(P({4, 0, 0, 0, 1}));  // t^4 + 4
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == P({2, -2, 1}));
    CHECK(f.factors[1].first == P({2, 2, 1}));

    auto cyclotomic = factor_over_Q(P({-1, 0, 0, 0, 0, 0, 1}));  // t^6 - 1
    REQUIRE(cyclotomic.factors.size() == 4);
    CHECK(cyclotomic.factors[0].first == P({-1, 1}));
    CHECK(cyclotomic.factors[1].first == P({1, 1}));
    CHECK(cyclotomic.factors[2].first == P({1, -1, 1}));
    CHECK(cyclotomic.factors[3].first == P({1, 1, 1}));
}

TEST_CASE("factor_over_Q input validation") {
    CHECK_THROWS_AS(factor_over_Q(PolyQ()), InputError);
    CHECK_THROWS_AS(factor_over_Q(P({0, 0, 0, 0, 0, 0, 0, 1})), InputError);  // deg 7
    auto c = factor_over_Q(P({5}));
    CHECK(c.content == 5);
    CHECK(c.factors.empty());
}

TEST_CASE("factor_over_Q randomized round-trips") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> degd(1, 3);
    std::uniform_int_distribution<int> nparts(1, 3);
    for (int trial = 0; trial < 120; ++trial) {
        int lead = coeff(rng);
        PolyQ f = PolyQ::constant(Rational(lead == 0 ? 1 : lead));
        int total = 0;
        int parts = nparts(rng);
        for (int i = 0; i < parts && total < 6; ++i) {
            int dg = std::min(degd(rng), 6 - total);
            std::vector<Rational> c(static_cast<size_t>(dg) + 1);
            for (int j = 0; j < dg; ++j) c[static_cast<size_t>(j)] = coeff(rng);
            c[static_cast<size_t>(dg)] = 1;
            f = f * PolyQ(std::move(c));
            total += dg;
        }
        auto fac = factor_over_Q(f, trial);
        PolyQ re = PolyQ::constant(fac.content);
        for (auto& [q, e] : fac.factors) {
            CHECK(q.is_monic());
            for (int i = 0; i < e; ++i) re = re * q;
        }
        CHECK(re == f);
    }
}

TEST_CASE("irreducibility over Q") {
    CHECK(is_irreducible_over_Q(P({1, 0, -10, 0, 1})));
    CHECK(is_irreducible_over_Q(P({1, 0, 1})));
    CHECK(is_irreducible_over_Q(P({7, 1})));
    CHECK_FALSE(is_irreducible_over_Q(P({4, 0, 0, 0, 1})));
    CHECK_FALSE(is_irreducible_over_Q(P({1, 2, 1})));
    CHECK_FALSE(is_irreducible_over_Q(P({3})));
    CHECK_FALSE(is_irreducible_over_Q(PolyQ()));
}

TEST_CASE("irreducibility mod p") {
    CHECK(is_irreducible_mod_p(P({1, 0, 7, 0, 5}), 3));        // 5t^4+7t^2+1 mod 3
    CHECK_FALSE(is_irreducible_mod_p(P({1, 0, -10, 0, 1}), 7));  // (t^2+t-1)(t^2-t-1)
    CHECK(is_irreducible_mod_p(P({1, 1, 1}), 2));
    CHECK_FALSE(is_irreducible_mod_p(P({1, 0, 1}), 2));  // (t+1)^2
    CHECK(is_irreducible_mod_p(P({1, 1}), 2));
    CHECK_FALSE(is_irreducible_mod_p(P({2, 0, 0, 1}), 3));  // t^3+2 = (t-1)^3 mod 3

    CHECK_THROWS_AS(is_irreducible_mod_p(P({1, 1}), 4), InputError);
    CHECK_THROWS_AS(is_irreducible_mod_p(P({1, 0, 5}), 5), InputError);  // lc vanishes
    CHECK_THROWS_AS(is_irreducible_mod_p(PolyQ({Rational(1, 5), Rational(1)}), 5),
                    InputError);  // denominator
    CHECK_THROWS_AS(is_irreducible_mod_p(P({3}), 5), InputError);  // constant
}

TEST_CASE("conjugate factorization of 5t^4+7t^2+1 over Q(sqrt 29)") {
    // 5t^4 + 7t^2 + 1 = 5 (t^2 + (7+sqrt 29)/10)(t^2 + (7-sqrt 29)/10)
    auto cf = conjugate_factorization(P({1, 0, 7, 0, 5}), 29);
    REQUIRE(cf.has_value());
    CHECK(cf->c == 5);
    PolyQuad expect(29, {QuadElem(29, Rational(7, 10), Rational(1, 10)),
                         QuadElem::from_rational(29, 0), QuadElem::from_rational(29, 1)});
    CHECK((cf->g == expect || cf->g == expect.conj()));
}

TEST_CASE("conjugate factorization of t^4-10t^2+1 over its three fields") {
    PolyQ f = P({1, 0, -10, 0, 1});
    auto c2 = conjugate_factorization(f, 2);
    REQUIRE(c2.has_value());
    CHECK(c2->c == 1);
    PolyQuad g2(2, {QuadElem::from_rational(2, -1), QuadElem(2, 0, 2),
                    QuadElem::from_rational(2, 1)});
    CHECK((c2->g == g2 || c2->g == g2.conj()));

    auto c3 = conjugate_factorization(f, 3);
    REQUIRE(c3.has_value());
    PolyQuad g3(3, {QuadElem::from_rational(3, 1), QuadElem(3, 0, 2),
                    QuadElem::from_rational(3, 1)});
    CHECK((c3->g == g3 || c3->g == g3.conj()));

    auto c6 = conjugate_factorization(f, 6);
    REQUIRE(c6.has_value());
    PolyQuad g6(6, {QuadElem(6, -5, 2), QuadElem::from_rational(6, 0),
                    QuadElem::from_rational(6, 1)});
    CHECK((c6->g == g6 || c6->g == g6.conj()));

    CHECK_FALSE(conjugate_factorization(f, 5).has_value());
    CHECK_FALSE(conjugate_factorization(f, 29).has_value());
    CHECK_FALSE(conjugate_factorization(f, -1).has_value());
}

TEST_CASE("conjugate factorization validation and degenerate inputs") {
    CHECK_THROWS_AS(conjugate_factorization(P({1, 0, 0, 1}), 2), InputError);  // deg 3
    CHECK_THROWS_AS(conjugate_factorization(P({1, 0, -10, 0, 1}), 4), InputError);
    CHECK_THROWS_AS(conjugate_factorization(P({1, 0, -10, 0, 1}), 1), InputError);
    // (t^2-2)^2 = (t^2+2sqrt2 t+2)(t^2-2sqrt2 t+2) but those factors are
    // squares of linear polynomials, so no irreducible conjugate pair exists.
    PolyQ sq = P({-2, 0, 1}) * P({-2, 0, 1});
    CHECK_FALSE(conjugate_factorization(sq, 2).has_value());
    // (t^2-2)(t^2-3) has no conjugate quadratic factorization over any field.
    PolyQ prod = P({-2, 0, 1}) * P({-3, 0, 1});
    for (long d : {2L, 3L, 6L, -1L}) {
        CHECK_FALSE(conjugate_factorization(prod, Int(d)).has_value());
    }
}

TEST_CASE("quadratic subfields of residue fields") {
    PolyQ m13({Rational(1, 5), Rational(0), Rational(7, 5), Rational(0), Rational(1)});
    auto s = quadratic_subfields(m13);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == 29);

    auto s2 = quadratic_subfields(P({1, 0, -10, 0, 1}));
    REQUIRE(s2.size() == 3);
    CHECK(s2[0] == 2);
    CHECK(s2[1] == 3);
    CHECK(s2[2] == 6);

    CHECK(quadratic_subfields(P({1, 1, 0, 0, 1})).empty());  // t^4 + t + 1
    CHECK(quadratic_subfields(P({5, 1})).empty());
    CHECK(quadratic_subfields(P({-2, 0, 0, 1})).empty());  // cubic field

    auto q = quadratic_subfields(P({-2, 0, 1}));
    REQUIRE(q.size() == 1);
    CHECK(q[0] == 2);
    auto q2 = quadratic_subfields(P({1, 1, 1}));
    REQUIRE(q2.size() == 1);
    CHECK(q2[0] == -3);

    CHECK_THROWS_AS(quadratic_subfields(P({-1, 0, 1})), InputError);   // reducible
    CHECK_THROWS_AS(quadratic_subfields(P({-2, 0, 2})), InputError);   // not monic
}

TEST_CASE("subfield count is 0, 1 or 3 for random irreducible quartics") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-6, 6);
    int checked = 0;
    while (checked < 40) {
        PolyQ f({Rational(coeff(rng)), Rational(coeff(rng)), Rational(coeff(rng)),
                 Rational(coeff(rng)), Rational(1)});
        if (!is_irreducible_over_Q(f)) continue;
        size_t n = quadratic_subfields(f).size();
        CHECK((n == 0 || n == 1 || n == 3));
        for (const Int& d : quadratic_subfields(f)) {
            auto cf = conjugate_factorization(f, d);
            REQUIRE(cf.has_value());
            PolyQuad prod = cf->g * cf->g.conj();
            CHECK(prod == PolyQuad::from_rational_poly(d, f));
        }
        ++checked;
    }
}

TEST_CASE("factoring over a quadratic extension") {
    auto f = factor_over_quad(P({-2, 0, 1}), 2);
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 2);
    QuadElem rt2(2, 0, 1);
    CHECK(f.factors[0].first == PolyQuad(2, {-rt2, QuadElem::from_rational(2, 1)}));
    CHECK(f.factors[1].first == PolyQuad(2, {rt2, QuadElem::from_rational(2, 1)}));

    auto g = factor_over_quad(P({-3, 0, 1}), 2);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == PolyQuad::from_rational_poly(2, P({-3, 0, 1})));

    auto h = factor_over_quad(P({1, 0, -10, 0, 1}), 2);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].first * h.factors[1].first ==
          PolyQuad::from_rational_poly(2, P({1, 0, -10, 0, 1})));

    auto k = factor_over_quad(P({2, -2, -1, 1}), 2);  // (t-1)(t^2-2)... check
    // (t-1)(t^2-2) = t^3 - t^2 - 2t + 2
    REQUIRE(k.factors.size() == 3);

    auto m = factor_over_quad(P({-2, 0, 1}) * P({-2, 0, 1}), 2);
    REQUIRE(m.factors.size() == 2);
    CHECK(m.factors[0].second == 2);
    CHECK(m.factors[1].second == 2);

    auto cub = factor_over_quad(P({-2, 0, 0, 1}), 2);  // cubic stays irreducible
    REQUIRE(cub.factors.size() == 1);
    CHECK(cub.factors[0].first.degree() == 3);

    CHECK_THROWS_AS(factor_over_quad(P({-2, 0, 1}), 4), InputError);
    CHECK_THROWS_AS(factor_over_quad(PolyQ(), 2), InputError);
    CHECK_THROWS_AS(factor_over_quad(P({1, 0, 0, 0, 0, 1}), 2), InputError);  // deg 5
}

TEST_CASE("quadratic irreducibility over Q(sqrt(d))") {
    QuadElem one = QuadElem::from_rational(2, 1);
    PolyQuad g(2, {QuadElem::from_rational(2, -1), QuadElem(2, 0, 2), one});
    CHECK(quad_quadratic_irreducible(g));  // t^2 + 2 sqrt2 t - 1

    PolyQuad sq(2, {QuadElem::from_rational(2, 2), QuadElem(2, 0, 2), one});
    CHECK_FALSE(quad_quadratic_irreducible(sq));  // (t + sqrt2)^2

    PolyQuad split(2, {QuadElem::from_rational(2, -2), QuadElem::from_rational(2, 0), one});
    CHECK_FALSE(quad_quadratic_irreducible(split));  // t^2 - 2 = (t-sqrt2)(t+sqrt2)

    PolyQuad stays(2, {QuadElem::from_rational(2, -3), QuadElem::from_rational(2, 0), one});
    CHECK(quad_quadratic_irreducible(stays));  // t^2 - 3 over Q(sqrt 2)

    CHECK_THROWS_AS(quad_quadratic_irreducible(PolyQuad(2, {one})), InputError);
}
