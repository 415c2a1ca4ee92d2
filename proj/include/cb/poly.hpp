#pragma once

#include "cb/exact.hpp"

namespace cb {

// Polynomial over Q, coefficients in ascending degree order, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
struct PolyQ {
    std::vector<Rational> c;

    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static PolyQ constant(const Rational& a) { return PolyQ({a}); }
    static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& lc() const;
    Rational at(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    Rational eval(const Rational& t) const;
    QuadElem eval_quad(const QuadElem& t) const;

    PolyQ derivative() const;
    PolyQ monic() const;
    // f(a + b*t)
    PolyQ compose_affine(const Rational& a, const Rational& b) const;
    // s^n * f(1/s) for a chosen n >= degree
    PolyQ reversal(int n) const;

    bool operator==(const PolyQ& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "t") const;
};

PolyQ operator+(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const Rational& s, const PolyQ& a);

// Division with remainder; b nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
// Monic gcd.
PolyQ poly_gcd(PolyQ a, PolyQ b);

Rational resultant(const PolyQ& a, const PolyQ& b);
Rational poly_discriminant(const PolyQ& f);
bool is_squarefree(const PolyQ& f);

// Yun decomposition of the monic normalization: f = content * prod part_i^i.
struct SquarefreeDecomp {
    Rational content;
    std::vector<std::pair<PolyQ, int>> parts;  // monic, pairwise coprime
};
SquarefreeDecomp squarefree_decomposition(const PolyQ& f);

// Primitive integer polynomial proportional to f (positive leading coefficient),
// together with the rational multiplier: f = mult * prim.
std::pair<Rational, std::vector<Int>> primitive_integer_form(const PolyQ& f);

// Polynomial over Q(sqrt(d)). All coefficients share the discriminant.
struct PolyQuad {
    Int d = 0;
    std::vector<QuadElem> c;

    PolyQuad() = default;
    PolyQuad(Int d_, std::vector<QuadElem> coeffs) : d(std::move(d_)), c(std::move(coeffs)) {
        trim();
    }
    static PolyQuad from_rational_poly(const Int& d, const PolyQ& f);

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    QuadElem at(size_t i) const {
        return i < c.size() ? c[i] : QuadElem::from_rational(d, Rational(0));
    }
    bool is_monic() const {
        return !c.empty() && c.back().is_rational() && c.back().x == 1;
    }
    bool is_rational() const;

    QuadElem eval(const QuadElem& t) const;
    PolyQuad conj() const;
    PolyQuad derivative() const;
    PolyQuad compose_affine(const QuadElem& a, const QuadElem& b) const;
    PolyQuad reversal(int n) const;

    bool operator==(const PolyQuad& o) const { return d == o.d && c == o.c; }
    std::string to_string(const std::string& var = "t") const;
};

PolyQuad operator+(const PolyQuad& a, const PolyQuad& b);
PolyQuad operator-(const PolyQuad& a, const PolyQuad& b);
PolyQuad operator*(const PolyQuad& a, const PolyQuad& b);
PolyQuad operator*(const QuadElem& s, const PolyQuad& a);

// A closed point of the affine line over Q: monic irreducible polynomial,
// degree 1 through 4.
struct ClosedPoint {
    PolyQ minpoly;

    static ClosedPoint make(const PolyQ& p);
    int degree() const { return minpoly.degree(); }
    bool operator==(const ClosedPoint& o) const { return minpoly == o.minpoly; }
};

}  // namespace cb
