#include "cb/poly.hpp"
#include "cb/factor.hpp"

namespace cb {

const Rational& PolyQ::lc() const {
    if (c.empty()) throw InputError("leading coefficient of zero polynomial");
    return c.back();
}

Rational PolyQ::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

QuadElem PolyQ::eval_quad(const QuadElem& t) const {
    QuadElem acc = QuadElem::from_rational(t.d, Rational(0));
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * t + QuadElem::from_rational(t.d, c[i]);
    return acc;
}

PolyQ PolyQ::derivative() const {
    std::vector<Rational> out;
    for (size_t i = 1; i < c.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * c[i]);
    return PolyQ(std::move(out));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw InputError("monic() of zero polynomial");
    std::vector<Rational> out;
    out.reserve(c.size());
    for (auto& a : c) out.push_back(a / c.back());
    return PolyQ(std::move(out));
}

PolyQ PolyQ::compose_affine(const Rational& a, const Rational& b) const {
    // Horner on f at (a + b*t)
    PolyQ acc;
    PolyQ lin({a, b});
    for (size_t i = c.size(); i-- > 0;) acc = acc * lin + PolyQ::constant(c[i]);
    return acc;
}

PolyQ PolyQ::reversal(int n) const {
    if (n < degree()) throw InputError("reversal target below degree");
    std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) out[static_cast<size_t>(n) - i] = c[i];
    return PolyQ(std::move(out));
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::string term;
        Rational a = c[i];
        if (!out.empty()) {
            out += sign_of(a) < 0 ? " - " : " + ";
            if (sign_of(a) < 0) a = -a;
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) term += rational_to_string(a);
        if (i > 0) {
            if (!unit) term += "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) - b.at(i);
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a) {
    std::vector<Rational> out;
    out.reserve(a.c.size());
    for (auto& x : a.c) out.push_back(-x);
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> out(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return PolyQ(std::move(out));
}

PolyQ operator*(const Rational& s, const PolyQ& a) {
    std::vector<Rational> out;
    out.reserve(a.c.size());
    for (auto& x : a.c) out.push_back(s * x);
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    PolyQ rem = a;
    int db = b.degree();
    if (rem.degree() < db) return {PolyQ(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rational coef = rem.lc() / b.lc();
        q[static_cast<size_t>(k)] = coef;
        for (int i = 0; i <= db; ++i)
            rem.c[static_cast<size_t>(k + i)] -= coef * b.c[static_cast<size_t>(i)];
        rem.trim();
    }
    return {PolyQ(std::move(q)), rem};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Rational resultant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    // Euclidean algorithm with the standard transformation rules.
    PolyQ f = a, g = b;
    Rational res(1);
    bool swapped = false;
    if (f.degree() < g.degree()) {
        std::swap(f, g);
        if ((a.degree() & 1) && (b.degree() & 1)) res = -res;
        swapped = true;
    }
    (void)swapped;
    while (true) {
        if (g.degree() == 0) {
            Rational lead = g.c[0];
            Rational pw(1);
            for (int i = 0; i < f.degree(); ++i) pw *= lead;
            return res * pw;
        }
        PolyQ r = divmod(f, g).second;
        if (r.is_zero()) return Rational(0);
        // Res(f,g) = lc(g)^{deg f - deg r} * (-1)^{deg f * deg g} * Res(g, r)
        Rational pw(1);
        for (int i = 0; i < f.degree() - r.degree(); ++i) pw *= g.lc();
        res *= pw;
        if ((f.degree() & 1) && (g.degree() & 1)) res = -res;
        f = std::move(g);
        g = std::move(r);
    }
}

Rational poly_discriminant(const PolyQ& f) {
    int n = f.degree();
    if (n < 1) throw InputError("discriminant needs degree >= 1");
    Rational r = resultant(f, f.derivative()) / f.lc();
    int s = (n * (n - 1) / 2) % 2;
    return s ? -r : r;
}

bool is_squarefree(const PolyQ& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

SquarefreeDecomp squarefree_decomposition(const PolyQ& f) {
    if (f.is_zero()) throw InputError("squarefree decomposition of zero");
    SquarefreeDecomp out;
    out.content = f.lc();
    PolyQ m = f.monic();
    if (m.degree() == 0) return out;
    PolyQ g = poly_gcd(m, m.derivative());
    PolyQ w = divmod(m, g).first;
    PolyQ y = divmod(m.derivative(), g).first;
    int i = 1;
    while (w.degree() > 0) {
        PolyQ z = y - w.derivative();
        PolyQ gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.parts.emplace_back(gi, i);
        w = divmod(w, gi).first;
        y = divmod(z, gi).first;
        ++i;
    }
    return out;
}

std::pair<Rational, std::vector<Int>> primitive_integer_form(const PolyQ& f) {
    if (f.is_zero()) throw InputError("primitive form of zero polynomial");
    Int den_lcm = 1;
    for (auto& a : f.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(f.c.size());
    Int g = 0;
    for (auto& a : f.c) {
        Int v = a.get_num() * (den_lcm / a.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    // f = (g/den_lcm) * prim
    return {make_rational(g, den_lcm), std::move(ints)};
}

PolyQuad PolyQuad::from_rational_poly(const Int& d, const PolyQ& f) {
    std::vector<QuadElem> out;
    out.reserve(f.c.size());
    for (auto& a : f.c) out.push_back(QuadElem::from_rational(d, a));
    return PolyQuad(d, std::move(out));
}

bool PolyQuad::is_rational() const {
    for (auto& a : c)
        if (a.y != 0) return false;
    return true;
}

QuadElem PolyQuad::eval(const QuadElem& t) const {
    if (t.d != d) throw InputError("evaluation point in wrong quadratic field");
    QuadElem acc = QuadElem::from_rational(d, Rational(0));
    for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

PolyQuad PolyQuad::conj() const {
    std::vector<QuadElem> out;
    out.reserve(c.size());
    for (auto& a : c) out.push_back(a.conj());
    return PolyQuad(d, std::move(out));
}

PolyQuad PolyQuad::derivative() const {
    std::vector<QuadElem> out;
    for (size_t i = 1; i < c.size(); ++i)
        out.push_back(Rational(static_cast<long>(i)) * c[i]);
    return PolyQuad(d, std::move(out));
}

PolyQuad PolyQuad::compose_affine(const QuadElem& a, const QuadElem& b) const {
    PolyQuad acc(d, {});
    PolyQuad lin(d, {a, b});
    for (size_t i = c.size(); i-- > 0;) {
        PolyQuad cst(d, {c[i]});
        acc = acc * lin + cst;
    }
    return acc;
}

PolyQuad PolyQuad::reversal(int n) const {
    if (n < degree()) throw InputError("reversal target below degree");
    std::vector<QuadElem> out(static_cast<size_t>(n) + 1, QuadElem::from_rational(d, Rational(0)));
    for (size_t i = 0; i < c.size(); ++i) out[static_cast<size_t>(n) - i] = c[i];
    return PolyQuad(d, std::move(out));
}

std::string PolyQuad::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        bool unit = c[i].is_rational() && c[i].x == 1 && i > 0;
        if (!unit) out += "(" + quad_to_string(c[i]) + ")";
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyQuad operator+(const PolyQuad& a, const PolyQuad& b) {
    if (a.d != b.d) throw InputError("mixed fields in polynomial sum");
    std::vector<QuadElem> out(std::max(a.c.size(), b.c.size()),
                              QuadElem::from_rational(a.d, Rational(0)));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
    return PolyQuad(a.d, std::move(out));
}

PolyQuad operator-(const PolyQuad& a, const PolyQuad& b) {
    if (a.d != b.d) throw InputError("mixed fields in polynomial difference");
    std::vector<QuadElem> out(std::max(a.c.size(), b.c.size()),
                              QuadElem::from_rational(a.d, Rational(0)));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) - b.at(i);
    return PolyQuad(a.d, std::move(out));
}

PolyQuad operator*(const PolyQuad& a, const PolyQuad& b) {
    if (a.d != b.d) throw InputError("mixed fields in polynomial product");
    if (a.is_zero() || b.is_zero()) return PolyQuad(a.d, {});
    std::vector<QuadElem> out(a.c.size() + b.c.size() - 1,
                              QuadElem::from_rational(a.d, Rational(0)));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return PolyQuad(a.d, std::move(out));
}

PolyQuad operator*(const QuadElem& s, const PolyQuad& a) {
    if (s.d != a.d) throw InputError("mixed fields in scalar product");
    std::vector<QuadElem> out;
    out.reserve(a.c.size());
    for (auto& x : a.c) out.push_back(s * x);
    return PolyQuad(a.d, std::move(out));
}

ClosedPoint ClosedPoint::make(const PolyQ& p) {
    if (p.degree() < 1 || p.degree() > 4)
        throw InputError("closed point degree must be 1..4");
    if (!p.is_monic()) throw InputError("closed point polynomial must be monic");
    if (!is_irreducible_over_Q(p))
        throw InputError("closed point polynomial is reducible: " + p.to_string());
    return ClosedPoint{p};
}

}  // namespace cb
