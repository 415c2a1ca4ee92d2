#include "cb/brauer.hpp"

#include <algorithm>

namespace cb {
namespace {

Rational rational_power(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational quadratic_disc(const PolyQ& p) {
    // monic t^2 + bt + c0
    Rational b = p.at(1), c0 = p.at(0);
    return Rational(b * b - 4 * c0);
}

std::vector<int> xor_vec(std::vector<int> a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

bool is_zero_vec(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int b) { return b == 0; });
}

// reduced row echelon basis over F_2
std::vector<std::vector<int>> echelon(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<int>> basis;
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < width; ++col) {
        auto pivot = std::find_if(rows.begin(), rows.end(), [&](const std::vector<int>& r) {
            for (size_t j = 0; j < col; ++j)
                if (r[j]) return false;
            return r[col] != 0;
        });
        if (pivot == rows.end()) continue;
        std::vector<int> p = *pivot;
        for (std::vector<int>& r : rows)
            if (r[col] && &r != &*pivot) r = xor_vec(r, p);
        for (std::vector<int>& b : basis)
            if (b[col]) b = xor_vec(b, p);
        basis.push_back(p);
        rows.erase(pivot);
    }
    return basis;
}

bool reduces_to_zero(std::vector<int> v, const std::vector<std::vector<int>>& basis) {
    for (const std::vector<int>& b : basis) {
        size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead < v.size() && v[lead]) v = xor_vec(v, b);
    }
    return is_zero_vec(v);
}

// coordinates of v in the span of an echelon basis; v must lie in the span
std::vector<int> coordinates(std::vector<int> v, const std::vector<std::vector<int>>& basis) {
    std::vector<int> coords(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        size_t lead = 0;
        while (lead < basis[i].size() && basis[i][lead] == 0) ++lead;
        if (lead < v.size() && v[lead]) {
            coords[i] = 1;
            v = xor_vec(v, basis[i]);
        }
    }
    if (!is_zero_vec(v)) throw LimitError("vector escapes the expected span");
    return coords;
}

std::string bits_to_string(const std::vector<int>& v) {
    std::string s;
    for (int b : v) s += b ? '1' : '0';
    return s;
}

// all vectors of the subspace cut out by the square condition, plus its basis
template <typename Elem, typename SquareTest, typename Mul>
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> norm_subspace(
    const std::vector<Elem>& norms, const Elem& one, SquareTest is_sq, Mul mul) {
    int n = static_cast<int>(norms.size());
    if (n > 6) throw LimitError("singular locus enumeration supports at most 6 points");
    std::vector<std::vector<int>> members;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Elem prod = one;
        std::vector<int> eps(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                eps[i] = 1;
                prod = mul(prod, norms[i]);
            }
        if (is_sq(prod)) members.push_back(std::move(eps));
    }
    std::vector<std::vector<int>> basis = echelon(members);
    return {members, basis};
}

// canonical representatives of the nonzero cosets of V/(1,...,1): the nonzero
// members whose last coordinate vanishes
std::vector<std::vector<int>> coset_reps(const std::vector<std::vector<int>>& members) {
    std::vector<std::vector<int>> reps;
    for (const std::vector<int>& v : members)
        if (!v.empty() && v.back() == 0 && !is_zero_vec(v)) reps.push_back(v);
    std::sort(reps.begin(), reps.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return bits_to_string(a) < bits_to_string(b);
              });
    return reps;
}

bool same_square_class(const Rational& a, const Rational& b) {
    return is_square_rational(Rational(a * b));
}

}  // namespace

FiberDatum FiberDatum::with_rational(const ClosedPoint& P, const Rational& alpha) {
    if (alpha == 0) throw InputError("fiber residue must be nonzero");
    if (P.degree() == 1 && is_square_rational(alpha))
        throw InputError("degree-1 residue must be a nonsquare (otherwise the fiber contracts)");
    FiberDatum f;
    f.point = P;
    f.rep = Rep::rational;
    f.alpha_rational = alpha;
    return f;
}

FiberDatum FiberDatum::with_quadratic(const ClosedPoint& P, const QuadElem& alpha) {
    if (P.degree() != 2) throw InputError("quadratic residues require a degree-2 point");
    if (alpha.y == 0) throw InputError("quadratic residue is rational; use the rational form");
    Int want = squarefree_part(quadratic_disc(P.minpoly));
    if (alpha.d != want)
        throw InputError("residue discriminant does not match the residue field");
    FiberDatum f;
    f.point = P;
    f.rep = Rep::quadratic;
    f.alpha_quad = alpha;
    return f;
}

FiberDatum FiberDatum::with_polynomial(const ClosedPoint& P, const PolyQ& alpha) {
    if (P.degree() < 3) throw InputError("polynomial residues require degree 3 or 4");
    PolyQ reduced = divmod(alpha, P.minpoly).second;
    if (reduced.is_zero()) throw InputError("fiber residue must be nonzero");
    FiberDatum f;
    f.point = P;
    f.rep = Rep::polynomial;
    f.alpha_poly = reduced;
    return f;
}

Rational FiberDatum::norm() const {
    switch (rep) {
        case Rep::rational:
            return rational_power(alpha_rational, point.degree());
        case Rep::quadratic:
            return quad_norm(alpha_quad);
        case Rep::polynomial:
        default:
            return resultant(point.minpoly, alpha_poly);
    }
}

std::string FiberDatum::alpha_to_string() const {
    switch (rep) {
        case Rep::rational:
            return rational_to_string(alpha_rational);
        case Rep::quadratic:
            return quad_to_string(alpha_quad);
        case Rep::polynomial:
        default:
            return alpha_poly.to_string();
    }
}

QuadElem FiberDatumL::norm() const {
    switch (rep) {
        case Rep::rational:
            return QuadElem::from_rational(d, rational_power(alpha_rational, degree()));
        case Rep::quadelem:
            if (alpha_quad.d == d) return alpha_quad;  // element of L at a degree-1 point
            return QuadElem::from_rational(d, quad_norm(alpha_quad));
        case Rep::polynomial:
        default: {
            // the point stayed irreducible, so the norm to L equals the norm to Q
            std::vector<Rational> coeffs;
            for (const QuadElem& q : point.c) coeffs.push_back(q.x);
            return QuadElem::from_rational(d, resultant(PolyQ(coeffs), alpha_poly));
        }
    }
}

std::string FiberDatumL::alpha_to_string() const {
    switch (rep) {
        case Rep::rational:
            return rational_to_string(alpha_rational);
        case Rep::quadelem:
            return quad_to_string(alpha_quad);
        case Rep::polynomial:
        default:
            return alpha_poly.to_string();
    }
}

ConicBundleData ConicBundleData::make_chatelet(const Rational& a, const Rational& c,
                                               const PolyQ& f, unsigned long seed) {
    if (a == 0 || c == 0) throw InputError("chatelet parameters must be nonzero");
    if (is_square_rational(a))
        throw InputError("the class a must be a nonsquare (the bundle is rational otherwise)");
    if (f.degree() < 3 || f.degree() > 4)
        throw InputError("chatelet polynomial must have degree 3 or 4");
    if (!is_squarefree(f)) throw InputError("degenerate bundle: f has a repeated factor");

    ConicBundleData X;
    X.chatelet = true;
    X.a = a;
    X.input_c = c;
    X.input_f = f;

    PolyQ work = f;
    if (f.degree() == 3) {
        // t = r + 1/s with f(r) != 0 moves the degree-3 model to a quartic
        // with a rational singular point at s = 0
        Rational r(0);
        while (f.eval(r) == 0) r += 1;
        PolyQ shifted = f.compose_affine(r, Rational(1));
        work = PolyQ::x() * shifted.reversal(3);
    }
    auto [mult, prim] = primitive_integer_form(work);
    std::vector<Rational> coeffs;
    for (const Int& z : prim) coeffs.emplace_back(z);
    X.f = PolyQ(coeffs);
    X.c = Rational(c * mult);

    Factorization fac = factor_over_Q(X.f, seed);
    std::vector<PolyQ> irreducibles;
    for (const auto& [g, mult_g] : fac.factors) {
        if (mult_g != 1) throw InputError("degenerate bundle: f has a repeated factor");
        irreducibles.push_back(g);
    }
    std::sort(irreducibles.begin(), irreducibles.end(), [](const PolyQ& x, const PolyQ& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.to_string() < y.to_string();
    });
    for (const PolyQ& g : irreducibles)
        X.S.push_back(FiberDatum::with_rational(ClosedPoint::make(g), a));
    X.geometric_fiber_count = 4;
    return X;
}

ConicBundleData ConicBundleData::make_general(const std::vector<FiberDatum>& S) {
    ConicBundleData X;
    X.chatelet = false;
    X.S = S;
    Rational prod(1);
    for (size_t i = 0; i < S.size(); ++i) {
        for (size_t j = i + 1; j < S.size(); ++j)
            if (S[i].point == S[j].point) throw InputError("duplicate closed point");
        prod *= S[i].norm();
        X.geometric_fiber_count += S[i].degree();
    }
    if (!S.empty() && !is_square_rational(prod))
        throw InputError("inconsistent residues: the product of norms is not a square");
    return X;
}

const std::vector<FiberDatum>& singular_locus(const ConicBundleData& X) { return X.S; }

bool F2Space::contains(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != ambient) return false;
    return reduces_to_zero(v, basis);
}

std::string F2Space::to_string() const {
    std::string s;
    for (const auto& b : basis) {
        if (!s.empty()) s += ",";
        s += bits_to_string(b);
    }
    return s.empty() ? "0" : s;
}

int F2Matrix::rank() const { return static_cast<int>(echelon(entries).size()); }

std::string F2Matrix::to_string() const {
    std::string s;
    for (const auto& r : entries) {
        if (!s.empty()) s += ";";
        s += bits_to_string(r);
    }
    return s;
}

bool BrauerGeneratorQ::trivial_at_infinity() const {
    if (!has_symbol) return true;  // each corestriction summand dies at infinity
    if (is_square_rational(a)) return true;
    return symbol_poly.degree() % 2 == 0 && symbol_poly.is_monic();
}

std::string BrauerGeneratorQ::to_string(const std::vector<FiberDatum>& S) const {
    std::string s = "eps=" + bits_to_string(epsilon);
    if (has_symbol) {
        s += " symbol=(" + rational_to_string(a) + ", " + symbol_poly.to_string() + ")";
        return s;
    }
    s += " summands=";
    bool first = true;
    for (size_t i = 0; i < epsilon.size(); ++i) {
        if (!epsilon[i]) continue;
        if (!first) s += " + ";
        first = false;
        s += "cor(" + S[i].alpha_to_string() + ", t mod " + S[i].point.minpoly.to_string() + ")";
    }
    return s;
}

bool BrauerGeneratorL::trivial_at_infinity() const {
    if (!has_symbol) return true;
    if (is_square_rational(a)) return true;
    return symbol_poly.degree() % 2 == 0 && symbol_poly.is_monic();
}

std::string BrauerGeneratorL::to_string(const std::vector<FiberDatumL>& SL) const {
    std::string s = "eps=" + bits_to_string(epsilon);
    if (has_symbol) {
        s += " symbol=(" + rational_to_string(a) + ", " + symbol_poly.to_string() + ")";
        return s;
    }
    s += " summands=";
    bool first = true;
    for (size_t i = 0; i < epsilon.size(); ++i) {
        if (!epsilon[i]) continue;
        if (!first) s += " + ";
        first = false;
        s += "cor(" + SL[i].alpha_to_string() + ", t mod " + SL[i].point.to_string() + ")";
    }
    return s;
}

BrauerQuotient brauer_quotient(const std::vector<FiberDatum>& S) {
    std::vector<Rational> norms;
    norms.reserve(S.size());
    for (const FiberDatum& f : S) norms.push_back(f.norm());
    auto [members, basis] =
        norm_subspace(norms, Rational(1), [](const Rational& r) { return is_square_rational(r); },
                      [](const Rational& x, const Rational& y) { return Rational(x * y); });

    BrauerQuotient q;
    q.V.ambient = static_cast<int>(S.size());
    q.V.basis = basis;
    for (const std::vector<int>& eps : coset_reps(members)) {
        BrauerGeneratorQ g;
        g.epsilon = eps;
        g.has_symbol = true;
        bool first = true;
        PolyQ prod = PolyQ::constant(Rational(1));
        for (size_t i = 0; i < eps.size(); ++i) {
            if (!eps[i]) continue;
            if (S[i].rep != FiberDatum::Rep::rational) {
                g.has_symbol = false;
                break;
            }
            if (first) {
                g.a = S[i].alpha_rational;
                first = false;
            } else if (!same_square_class(g.a, S[i].alpha_rational)) {
                g.has_symbol = false;
                break;
            }
            prod = prod * S[i].point.minpoly;
        }
        if (g.has_symbol) g.symbol_poly = prod;
        q.generators.push_back(std::move(g));
    }
    return q;
}

BaseChangeResult base_change_locus(const std::vector<FiberDatum>& S, const QuadDisc& d,
                                   unsigned long seed) {
    BaseChangeResult out;
    out.d = d.d;
    for (size_t ip = 0; ip < S.size(); ++ip) {
        const FiberDatum& fd = S[ip];
        GaloisOrbit orbit;
        orbit.parent = static_cast<int>(ip);
        int deg = fd.degree();
        bool split = false;

        if (deg == 2) {
            Rational disc = quadratic_disc(fd.point.minpoly);
            if (squarefree_part(disc) == d.d) {
                split = true;
                Rational k = sqrt_rational(Rational(disc / Rational(d.d)));
                Rational b = fd.point.minpoly.at(1);
                for (int i = 0; i < 2; ++i) {
                    QuadElem tau(d.d, Rational(-b / 2), i == 0 ? Rational(k / 2)
                                                               : Rational(-k / 2));
                    FiberDatumL child;
                    child.d = d.d;
                    child.point = PolyQuad(
                        d.d, {QuadElem(d.d, Rational(-tau.x), Rational(-tau.y)),
                              QuadElem::from_rational(d.d, Rational(1))});
                    child.parent = static_cast<int>(ip);
                    if (fd.rep == FiberDatum::Rep::rational) {
                        child.rep = FiberDatumL::Rep::rational;
                        child.alpha_rational = fd.alpha_rational;
                    } else {
                        // sqrt(disc P) = k sqrt(d) identifies k(P) with L; the
                        // two points carry the two conjugate images
                        child.rep = FiberDatumL::Rep::quadelem;
                        child.alpha_quad =
                            QuadElem(d.d, fd.alpha_quad.x,
                                     i == 0 ? fd.alpha_quad.y : Rational(-fd.alpha_quad.y));
                    }
                    orbit.children.push_back(static_cast<int>(out.SL.size()));
                    out.SL.push_back(std::move(child));
                }
            }
        } else if (deg == 4) {
            std::optional<ConjugateFactorization> cf =
                conjugate_factorization(fd.point.minpoly, d.d);
            if (cf) {
                split = true;
                if (fd.rep != FiberDatum::Rep::rational)
                    throw InputError(
                        "unsupported residue transport at a splitting higher-degree point");
                PolyQuad g = cf->g;
                for (int i = 0; i < 2; ++i) {
                    FiberDatumL child;
                    child.d = d.d;
                    child.point = i == 0 ? g : g.conj();
                    child.rep = FiberDatumL::Rep::rational;
                    child.alpha_rational = fd.alpha_rational;
                    child.parent = static_cast<int>(ip);
                    orbit.children.push_back(static_cast<int>(out.SL.size()));
                    out.SL.push_back(std::move(child));
                }
            }
        }

        if (!split) {
            FiberDatumL child;
            child.d = d.d;
            child.point = PolyQuad::from_rational_poly(d.d, fd.point.minpoly);
            child.parent = static_cast<int>(ip);
            switch (fd.rep) {
                case FiberDatum::Rep::rational:
                    child.rep = FiberDatumL::Rep::rational;
                    child.alpha_rational = fd.alpha_rational;
                    break;
                case FiberDatum::Rep::quadratic:
                    child.rep = FiberDatumL::Rep::quadelem;
                    child.alpha_quad = fd.alpha_quad;
                    break;
                case FiberDatum::Rep::polynomial:
                    child.rep = FiberDatumL::Rep::polynomial;
                    child.alpha_poly = fd.alpha_poly;
                    break;
            }
            orbit.children.push_back(static_cast<int>(out.SL.size()));
            out.SL.push_back(std::move(child));
        }
        orbit.split = split;
        out.orbits.push_back(std::move(orbit));
    }
    for (GaloisOrbit& o : out.orbits) {
        if (o.split) {
            out.SL[o.children[0]].conjugate = o.children[1];
            out.SL[o.children[1]].conjugate = o.children[0];
        } else {
            out.SL[o.children[0]].conjugate = o.children[0];
        }
    }
    (void)seed;
    return out;
}

BrauerQuotientL brauer_quotient_L(const BaseChangeResult& bc) {
    std::vector<QuadElem> norms;
    norms.reserve(bc.SL.size());
    for (const FiberDatumL& f : bc.SL) norms.push_back(f.norm());
    auto [members, basis] = norm_subspace(
        norms, QuadElem::from_rational(bc.d, Rational(1)),
        [](const QuadElem& z) { return quad_is_square(z); },
        [](const QuadElem& x, const QuadElem& y) { return x * y; });

    BrauerQuotientL q;
    q.d = bc.d;
    q.V.ambient = static_cast<int>(bc.SL.size());
    q.V.basis = basis;
    for (const std::vector<int>& eps : coset_reps(members)) {
        BrauerGeneratorL g;
        g.epsilon = eps;
        g.has_symbol = true;
        bool first = true;
        PolyQuad prod = PolyQuad::from_rational_poly(bc.d, PolyQ::constant(Rational(1)));
        for (size_t i = 0; i < eps.size(); ++i) {
            if (!eps[i]) continue;
            if (bc.SL[i].rep != FiberDatumL::Rep::rational) {
                g.has_symbol = false;
                break;
            }
            if (first) {
                g.a = bc.SL[i].alpha_rational;
                first = false;
            } else if (!same_square_class(g.a, bc.SL[i].alpha_rational)) {
                g.has_symbol = false;
                break;
            }
            prod = prod * bc.SL[i].point;
        }
        if (g.has_symbol) g.symbol_poly = prod;
        q.generators.push_back(std::move(g));
    }
    return q;
}

RestrictionData restriction_map(const std::vector<FiberDatum>& S, const QuadDisc& d,
                                unsigned long seed) {
    RestrictionData rd;
    rd.base_change = base_change_locus(S, d, seed);
    rd.over_Q = brauer_quotient(S);
    rd.over_L = brauer_quotient_L(rd.base_change);

    // canonical complements: members with vanishing first coordinate
    std::vector<std::vector<int>> wq, wl;
    {
        std::vector<Rational> norms;
        for (const FiberDatum& f : S) norms.push_back(f.norm());
        auto [members, basis] = norm_subspace(
            norms, Rational(1), [](const Rational& r) { return is_square_rational(r); },
            [](const Rational& x, const Rational& y) { return Rational(x * y); });
        for (const auto& v : members)
            if (!v.empty() && v.back() == 0) wq.push_back(v);
        if (S.empty()) wq.push_back({});
    }
    {
        std::vector<QuadElem> norms;
        for (const FiberDatumL& f : rd.base_change.SL) norms.push_back(f.norm());
        auto [members, basis] = norm_subspace(
            norms, QuadElem::from_rational(d.d, Rational(1)),
            [](const QuadElem& z) { return quad_is_square(z); },
            [](const QuadElem& x, const QuadElem& y) { return x * y; });
        for (const auto& v : members)
            if (!v.empty() && v.back() == 0) wl.push_back(v);
        if (rd.base_change.SL.empty()) wl.push_back({});
    }
    std::vector<std::vector<int>> bq = echelon(wq), bl = echelon(wl);

    int nL = static_cast<int>(rd.base_change.SL.size());
    std::vector<int> all_ones(nL, 1);
    rd.matrix.rows = static_cast<int>(bl.size());
    rd.matrix.cols = static_cast<int>(bq.size());
    std::vector<std::vector<int>> cols;
    for (const std::vector<int>& b : bq) {
        std::vector<int> ext(nL, 0);
        for (const GaloisOrbit& orbit : rd.base_change.orbits)
            if (b[orbit.parent])
                for (int ch : orbit.children) ext[ch] = 1;
        if (!rd.over_L.V.contains(ext))
            throw LimitError("restriction image escapes the target subspace");
        if (!ext.empty() && ext.back()) ext = xor_vec(ext, all_ones);
        cols.push_back(coordinates(ext, bl));
    }
    rd.matrix.entries.assign(rd.matrix.rows, std::vector<int>(rd.matrix.cols, 0));
    for (int j = 0; j < rd.matrix.cols; ++j)
        for (int i = 0; i < rd.matrix.rows; ++i) rd.matrix.entries[i][j] = cols[j][i];

    int rank = rd.matrix.rank();
    rd.surjective = rank == rd.matrix.rows;
    rd.injective = rank == rd.matrix.cols;
    return rd;
}

std::string nonsurj_case_to_string(NonsurjCase c) {
    switch (c) {
        case NonsurjCase::case_i:
            return "case_i";
        case NonsurjCase::case_ii:
            return "case_ii";
        default:
            return "not_applicable";
    }
}

NonsurjCase classify_nonsurjective(const ConicBundleData& X, const QuadDisc& d,
                                   unsigned long seed) {
    if (X.geometric_fiber_count != 4)
        throw InputError("classification requires four geometric fibers");
    RestrictionData rd = restriction_map(X.S, d, seed);
    if (rd.surjective) return NonsurjCase::not_applicable;
    if (rd.over_Q.quotient_dim() != 0) return NonsurjCase::not_applicable;

    const auto& SL = rd.base_change.SL;
    if (X.S.size() == 1 && X.S[0].degree() == 4 && rd.base_change.orbits[0].split &&
        SL.size() == 2 && SL[0].degree() == 2 && SL[1].degree() == 2)
        return NonsurjCase::case_i;

    if (X.S.size() == 2 && X.S[0].degree() == 2 && X.S[1].degree() == 2 && SL.size() == 2 &&
        !rd.base_change.orbits[0].split && !rd.base_change.orbits[1].split &&
        !is_square_rational(X.S[0].norm()) && !is_square_rational(X.S[1].norm()))
        return NonsurjCase::case_ii;

    return NonsurjCase::not_applicable;
}

std::set<Int> critical_extensions_four_fibers(const ConicBundleData& X, unsigned long seed) {
    if (X.geometric_fiber_count != 4)
        throw InputError("critical extensions require four geometric fibers");
    std::set<Int> out;
    for (const FiberDatum& f : X.S)
        if (f.degree() == 1) return out;  // a rational singular point forces points everywhere

    if (X.S.size() == 1 && X.S[0].degree() == 4) {
        for (const Int& d : quadratic_subfields(X.S[0].point.minpoly, seed)) out.insert(d);
        return out;
    }
    if (X.S.size() == 2 && X.S[0].degree() == 2 && X.S[1].degree() == 2) {
        for (const FiberDatum& f : X.S) {
            Rational nm = f.norm();
            if (!is_square_rational(nm)) out.insert(squarefree_part(nm));
        }
        return out;
    }
    return out;  // degree pattern 3+1 cannot reach the non-surjective cases
}

std::set<Int> problematic_set_M(const ConicBundleData& X, unsigned long seed) {
    if (X.S.size() > 6) throw LimitError("singular locus enumeration supports at most 6 points");
    std::set<Int> out;
    for (const FiberDatum& f : X.S) {
        if (f.degree() == 2) out.insert(squarefree_part(quadratic_disc(f.point.minpoly)));
        if (f.degree() == 4)
            for (const Int& d : quadratic_subfields(f.point.minpoly, seed)) out.insert(d);
    }
    size_t n = X.S.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Rational beta(1);
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) beta *= X.S[i].norm();
        if (!is_square_rational(beta)) out.insert(squarefree_part(beta));
    }
    return out;
}

}  // namespace cb
