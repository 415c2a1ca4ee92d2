#include "cb/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace cb {
namespace {

// Integer coefficient vectors, ascending degree. Used both for exact integer
// polynomials and for residues mod m (coefficients kept in [0, m)).
using ZV = std::vector<Int>;

void zv_trim(ZV& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int zv_deg(const ZV& v) { return static_cast<int>(v.size()) - 1; }

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZV zv_red(ZV v, const Int& m) {
    for (auto& a : v) a = mod_pos(a, m);
    zv_trim(v);
    return v;
}

ZV zv_add(const ZV& a, const ZV& b, const Int& m) {
    ZV out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
        out[i] = mod_pos(out[i], m);
    }
    zv_trim(out);
    return out;
}

ZV zv_sub(const ZV& a, const ZV& b, const Int& m) {
    ZV out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
        out[i] = mod_pos(out[i], m);
    }
    zv_trim(out);
    return out;
}

ZV zv_mul(const ZV& a, const ZV& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZV out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return zv_red(std::move(out), m);
}

ZV zv_mul_exact(const ZV& a, const ZV& b) {
    if (a.empty() || b.empty()) return {};
    ZV out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    zv_trim(out);
    return out;
}

ZV zv_sub_exact(const ZV& a, const ZV& b) {
    ZV out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    zv_trim(out);
    return out;
}

Int f_inv(const Int& a, const Int& p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw std::logic_error("non-invertible residue");
    return r;
}

// Division by a monic divisor; valid over Z/m for any m.
std::pair<ZV, ZV> zv_divmod_monic(ZV a, const ZV& b, const Int& m) {
    int db = zv_deg(b);
    if (db < 0) throw std::logic_error("division by zero polynomial");
    zv_trim(a);
    if (zv_deg(a) < db) return {{}, std::move(a)};
    ZV q(static_cast<size_t>(zv_deg(a) - db) + 1, Int(0));
    while (zv_deg(a) >= db) {
        int k = zv_deg(a) - db;
        Int coef = a.back();
        q[static_cast<size_t>(k)] = coef;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(k + i)] = mod_pos(a[static_cast<size_t>(k + i)] - coef * b[static_cast<size_t>(i)], m);
        zv_trim(a);
    }
    zv_trim(q);
    return {std::move(q), std::move(a)};
}

// Division over the field Z/p.
std::pair<ZV, ZV> zv_divmod_field(ZV a, const ZV& b, const Int& p) {
    if (b.empty()) throw std::logic_error("field division by zero");
    Int il = f_inv(b.back(), p);
    ZV bm = b;
    for (auto& x : bm) x = mod_pos(x * il, p);
    auto [q, r] = zv_divmod_monic(std::move(a), bm, p);
    for (auto& x : q) x = mod_pos(x * il, p);
    return {std::move(q), std::move(r)};
}

ZV zv_monic_field(ZV a, const Int& p) {
    if (a.empty()) return a;
    Int il = f_inv(a.back(), p);
    for (auto& x : a) x = mod_pos(x * il, p);
    return a;
}

ZV zv_gcd_field(ZV a, ZV b, const Int& p) {
    zv_trim(a);
    zv_trim(b);
    while (!b.empty()) {
        ZV r = zv_divmod_field(std::move(a), b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zv_monic_field(std::move(a), p);
}

ZV zv_derivative(const ZV& f, const Int& p) {
    ZV out;
    for (size_t i = 1; i < f.size(); ++i)
        out.push_back(mod_pos(f[i] * static_cast<unsigned long>(i), p));
    zv_trim(out);
    return out;
}

// base^e mod (f, p), f monic.
ZV zv_powmod(const ZV& base, const Int& e, const ZV& f, const Int& p) {
    ZV result{Int(1)};
    ZV b = zv_divmod_monic(base, f, p).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = zv_divmod_monic(zv_mul(result, result, p), f, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = zv_divmod_monic(zv_mul(result, b, p), f, p).second;
    }
    return result;
}

// s*g + t*h = 1 mod p for coprime g, h.
std::pair<ZV, ZV> bezout_field(const ZV& g, const ZV& h, const Int& p) {
    ZV r0 = g, r1 = h;
    ZV s0{Int(1)}, s1{};
    ZV t0{}, t1{Int(1)};
    while (!r1.empty()) {
        auto [q, r2] = zv_divmod_field(r0, r1, p);
        ZV s2 = zv_sub(s0, zv_mul(q, s1, p), p);
        ZV t2 = zv_sub(t0, zv_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (zv_deg(r0) != 0) throw std::logic_error("modular factors not coprime");
    Int il = f_inv(r0[0], p);
    for (auto& x : s0) x = mod_pos(x * il, p);
    for (auto& x : t0) x = mod_pos(x * il, p);
    return {std::move(s0), std::move(t0)};
}

// Distinct-degree decomposition of a monic squarefree f mod p:
// (product of all irreducible factors of degree i, i) in increasing i.
std::vector<std::pair<ZV, int>> ddf(ZV f, const Int& p) {
    std::vector<std::pair<ZV, int>> out;
    ZV x{Int(0), Int(1)};
    ZV h = zv_divmod_monic(x, f, p).second;
    int i = 0;
    while (zv_deg(f) > 0 && 2 * (i + 1) <= zv_deg(f)) {
        ++i;
        h = zv_powmod(h, p, f, p);
        ZV g = zv_gcd_field(zv_sub(h, x, p), f, p);
        if (zv_deg(g) > 0) {
            out.emplace_back(g, i);
            f = zv_divmod_field(std::move(f), g, p).first;
            h = zv_divmod_monic(std::move(h), f, p).second;
        }
    }
    if (zv_deg(f) > 0) out.emplace_back(f, zv_deg(f));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p) of a product of distinct
// irreducibles of degree dd.
void edf(const ZV& f, int dd, const Int& p, std::mt19937_64& rng, std::vector<ZV>& out) {
    int n = zv_deg(f);
    if (n == dd) {
        out.push_back(f);
        return;
    }
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(dd));
    Int e = (q - 1) / 2;
    std::uniform_int_distribution<unsigned long> dist(0, p.get_ui() - 1);
    while (true) {
        ZV r(static_cast<size_t>(n));
        for (auto& cc : r) cc = Int(dist(rng));
        zv_trim(r);
        if (zv_deg(r) < 1) continue;
        ZV w = zv_powmod(r, e, f, p);
        w = zv_sub(w, ZV{Int(1)}, p);
        ZV g = zv_gcd_field(std::move(w), f, p);
        if (zv_deg(g) > 0 && zv_deg(g) < n) {
            edf(g, dd, p, rng, out);
            edf(zv_divmod_field(f, g, p).first, dd, p, rng, out);
            return;
        }
    }
}

int count_factors_mod_p(const ZV& f, const Int& p) {
    int c = 0;
    for (auto& [g, i] : ddf(f, p)) c += zv_deg(g) / i;
    return c;
}

std::vector<ZV> factor_mod_p(const ZV& f, const Int& p, std::mt19937_64& rng) {
    std::vector<ZV> out;
    for (auto& [g, i] : ddf(f, p)) {
        if (zv_deg(g) == i)
            out.push_back(g);
        else
            edf(g, i, p, rng, out);
    }
    return out;
}

ZV zv_balanced(ZV v, const Int& P) {
    Int half = P / 2;
    for (auto& x : v) {
        x = mod_pos(x, P);
        if (x > half) x -= P;
    }
    zv_trim(v);
    return v;
}

// One linear lifting chain: F exact monic integer polynomial, g0*h0 = F mod p
// with g0, h0 monic coprime mod p. Returns monic g, h with F = g*h mod P,
// g = g0 and h = h0 mod p. P must be a power of p.
std::pair<ZV, ZV> hensel_pair(const ZV& F, const ZV& g0, const ZV& h0, const Int& p,
                              const Int& P) {
    auto [s, t] = bezout_field(g0, h0, p);
    ZV g = g0, h = h0;
    Int pk = p;
    while (pk < P) {
        ZV diff = zv_sub_exact(F, zv_mul_exact(g, h));
        ZV e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            if (!mpz_divisible_p(diff[i].get_mpz_t(), pk.get_mpz_t()))
                throw std::logic_error("lifting invariant broken");
            Int quo;
            mpz_divexact(quo.get_mpz_t(), diff[i].get_mpz_t(), pk.get_mpz_t());
            e[i] = mod_pos(quo, p);
        }
        zv_trim(e);
        ZV dh = zv_divmod_monic(zv_mul(s, e, p), h0, p).second;
        auto [dg, rem] = zv_divmod_monic(zv_sub(e, zv_mul(g0, dh, p), p), h0, p);
        if (!rem.empty()) throw std::logic_error("lifting division not exact");
        for (size_t i = 0; i < dg.size(); ++i) g[i] += pk * dg[i];
        for (size_t i = 0; i < dh.size(); ++i) h[i] += pk * dh[i];
        pk *= p;
    }
    return {std::move(g), std::move(h)};
}

// Lift every modular factor of the exact monic integer F to mod P.
std::vector<ZV> hensel_multi(const ZV& F, const std::vector<ZV>& facs, const Int& p,
                             const Int& P) {
    if (facs.size() == 1) return {zv_red(F, P)};
    size_t half = facs.size() / 2;
    std::vector<ZV> L(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<ZV> R(facs.begin() + static_cast<long>(half), facs.end());
    ZV g0{Int(1)}, h0{Int(1)};
    for (auto& f : L) g0 = zv_mul(g0, f, p);
    for (auto& f : R) h0 = zv_mul(h0, f, p);
    auto [g, h] = hensel_pair(F, g0, h0, p, P);
    auto out = hensel_multi(zv_balanced(std::move(g), P), L, p, P);
    auto rest = hensel_multi(zv_balanced(std::move(h), P), R, p, P);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

PolyQ zv_to_poly(const ZV& v) {
    std::vector<Rational> cc;
    cc.reserve(v.size());
    for (auto& x : v) cc.emplace_back(x);
    return PolyQ(std::move(cc));
}

ZV poly_to_zv(const PolyQ& f) {
    ZV out;
    out.reserve(f.c.size());
    for (auto& a : f.c) {
        if (a.get_den() != 1) throw std::logic_error("expected integer coefficients");
        out.push_back(a.get_num());
    }
    return out;
}

// Subset recombination of lifted modular factors into true integer factors.
std::vector<ZV> recombine(const ZV& G, std::vector<ZV> pool, const Int& P) {
    std::vector<ZV> out;
    ZV cur = G;
    while (true) {
        if (pool.empty()) break;
        if (pool.size() == 1) {
            out.push_back(cur);
            break;
        }
        bool found = false;
        for (size_t s = 1; !found && 2 * s <= pool.size(); ++s) {
            std::vector<size_t> idx(s);
            std::iota(idx.begin(), idx.end(), size_t{0});
            while (true) {
                ZV cand{Int(1)};
                for (size_t i : idx) cand = zv_mul(cand, pool[i], P);
                cand = zv_balanced(std::move(cand), P);
                auto [quot, rem] = divmod(zv_to_poly(cur), zv_to_poly(cand));
                if (rem.is_zero()) {
                    out.push_back(cand);
                    cur = poly_to_zv(quot);
                    std::vector<ZV> np;
                    for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        np.push_back(std::move(pool[i]));
                    }
                    pool = std::move(np);
                    found = true;
                    break;
                }
                size_t j = s;
                while (j > 0 && idx[j - 1] == pool.size() - s + (j - 1)) --j;
                if (j == 0) break;
                ++idx[j - 1];
                for (size_t k = j; k < s; ++k) idx[k] = idx[k - 1] + 1;
            }
        }
        if (!found) {
            out.push_back(cur);
            break;
        }
        if (zv_deg(cur) == 0) break;
    }
    return out;
}

Int int_pow(const Int& b, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// g monic over Q, squarefree, degree >= 2: monic irreducible rational factors.
std::vector<PolyQ> zassenhaus_monic(const PolyQ& g, std::mt19937_64& rng) {
    int n = g.degree();
    Int lam = 1;
    for (auto& a : g.c) {
        Int den = a.get_den();
        mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), den.get_mpz_t());
    }
    // Integer model G(y) = lam^n g(y/lam), monic over Z.
    ZV G(static_cast<size_t>(n) + 1);
    for (int i = n; i >= 0; --i) {
        Rational a = g.at(static_cast<size_t>(i));
        Int num = a.get_num() * int_pow(lam, n - i);
        Int val;
        mpz_divexact(val.get_mpz_t(), num.get_mpz_t(), a.get_den().get_mpz_t());
        G[static_cast<size_t>(i)] = val;
    }

    // Pick an odd prime of good reduction with the fewest modular factors.
    Int best_p = 0;
    int best_count = n + 1;
    Int q = 2;
    int good = 0;
    while (good < 12) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        ZV Gp = zv_red(G, q);
        if (zv_deg(Gp) != n) continue;
        if (zv_deg(zv_gcd_field(Gp, zv_derivative(Gp, q), q)) != 0) continue;
        ++good;
        int cnt = count_factors_mod_p(Gp, q);
        if (cnt == 1) return {g};
        if (cnt < best_count) {
            best_count = cnt;
            best_p = q;
        }
    }
    const Int p = best_p;
    std::vector<ZV> facs = factor_mod_p(zv_red(G, p), p, rng);

    // Coefficient bound for monic divisors, then lift past twice the bound.
    Int norm2 = 0;
    for (auto& cval : G) norm2 += cval * cval;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Int B = (Int(1) << static_cast<unsigned long>(n)) * (root + 1);
    Int P = p;
    while (P < 2 * B + 1) P *= p;

    std::vector<ZV> lifted = hensel_multi(G, facs, p, P);
    std::vector<ZV> parts = recombine(G, std::move(lifted), P);

    std::vector<PolyQ> out;
    for (auto& Fi : parts) {
        int m = zv_deg(Fi);
        std::vector<Rational> cc(static_cast<size_t>(m) + 1);
        for (int i = 0; i <= m; ++i)
            cc[static_cast<size_t>(i)] = make_rational(Fi[static_cast<size_t>(i)], int_pow(lam, m - i));
        out.push_back(PolyQ(std::move(cc)));
    }
    return out;
}

bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        Rational x = a.at(static_cast<size_t>(i)), y = b.at(static_cast<size_t>(i));
        if (x != y) return x < y;
    }
    return false;
}

void require_squarefree_disc(const Int& d) {
    if (d == 0 || d == 1)
        throw InputError("quadratic discriminant must be squarefree and != 0, 1");
    if (squarefree_part(Rational(d)) != d)
        throw InputError("quadratic discriminant must be squarefree");
}

// Reduce f mod p; rejects denominators divisible by p and vanishing lc.
ZV reduce_poly_mod(const PolyQ& f, const Int& p) {
    ZV out;
    out.reserve(f.c.size());
    for (auto& a : f.c) {
        Int den = a.get_den();
        if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
            throw InputError("coefficient denominator divisible by the modulus");
        out.push_back(mod_pos(mod_pos(a.get_num(), p) * f_inv(mod_pos(den, p), p), p));
    }
    zv_trim(out);
    if (zv_deg(out) != f.degree())
        throw InputError("leading coefficient vanishes mod the modulus");
    return out;
}

std::optional<PolyQuad> verified_conjugate_pair(const PolyQ& m, const Int& d,
                                                const QuadElem& u, const QuadElem& v) {
    PolyQuad g(d, {v, u, QuadElem::from_rational(d, Rational(1))});
    if (!(g * g.conj() == PolyQuad::from_rational_poly(d, m))) return std::nullopt;
    if (!quad_quadratic_irreducible(g)) return std::nullopt;
    return g;
}

// Rational roots of the cubic whose roots parametrize the u1 != 0 branch of a
// conjugate quadratic factorization; see conjugate_factorization.
std::vector<Rational> branch_cubic_roots(const Rational& u0, const Rational& A,
                                         const Rational& a0, const Rational& a1) {
    Rational K = u0 * A - a1;
    PolyQ cubic({-(K * K), A * A - Rational(2) * u0 * K - Rational(4) * a0,
                 Rational(2) * A - u0 * u0, Rational(1)});
    std::vector<Rational> roots;
    for (auto& [q, e] : factor_over_Q(cubic).factors)
        if (q.degree() == 1) roots.push_back(-q.at(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

Factorization factor_over_Q(const PolyQ& f, uint64_t seed) {
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    if (f.degree() > 6) throw InputError("factorization supports degree <= 6");
    Factorization out;
    out.content = f.lc();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (auto& [part, mult] : squarefree_decomposition(f).parts) {
        std::vector<PolyQ> irr;
        if (part.degree() == 1)
            irr.push_back(part);
        else
            irr = zassenhaus_monic(part, rng);
        for (auto& q : irr) out.factors.emplace_back(std::move(q), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible_over_Q(const PolyQ& f, uint64_t seed) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f, seed);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_irreducible_mod_p(const PolyQ& f, const Int& p) {
    if (!is_prime(p)) throw InputError("modulus must be prime");
    if (f.degree() < 1) throw InputError("irreducibility mod p needs degree >= 1");
    ZV fp = zv_monic_field(reduce_poly_mod(f, p), p);
    int n = zv_deg(fp);
    if (n == 1) return true;
    if (zv_deg(zv_gcd_field(fp, zv_derivative(fp, p), p)) != 0) return false;
    ZV x{Int(0), Int(1)};
    ZV h = zv_divmod_monic(x, fp, p).second;
    for (int i = 1; 2 * i <= n; ++i) {
        h = zv_powmod(h, p, fp, p);
        if (zv_deg(zv_gcd_field(zv_sub(h, x, p), fp, p)) > 0) return false;
    }
    return true;
}

// Solve m = g * conj(g) for monic quadratic g = t^2 + u t + v over Q(sqrt(d)),
// m the monic normalization of f. Coefficient matching with u = u0 + u1 sqrt(d),
// v = v0 + v1 sqrt(d) gives
//   a3 = 2 u0,   a2 = 2 v0 + u0^2 - d u1^2,
//   a1 = 2 (u0 v0 - d u1 v1),   a0 = v0^2 - d v1^2.
// Branch u1 = 0: v0 = (a2 - u0^2)/2 forced, consistency a1 = 2 u0 v0, and
// v1^2 = (v0^2 - a0)/d. Branch u1 != 0: s = d u1^2 satisfies a cubic obtained by
// eliminating v0, v1 (see branch_cubic_roots); each rational root with s/d a
// square yields one candidate, verified by multiplying out.
std::optional<ConjugateFactorization> conjugate_factorization(const PolyQ& f, const Int& d) {
    require_squarefree_disc(d);
    if (f.degree() != 4) throw InputError("conjugate factorization needs degree 4");
    Rational c = f.lc();
    PolyQ m = f.monic();
    Rational a3 = m.at(3), a2 = m.at(2), a1 = m.at(1), a0 = m.at(0);
    Rational u0 = a3 / 2;
    Rational A = a2 - u0 * u0;
    {
        Rational v0 = A / 2;
        Rational w = v0 * v0 - a0;
        if (a1 == Rational(2) * u0 * v0 && w != 0) {
            Rational wd = w / Rational(d);
            if (is_square_rational(wd)) {
                QuadElem u = QuadElem::from_rational(d, u0);
                QuadElem v(d, v0, sqrt_rational(wd));
                if (auto g = verified_conjugate_pair(m, d, u, v))
                    return ConjugateFactorization{c, *g};
            }
        }
    }
    for (const Rational& s : branch_cubic_roots(u0, A, a0, a1)) {
        if (s == 0) continue;
        Rational sd = s / Rational(d);
        if (!is_square_rational(sd)) continue;
        Rational u1 = sqrt_rational(sd);
        Rational v0 = (A + s) / 2;
        Rational v1 = (u0 * v0 - a1 / 2) / (Rational(d) * u1);
        QuadElem u(d, u0, u1);
        QuadElem v(d, v0, v1);
        if (auto g = verified_conjugate_pair(m, d, u, v))
            return ConjugateFactorization{c, *g};
    }
    return std::nullopt;
}

std::vector<Int> quadratic_subfields(const PolyQ& P, uint64_t seed) {
    if (!P.is_monic() || P.degree() < 1 || P.degree() > 4)
        throw InputError("closed-point polynomial must be monic of degree 1..4");
    if (!is_irreducible_over_Q(P, seed))
        throw InputError("closed-point polynomial must be irreducible: " + P.to_string());
    int n = P.degree();
    if (n == 1 || n == 3) return {};
    if (n == 2) return {squarefree_part(poly_discriminant(P))};

    Rational a3 = P.at(3), a2 = P.at(2), a1 = P.at(1), a0 = P.at(0);
    Rational u0 = a3 / 2;
    Rational A = a2 - u0 * u0;
    std::set<Int> cands;
    {
        Rational v0 = A / 2;
        Rational w = v0 * v0 - a0;
        if (a1 == Rational(2) * u0 * v0 && w != 0) {
            Int dd = squarefree_part(w);
            if (dd != 1) cands.insert(dd);
        }
    }
    for (const Rational& s : branch_cubic_roots(u0, A, a0, a1)) {
        if (s == 0) continue;
        Int dd = squarefree_part(s);
        if (dd != 1) cands.insert(dd);
    }
    std::vector<Int> out;
    for (auto& dd : cands)
        if (conjugate_factorization(P, dd)) out.push_back(dd);
    return out;
}

QuadFactorization factor_over_quad(const PolyQ& f, const Int& d, uint64_t seed) {
    require_squarefree_disc(d);
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    if (f.degree() > 4) throw InputError("factorization over Q(sqrt(d)) supports degree <= 4");
    auto base = factor_over_Q(f, seed);
    QuadFactorization out;
    out.content = base.content;
    QuadElem one = QuadElem::from_rational(d, Rational(1));
    for (auto& [q, e] : base.factors) {
        if (q.degree() == 2) {
            Rational disc = q.at(1) * q.at(1) - Rational(4) * q.at(0);
            Rational wd = disc / Rational(d);
            if (is_square_rational(wd)) {
                QuadElem rho(d, -q.at(1) / 2, sqrt_rational(wd) / 2);
                out.factors.emplace_back(PolyQuad(d, {-rho, one}), e);
                out.factors.emplace_back(PolyQuad(d, {-rho.conj(), one}), e);
                continue;
            }
        } else if (q.degree() == 4) {
            if (auto cf = conjugate_factorization(q, d)) {
                out.factors.emplace_back(cf->g, e);
                out.factors.emplace_back(cf->g.conj(), e);
                continue;
            }
        }
        out.factors.emplace_back(PolyQuad::from_rational_poly(d, q), e);
    }
    return out;
}

bool quad_quadratic_irreducible(const PolyQuad& g) {
    if (g.degree() != 2 || !g.is_monic())
        throw InputError("expected a monic quadratic over Q(sqrt(d))");
    QuadElem disc = g.at(1) * g.at(1) - Rational(4) * g.at(0);
    if (disc.is_zero()) return false;
    return !quad_is_square(disc);
}

}  // namespace cb
