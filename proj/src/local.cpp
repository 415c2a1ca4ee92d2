#include "cb/local.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>

namespace cb {

namespace {

// Zero-flagged p-adics carry "valuation >= val"; exact zeros use this bound.
const long kZeroValBound = 1L << 40;

Int pow_int(const Int& p, long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational rational_pow_int(const Int& p, long k) {
    if (k >= 0) return Rational(pow_int(p, k));
    return Rational(Int(1), pow_int(p, -k));
}

Int powm(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_pos(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    return x;
}

Int mod_inverse(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InputError("local: element not invertible modulo " + m.get_str());
    return r;
}

// 1 when the unit z is a nonsquare mod odd prime p, 0 when a square.
int legendre_bit(const Int& z, const Int& p) {
    int r = mpz_legendre(z.get_mpz_t(), p.get_mpz_t());
    if (r == 0) throw InputError("local: legendre of a non-unit");
    return r == -1 ? 1 : 0;
}

int eps_bit(const Int& odd_unit) {  // (u-1)/2 mod 2
    return mod_pos(odd_unit, 4) == 3 ? 1 : 0;
}

int omega_bit(const Int& odd_unit) {  // (u^2-1)/8 mod 2
    Int m = mod_pos(odd_unit, 8);
    return (m == 3 || m == 5) ? 1 : 0;
}

Int smallest_nonresidue(const Int& p) {
    for (Int z = 2;; ++z)
        if (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) == -1) return z;
}

Int tonelli_shanks(const Int& a, const Int& p) {
    Int A = mod_pos(a, p);
    if (mod_pos(p, 4) == 3) return powm(A, (p + 1) / 4, p);
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = smallest_nonresidue(p);
    unsigned long m = s;
    Int c = powm(z, q, p);
    Int t = powm(A, q, p);
    Int r = powm(A, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

Place Place::prime(const Int& q) {
    if (!is_prime(q)) throw InputError("place: " + q.get_str() + " is not prime");
    Place v;
    v.finite = true;
    v.p = q;
    return v;
}

std::string Place::to_string() const { return finite ? p.get_str() : "real"; }

std::string inv_to_string(Inv v) { return v == Inv::zero ? "0" : "1/2"; }

long val_p(const Int& p, const Rational& x) {
    if (x == 0) throw InputError("val_p of zero");
    Rational xx = x;
    xx.canonicalize();
    Int num = xx.get_num(), den = xx.get_den();
    Int tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

Int unit_mod(const Int& p, const Rational& x, const Int& modulus) {
    if (x == 0) throw InputError("unit_mod of zero");
    Rational xx = x;
    xx.canonicalize();
    Int num, den;
    mpz_remove(num.get_mpz_t(), xx.get_num().get_mpz_t(), p.get_mpz_t());
    mpz_remove(den.get_mpz_t(), xx.get_den().get_mpz_t(), p.get_mpz_t());
    return mod_pos(mod_pos(num, modulus) * mod_inverse(mod_pos(den, modulus), modulus), modulus);
}

PadicNum padic_from_rational(const Int& p, const Rational& x, int prec) {
    if (prec < 1) throw InputError("padic: precision must be at least 1");
    PadicNum r;
    r.p = p;
    r.prec = prec;
    if (x == 0) {
        r.zero = true;
        r.val = kZeroValBound;
        return r;
    }
    r.val = val_p(p, x);
    r.unit = unit_mod(p, x, pow_int(p, prec));
    return r;
}

PadicNum padic_neg(const PadicNum& a) {
    if (a.zero) return a;
    PadicNum r = a;
    r.unit = pow_int(a.p, a.prec) - a.unit;
    return r;
}

PadicNum padic_add(const PadicNum& a, const PadicNum& b) {
    if (a.p != b.p) throw InputError("padic: mixed primes in addition");
    if (a.zero && b.zero) {
        PadicNum r = a;
        r.val = std::min(a.val, b.val);
        return r;
    }
    if (a.zero || b.zero) {
        const PadicNum& z = a.zero ? a : b;
        const PadicNum& n = a.zero ? b : a;
        if (z.val >= n.val + n.prec) return n;
        if (z.val <= n.val) {
            PadicNum r;
            r.p = a.p;
            r.zero = true;
            r.val = z.val;
            return r;
        }
        PadicNum r = n;
        r.prec = static_cast<int>(z.val - n.val);
        r.unit = mod_pos(n.unit, pow_int(n.p, r.prec));
        return r;
    }
    const PadicNum& lo = (a.val <= b.val) ? a : b;
    const PadicNum& hi = (a.val <= b.val) ? b : a;
    long pi = std::min(a.val + a.prec, b.val + b.prec);
    long k = pi - lo.val;  // >= 1 since prec >= 1
    Int mod = pow_int(a.p, k);
    Int s = lo.unit;
    if (hi.val - lo.val < k) s += hi.unit * pow_int(a.p, hi.val - lo.val);
    s = mod_pos(s, mod);
    PadicNum r;
    r.p = a.p;
    if (s == 0) {
        r.zero = true;
        r.val = pi;
        return r;
    }
    Int u;
    long e = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), a.p.get_mpz_t()));
    r.val = lo.val + e;
    r.prec = static_cast<int>(k - e);
    r.unit = mod_pos(u, pow_int(a.p, r.prec));
    return r;
}

PadicNum padic_mul(const PadicNum& a, const PadicNum& b) {
    if (a.p != b.p) throw InputError("padic: mixed primes in multiplication");
    PadicNum r;
    r.p = a.p;
    if (a.zero || b.zero) {
        r.zero = true;
        r.val = std::min(a.val + b.val, kZeroValBound);
        return r;
    }
    r.val = a.val + b.val;
    r.prec = std::min(a.prec, b.prec);
    r.unit = mod_pos(a.unit * b.unit, pow_int(a.p, r.prec));
    return r;
}

PadicNum padic_inv(const PadicNum& a) {
    if (a.zero) throw LimitError("padic: inverse of a value indistinguishable from zero");
    PadicNum r = a;
    r.val = -a.val;
    r.unit = mod_inverse(a.unit, pow_int(a.p, a.prec));
    return r;
}

bool padic_is_square(const PadicNum& x) {
    if (x.zero)
        throw LimitError("padic: squareness undecidable for a value indistinguishable from zero");
    bool dyadic = (x.p == 2);
    if (x.prec < (dyadic ? 3 : 1))
        throw LimitError("padic: insufficient precision for a squareness test");
    if (x.val % 2 != 0) return false;
    if (dyadic) return mod_pos(x.unit, 8) == 1;
    return legendre_bit(mod_pos(x.unit, x.p), x.p) == 0;
}

PadicNum padic_sqrt(const PadicNum& x) {
    if (!padic_is_square(x)) throw InputError("padic: square root of a non-square");
    PadicNum r;
    r.p = x.p;
    r.val = x.val / 2;
    if (x.p == 2) {
        int prec = x.prec - 1;
        Int y = 1;
        for (int m = 3; m < x.prec; ++m) {
            Int mod2 = pow_int(Int(2), m + 1);
            if (mod_pos(y * y - x.unit, mod2) != 0) y += pow_int(Int(2), m - 1);
        }
        r.prec = prec;
        r.unit = mod_pos(y, pow_int(Int(2), prec));
        return r;
    }
    Int root = tonelli_shanks(x.unit, x.p);
    long m = 1;
    while (m < x.prec) {
        long m2 = std::min(2 * m, static_cast<long>(x.prec));
        Int mod = pow_int(x.p, m2);
        Int inv2r = mod_inverse(mod_pos(2 * root, mod), mod);
        root = mod_pos(root - (root * root - x.unit) * inv2r, mod);
        m = m2;
    }
    // canonical branch: residue mod p in (0, p/2)
    if (mod_pos(root, x.p) * 2 > x.p) root = pow_int(x.p, x.prec) - root;
    r.prec = x.prec;
    r.unit = root;
    return r;
}

bool rational_is_local_square(const Rational& z, const Place& v) {
    if (z == 0) throw InputError("local square test of zero");
    if (v.is_real()) return z > 0;
    if (val_p(v.p, z) % 2 != 0) return false;
    if (v.p == 2) return unit_mod(Int(2), z, Int(8)) == 1;
    return legendre_bit(unit_mod(v.p, z, v.p), v.p) == 0;
}

Inv hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw InputError("hilbert symbol with a zero slot");
    if (v.is_real()) return (a < 0 && b < 0) ? Inv::half : Inv::zero;
    const Int& p = v.p;
    long alpha = val_p(p, a), beta = val_p(p, b);
    if (p == 2) {
        Int u = unit_mod(p, a, Int(8)), w = unit_mod(p, b, Int(8));
        int bit = (eps_bit(u) * eps_bit(w) + alpha * omega_bit(w) + beta * omega_bit(u)) & 1;
        return bit ? Inv::half : Inv::zero;
    }
    int la = legendre_bit(unit_mod(p, a, p), p);
    int lb = legendre_bit(unit_mod(p, b, p), p);
    int lm1 = (mod_pos(p, 4) == 3) ? 1 : 0;
    int bit = (alpha * beta * lm1 + beta * la + alpha * lb) & 1;
    return bit ? Inv::half : Inv::zero;
}

Inv hilbert_symbol_mixed(const Rational& a, const PadicNum& b) {
    if (a == 0) throw InputError("hilbert symbol with a zero slot");
    if (b.zero)
        throw LimitError("hilbert symbol: slot indistinguishable from zero at this precision");
    const Int& p = b.p;
    long alpha = val_p(p, a), beta = b.val;
    if (p == 2) {
        if (b.prec < 3) throw LimitError("hilbert symbol: need three dyadic digits");
        Int u = unit_mod(p, a, Int(8)), w = mod_pos(b.unit, 8);
        int bit = (eps_bit(u) * eps_bit(w) + alpha * omega_bit(w) + beta * omega_bit(u)) & 1;
        return bit ? Inv::half : Inv::zero;
    }
    int la = legendre_bit(unit_mod(p, a, p), p);
    int lb = legendre_bit(mod_pos(b.unit, p), p);
    int lm1 = (mod_pos(p, 4) == 3) ? 1 : 0;
    int bit = (alpha * beta * lm1 + beta * la + alpha * lb) & 1;
    return bit ? Inv::half : Inv::zero;
}

std::set<Place> ramified_places(const Rational& a, const Rational& b, long factor_bound) {
    if (a == 0 || b == 0) throw InputError("ramified places of a degenerate symbol");
    std::set<Place> cand;
    cand.insert(Place::real());
    cand.insert(Place::prime(Int(2)));
    for (const Int& q : primes_of(a, factor_bound)) cand.insert(Place::prime(q));
    for (const Int& q : primes_of(b, factor_bound)) cand.insert(Place::prime(q));
    std::set<Place> out;
    for (const Place& v : cand)
        if (hilbert_symbol(a, b, v) == Inv::half) out.insert(v);
    return out;
}

std::string splitting_to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        default: return "ramified";
    }
}

Splitting splitting_type(const Int& d, const Place& v) {
    if (d == 0 || d == 1 || squarefree_part(Rational(d)) != d)
        throw InputError("splitting type: discriminant must be squarefree and not 0 or 1");
    if (v.is_real()) return d > 0 ? Splitting::split : Splitting::ramified;
    if (v.p == 2) {
        if (d % 2 == 0) return Splitting::ramified;
        Int m = mod_pos(d, 8);
        if (m == 1) return Splitting::split;
        if (m == 5) return Splitting::inert;
        return Splitting::ramified;
    }
    if (d % v.p == 0) return Splitting::ramified;
    return legendre_bit(mod_pos(d, v.p), v.p) == 0 ? Splitting::split : Splitting::inert;
}

LocalQuadExt make_local_ext(const Int& d, const Place& v) {
    LocalQuadExt e;
    e.v = v;
    e.d = d;
    e.splitting = splitting_type(d, v);
    return e;
}

bool square_in_local_quad_ext(const Rational& z, const LocalQuadExt& ext) {
    if (z == 0) throw InputError("local square test of zero");
    if (ext.v.is_real()) {
        if (ext.d < 0) return true;  // complex place
        return z > 0;
    }
    // (x + y sqrt(d))^2 rational forces xy = 0, so z is a square in L_w
    // exactly when z or z*d is a square in Q_p. (For split w both tests agree.)
    return rational_is_local_square(z, ext.v) ||
           rational_is_local_square(z * Rational(ext.d), ext.v);
}

bool conic_solvable_over_local_ext(const Rational& a, const Rational& b,
                                   const LocalQuadExt& ext) {
    if (a == 0 || b == 0) throw InputError("degenerate conic");
    if (ext.splitting != Splitting::split) return true;  // even-degree extension kills the class
    return hilbert_symbol(a, b, ext.v) == Inv::zero;
}

// ---------------------------------------------------------------------------
// Roots mod p.

namespace {

using ZV = std::vector<Int>;  // ascending coefficients over F_p, trimmed

void zv_trim(ZV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zv_deg(const ZV& a) { return static_cast<long>(a.size()) - 1; }

Int zv_eval(const ZV& a, const Int& x, const Int& p) {
    Int r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = mod_pos(r * x + *it, p);
    return r;
}

ZV zv_monic(ZV a, const Int& p) {
    if (a.empty()) return a;
    Int inv = mod_inverse(a.back(), p);
    for (Int& c : a) c = mod_pos(c * inv, p);
    return a;
}

void zv_divmod(const ZV& a, const ZV& b, const Int& p, ZV& q, ZV& r) {
    r = a;
    q.assign(a.size(), Int(0));
    Int binv = mod_inverse(b.back(), p);
    while (zv_deg(r) >= zv_deg(b)) {
        long shift = zv_deg(r) - zv_deg(b);
        Int coef = mod_pos(r.back() * binv, p);
        q[shift] = coef;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = mod_pos(r[shift + i] - coef * b[i], p);
        zv_trim(r);
        if (r.empty()) break;
    }
    zv_trim(q);
}

ZV zv_gcd(ZV a, ZV b, const Int& p) {
    zv_trim(a);
    zv_trim(b);
    while (!b.empty()) {
        ZV q, r;
        zv_divmod(a, b, p, q, r);
        a = b;
        b = r;
    }
    return a.empty() ? a : zv_monic(a, p);
}

ZV zv_mulmod(const ZV& a, const ZV& b, const ZV& h, const Int& p) {
    if (a.empty() || b.empty()) return {};
    ZV prod(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = mod_pos(prod[i + j] + a[i] * b[j], p);
    zv_trim(prod);
    ZV q, r;
    if (zv_deg(prod) >= zv_deg(h))
        zv_divmod(prod, h, p, q, r);
    else
        r = prod;
    return r;
}

ZV zv_powmod(ZV base, const Int& e, const ZV& h, const Int& p) {
    ZV result{Int(1)};
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        result = zv_mulmod(result, result, h, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
            result = zv_mulmod(result, base, h, p);
    }
    return result;
}

ZV zv_deriv(const ZV& a, const Int& p) {
    ZV d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mod_pos(a[i] * Int(i), p));
    zv_trim(d);
    return d;
}

// Degree of the product of odd-multiplicity irreducible factors of monic f,
// via alternating radical degrees. Valid for p > deg f.
long zv_odd_kernel_degree(ZV f, const Int& p) {
    long sign = 1, total = 0;
    while (zv_deg(f) > 0) {
        ZV d = zv_deriv(f, p);
        if (d.empty()) throw LimitError("odd kernel: inseparable reduction");
        ZV g = zv_gcd(f, d, p);
        ZV rad, rem;
        zv_divmod(f, g, p, rad, rem);
        total += sign * zv_deg(rad);
        ZV next, rem2;
        zv_divmod(f, rad, p, next, rem2);
        f = zv_monic(next, p);
        sign = -sign;
    }
    return total;
}

void zv_roots_of_split_product(ZV g, const Int& p, std::mt19937_64& rng, std::vector<Int>& out) {
    // g is monic and a product of distinct linear factors
    zv_trim(g);
    if (zv_deg(g) <= 0) return;
    if (zv_deg(g) == 1) {
        out.push_back(mod_pos(-g[0], p));
        return;
    }
    for (int attempt = 0; attempt < 400; ++attempt) {
        Int r = mod_pos(Int(rng()), p);
        ZV base{r, Int(1)};
        ZV w = zv_powmod(base, (p - 1) / 2, g, p);
        if (w.empty())
            w = ZV{mod_pos(Int(-1), p)};
        else
            w[0] = mod_pos(w[0] - 1, p);
        zv_trim(w);
        if (w.empty()) continue;
        ZV s = zv_gcd(w, g, p);
        if (zv_deg(s) <= 0 || zv_deg(s) >= zv_deg(g)) continue;
        ZV q, rem;
        zv_divmod(g, s, p, q, rem);
        zv_roots_of_split_product(s, p, rng, out);
        zv_roots_of_split_product(q, p, rng, out);
        return;
    }
    throw LimitError("roots mod p: equal-degree splitting failed to converge");
}

}  // namespace

std::vector<Int> poly_roots_mod_p(const std::vector<Int>& coeffs, const Int& p, uint64_t seed) {
    ZV f;
    f.reserve(coeffs.size());
    for (const Int& c : coeffs) f.push_back(mod_pos(c, p));
    zv_trim(f);
    if (f.empty()) throw InputError("roots mod p: polynomial vanishes mod p");
    std::vector<Int> roots;
    if (zv_deg(f) == 0) return roots;
    if (p <= 4096) {
        for (Int j = 0; j < p; ++j)
            if (zv_eval(f, j, p) == 0) roots.push_back(j);
        return roots;
    }
    ZV x{Int(0), Int(1)};
    ZV fm = zv_monic(f, p);
    ZV xp = zv_powmod(x, p, fm, p);
    // x^p - x mod f
    ZV w = xp;
    if (w.size() < 2) w.resize(2, Int(0));
    w[1] = mod_pos(w[1] - 1, p);
    zv_trim(w);
    ZV g = w.empty() ? fm : zv_gcd(w, fm, p);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    zv_roots_of_split_product(g, p, rng, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Symbol value sets.

namespace {

// Shared state for one value-set computation.
struct ValueSetCtx {
    Rational a;
    Rational c;
    PolyQ f;  // original polynomial (domain: f(t) != 0)
    Place v;
    int max_depth = 40;
    uint64_t seed = 0;
    SymbolValueSet out;

    bool done() const { return out.values.size() == 2; }
    bool have(Inv val) const { return out.values.count(val) > 0; }

    Rational chart_point(const Rational& s, bool chartB) const {
        return chartB ? Rational(1) / s : s;
    }

    // Record `val` as attained on the disc {point + p^scale u} (chart
    // coordinates); the symbol is constant there, so any point of the disc
    // with f != 0 (and s != 0 on the far chart) serves as the witness.
    void record_disc(Inv val, const Rational& point, long scale, bool chartB) {
        if (have(val)) return;
        Rational step = rational_pow_int(v.p, scale);
        for (int i = 0; i <= 80; ++i) {
            Rational s = point + step * Rational(i);
            if (chartB && s == 0) continue;
            Rational t = chart_point(s, chartB);
            if (f.eval(t) == 0) continue;
            out.values.insert(val);
            SymbolWitness w;
            w.at_infinity = false;
            w.t = t;
            w.value = val;
            out.witnesses.push_back(w);
            return;
        }
        throw LimitError("symbol value set: no admissible witness in a decided disc");
    }

    void record_infinity(Inv val) {
        if (have(val)) return;
        out.values.insert(val);
        SymbolWitness w;
        w.at_infinity = true;
        w.value = val;
        out.witnesses.push_back(w);
    }
};

long min_val_from(const PolyQ& g, const Int& p, int from, bool& any) {
    long m = 0;
    any = false;
    for (int i = from; i <= g.degree(); ++i) {
        if (g.at(i) == 0) continue;
        long vi = val_p(p, g.at(i));
        if (!any || vi < m) m = vi;
        any = true;
    }
    return m;
}

// Covers the disc {t0 + p^k u : u in Z_p} of the chart polynomial G,
// recording every symbol value (a, G(t))_p attained on it.  Discs are
// processed breadth-first: a chain of discs shrinking onto a p-adic root of G
// can never be pinned, and descending into it depth-first would starve the
// sibling discs where the missing value is attained.
void cover_disc(ValueSetCtx& ctx, const PolyQ& G, const Rational& start, long k0, bool chartB) {
    struct Task {
        Rational t0;
        long k;
    };
    const Int& p = ctx.v.p;
    int tau = (p == 2) ? 3 : 1;
    std::deque<Task> queue;
    queue.push_back({start, k0});
    while (!queue.empty()) {
        if (ctx.done()) return;
        Rational t0 = queue.front().t0;
        long k = queue.front().k;
        queue.pop_front();
        PolyQ sh = G.compose_affine(t0, rational_pow_int(p, k));
        Rational q0 = sh.at(0);
        if (q0 != 0) {
            bool any = false;
            long m1 = min_val_from(sh, p, 1, any);
            long v0 = val_p(p, q0);
            if (!any || m1 >= v0 + tau) {
                ctx.record_disc(hilbert_symbol(ctx.a, q0, ctx.v), t0, k, chartB);
                continue;
            }
        }
        if (k >= ctx.max_depth)
            throw LimitError("symbol value set: subdivision depth limit reached at " +
                             ctx.v.to_string());
        Rational step = rational_pow_int(p, k);
        if (p == 2) {
            queue.push_back({t0, k + 1});
            queue.push_back({t0 + step, k + 1});
            continue;
        }
        // Odd p: one subdivision handles all non-root residues at once. With
        // gamma = min val of the shifted coefficients, G = p^gamma * G1 with G1
        // nonzero mod p; on any residue j with G1(j) != 0 mod p the value has
        // valuation gamma and unit class G1(j), so the symbol is decided by the
        // Legendre character of G1(j).
        bool any_all = false;
        long gamma = min_val_from(sh, p, 0, any_all);
        std::vector<Int> g1;
        g1.reserve(sh.degree() + 1);
        for (int i = 0; i <= sh.degree(); ++i) {
            if (sh.at(i) == 0 || val_p(p, sh.at(i)) > gamma)
                g1.push_back(0);
            else
                g1.push_back(unit_mod(p, sh.at(i) / rational_pow_int(p, gamma), p));
        }
        std::vector<Int> roots = poly_roots_mod_p(g1, p, ctx.seed);
        Inv v_square = hilbert_symbol(ctx.a, rational_pow_int(p, gamma), ctx.v);
        Inv v_nonsquare = hilbert_symbol(
            ctx.a, rational_pow_int(p, gamma) * Rational(smallest_nonresidue(p)), ctx.v);
        bool same_value = (v_nonsquare == v_square);
        bool need_square = !ctx.have(v_square);
        bool need_nonsquare = !same_value && !ctx.have(v_nonsquare);
        if (need_square || need_nonsquare) {
            ZV g1v(g1.begin(), g1.end());
            zv_trim(g1v);
            auto try_record = [&](const Int& j) {
                Int valr = zv_eval(g1v, j, p);
                if (valr == 0) return;
                bool nonsq = legendre_bit(valr, p) == 1;
                Inv val = nonsq ? v_nonsquare : v_square;
                if (!ctx.have(val)) ctx.record_disc(val, t0 + step * Rational(j), k + 1, chartB);
                if (same_value)
                    need_square = need_nonsquare = false;
                else if (nonsq)
                    need_nonsquare = false;
                else
                    need_square = false;
            };
            if (p <= 4096) {
                bool constant_class = zv_deg(g1v) <= 0;
                for (Int j = 0; j < p && (need_square || need_nonsquare); ++j) {
                    try_record(j);
                    if (constant_class) break;  // one class serves all non-root residues
                }
                // exhaustive scan: a class still missing here is simply not attained
            } else if (zv_odd_kernel_degree(zv_monic(g1v, p), p) == 0) {
                // the unit class is constant: the class of the leading coefficient
                Inv val = legendre_bit(g1v.back(), p) == 1 ? v_nonsquare : v_square;
                if (!ctx.have(val)) {
                    Int j = 0;
                    while (zv_eval(g1v, j, p) == 0) ++j;
                    ctx.record_disc(val, t0 + step * Rational(j), k + 1, chartB);
                }
            } else {
                // both classes occur among non-root residues (character sum bound)
                for (Int j = 0; need_square || need_nonsquare; ++j) {
                    if (j > 500000)
                        throw LimitError("symbol value set: residue class scan exhausted");
                    try_record(j);
                }
            }
        }
        for (const Int& j : roots) queue.push_back({t0 + step * Rational(j), k + 1});
    }
}

// Odd-multiplicity kernel of c*f: same symbol values on a cofinite domain.
PolyQ odd_kernel(const Rational& c, const PolyQ& f) {
    SquarefreeDecomp dec = squarefree_decomposition(f);
    PolyQ g = PolyQ::constant(c * dec.content);
    for (const auto& part : dec.parts)
        if (part.second % 2 == 1) g = g * part.first;
    return g;
}

}  // namespace

// Sturm chain root isolation; returns sample points hitting every sign region.
std::vector<Rational> real_sign_sample_points(const PolyQ& g) {
    PolyQ m = g.monic();
    if (m.degree() == 0) return {Rational(0)};
    std::vector<PolyQ> chain;
    chain.push_back(m);
    chain.push_back(m.derivative());
    while (!chain.back().is_zero()) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        chain.push_back(PolyQ() - r);
    }
    chain.pop_back();
    auto changes = [&](const Rational& x) {
        int count = 0, prev = 0;
        for (const PolyQ& s : chain) {
            int sg = sign_of(s.eval(x));
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    };
    Rational bound = 1;
    for (int i = 0; i < m.degree(); ++i) {
        Rational q = m.at(i);
        if (q < 0) q = -q;
        if (q > bound) bound = q;
    }
    bound += 1;
    auto count_in = [&](const Rational& lo, const Rational& hi) {
        return changes(lo) - changes(hi);
    };
    std::vector<std::pair<Rational, Rational>> isolated;
    std::function<void(Rational, Rational)> isolate = [&](Rational lo, Rational hi) {
        int n = count_in(lo, hi);
        if (n == 0) return;
        if (n == 1) {
            isolated.emplace_back(lo, hi);
            return;
        }
        Rational mid = (lo + hi) / 2;
        Rational delta = (hi - lo) / 4;
        while (m.eval(mid) == 0) {
            mid += delta;
            delta /= 2;
        }
        isolate(lo, mid);
        isolate(mid, hi);
    };
    isolate(-bound, bound);
    std::vector<Rational> samples;
    samples.push_back(-bound);
    for (const auto& iv : isolated) samples.push_back(iv.second);
    samples.push_back(bound);
    return samples;
}

namespace {

SymbolValueSet real_value_set(const Rational& a, const Rational& c, const PolyQ& f) {
    ValueSetCtx ctx;
    ctx.a = a;
    ctx.c = c;
    ctx.f = f;
    ctx.v = Place::real();
    if (a > 0) {
        for (Rational t = 0;; t += 1)
            if (f.eval(t) != 0) {
                ctx.out.values.insert(Inv::zero);
                SymbolWitness w;
                w.t = t;
                w.value = Inv::zero;
                ctx.out.witnesses.push_back(w);
                return ctx.out;
            }
    }
    PolyQ g = odd_kernel(c, f);
    for (const Rational& s : real_sign_sample_points(g)) {
        Inv val = (sign_of(g.eval(s)) < 0) ? Inv::half : Inv::zero;
        if (ctx.have(val)) continue;
        // nudge off removed even-multiplicity roots of f while keeping the sign
        Rational t = s, delta = Rational(1, 1024);
        while (f.eval(t) == 0 || sign_of(g.eval(t)) != sign_of(g.eval(s))) {
            t = s + delta;
            delta /= 2;
        }
        SymbolWitness w;
        w.t = t;
        w.value = val;
        ctx.out.values.insert(val);
        ctx.out.witnesses.push_back(w);
        if (ctx.done()) return ctx.out;
    }
    if (f.degree() % 2 == 0) {
        Inv val = (sign_of(c * f.lc()) < 0) ? Inv::half : Inv::zero;
        ctx.record_infinity(val);
    }
    return ctx.out;
}

}  // namespace

SymbolValueSet symbol_value_set(const Rational& a, const Rational& c, const PolyQ& f,
                                const Place& v, int max_depth, uint64_t seed) {
    if (a == 0 || c == 0) throw InputError("symbol value set: a and c must be nonzero");
    if (f.is_zero()) throw InputError("symbol value set: zero polynomial");
    if (v.is_real()) return real_value_set(a, c, f);
    ValueSetCtx ctx;
    ctx.a = a;
    ctx.c = c;
    ctx.f = f;
    ctx.v = v;
    ctx.max_depth = max_depth;
    ctx.seed = seed;
    if (rational_is_local_square(a, v)) {
        for (Rational t = 0;; t += 1)
            if (f.eval(t) != 0) {
                ctx.out.values.insert(Inv::zero);
                SymbolWitness w;
                w.t = t;
                w.value = Inv::zero;
                ctx.out.witnesses.push_back(w);
                return ctx.out;
            }
    }
    PolyQ g = odd_kernel(c, f);
    cover_disc(ctx, g, Rational(0), 0, false);
    if (!ctx.done()) {
        int m = g.degree();
        PolyQ h = g.reversal(m);
        if (m % 2 == 1) h = h * PolyQ::x();
        cover_disc(ctx, h, Rational(0), 1, true);
    }
    if (!ctx.done() && f.degree() % 2 == 0)
        ctx.record_infinity(hilbert_symbol(a, c * f.lc(), v));
    return ctx.out;
}

}  // namespace cb
