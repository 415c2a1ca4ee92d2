#include "cb/obstruction.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace cb {

namespace {

constexpr long kZeroBound = 1L << 40;  // matches the p-adic zero-flag bound

Int ipow(const Int& p, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= p;
    return r;
}

Rational rpow(const Int& p, long k) {
    if (k >= 0) return Rational(ipow(p, k));
    return Rational(Int(1), ipow(p, -k));
}

Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

bool is_nonresidue(const Int& z, const Int& p) {
    return mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) == -1;
}

Int smallest_nonresidue_p(const Int& p) {
    for (Int n = 2; n < p; ++n)
        if (is_nonresidue(n, p)) return n;
    throw LimitError("no quadratic nonresidue found");
}

// Residue in [0, p) of a p-integral rational.
Int residue_mod(const Int& p, const Rational& x) {
    if (x == 0) return 0;
    long v = val_p(p, x);
    if (v > 0) return 0;
    if (v < 0) throw LimitError("internal: residue of a non-integral value");
    return unit_mod(p, x, p);
}

PolyQ make_poly(std::vector<Rational> cs) {
    PolyQ f;
    f.c = std::move(cs);
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

// Product of the distinct irreducible factors: same real roots, all simple.
PolyQ radical_poly(const PolyQ& h) {
    SquarefreeDecomp dec = squarefree_decomposition(h);
    PolyQ r = PolyQ::constant(Rational(1));
    for (const auto& part : dec.parts) r = r * part.first;
    return r;
}

// Division by a monic divisor over Q(sqrt d).
std::pair<PolyQuad, PolyQuad> pq_divmod(const PolyQuad& A, const PolyQuad& B) {
    int da = A.degree(), db = B.degree();
    if (db < 0) throw InputError("division by the zero polynomial");
    if (da < db) return {PolyQuad(A.d, {}), A};
    std::vector<QuadElem> r;
    r.reserve(da + 1);
    for (int i = 0; i <= da; ++i) r.push_back(A.at(i));
    std::vector<QuadElem> q(static_cast<size_t>(da - db) + 1,
                            QuadElem::from_rational(A.d, Rational(0)));
    for (int i = da; i >= db; --i) {
        QuadElem lead = r[i];
        if (lead.is_zero()) continue;
        q[i - db] = lead;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - lead * B.at(j);
    }
    return {PolyQuad(A.d, std::move(q)), PolyQuad(A.d, std::move(r))};
}

// Internal retry signal for the split-place engine: a p-adic window collapsed
// and the whole computation should be redone with a wider one.
struct PrecisionLoss {};

// --- split places: one embedding L_w = Q_p, generator tracked p-adically ----

using PadicPoly = std::vector<PadicNum>;

PadicPoly embed_poly(const PolyQuad& g, const PlaceOfL& w, int prec) {
    PadicPoly out;
    out.reserve(g.c.size());
    for (const QuadElem& q : g.c) out.push_back(embed_split(q, w, prec));
    return out;
}

// Coefficients of G(t0 + p^k u) as a polynomial in u.
PadicPoly shift_padic(const PadicPoly& g, const Rational& t0, long k, const Int& p, int prec) {
    PadicPoly b = g;
    if (b.empty()) return b;
    PadicNum sh = padic_from_rational(p, t0, prec);
    int n = static_cast<int>(b.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) b[j] = padic_add(b[j], padic_mul(b[j + 1], sh));
    for (int j = 1; j <= n; ++j) b[j].val = std::min(b[j].val + j * k, kZeroBound);
    return b;
}

enum class PinStatus { ok, margin, flagged };

struct PinResult {
    PinStatus status = PinStatus::margin;
    Inv value = Inv::zero;
};

// Decides whether the symbol (slot_a, G(t))_p is constant on the disc whose
// shifted coefficients are given: the constant term must dominate the tail by
// the square-class margin. `flagged` marks windows too narrow to decide.
PinResult pin_split(const Rational& slot_a, const PadicPoly& shifted, const Int& p) {
    int tau = (p == 2) ? 3 : 1;
    PinResult r;
    if (shifted.empty()) return r;
    const PadicNum& g0 = shifted[0];
    if (g0.zero) {
        r.status = (g0.val >= kZeroBound / 2) ? PinStatus::margin : PinStatus::flagged;
        return r;
    }
    bool weak = false;
    for (size_t j = 1; j < shifted.size(); ++j) {
        const PadicNum& cj = shifted[j];
        if (cj.zero) {
            if (cj.val < g0.val + tau) weak = true;
            continue;
        }
        if (cj.val < g0.val + tau) {
            r.status = PinStatus::margin;
            return r;
        }
    }
    if (weak) {
        r.status = PinStatus::flagged;
        return r;
    }
    try {
        r.value = hilbert_symbol_mixed(slot_a, g0);
        r.status = PinStatus::ok;
    } catch (const LimitError&) {
        r.status = PinStatus::flagged;
    }
    return r;
}

struct SplitChart {
    PolyQ F;           // fiber polynomial on this chart (exact)
    PadicPoly G1, G2;  // generator representatives, embedded
    bool has_swap = false;
    bool chartB = false;  // far chart: parameter t = 1/s
};

struct SplitCtx {
    Rational a_surf;
    Rational gen_a;
    PolyQ cf;           // c * f
    PolyQuad gen_poly;  // exact representative for witness verification
    Place v;
    PlaceOfL w;
    Int p;
    int max_depth = 40;
    int prec = 20;
    LocalEvalReport* out = nullptr;

    bool done() const { return out->value_set.size() == 2; }
    bool have(Inv val) const { return out->value_set.count(val) > 0; }

    Rational chart_point(const Rational& s, bool chartB) const {
        return chartB ? Rational(Rational(1) / s) : s;
    }

    // Exact re-check of a candidate parameter: the fiber must be smooth and
    // locally solvable and the generator must evaluate to `val` there.
    bool try_witness(const Rational& t, Inv val) {
        Rational fiber = cf.eval(t);
        if (fiber == 0) return false;
        if (hilbert_symbol(a_surf, fiber, v) != Inv::zero) return false;
        QuadElem gval = gen_poly.eval(QuadElem::from_rational(w.d, t));
        if (gval.is_zero()) return false;
        if (hilbert_symbol_quad(gen_a, gval, w, prec) != val) return false;
        EvalWitness e;
        e.t = t;
        e.value = val;
        out->witnesses.push_back(e);
        out->value_set.insert(val);
        return true;
    }

    void record_infinity(Inv val) {
        if (have(val)) return;
        EvalWitness e;
        e.at_infinity = true;
        e.value = val;
        out->witnesses.push_back(e);
        out->value_set.insert(val);
    }

    void disc_witness(const SplitChart& ch, const Rational& t0, long k, Inv val) {
        Rational step = rpow(p, k);
        for (int i = 0; i <= 80; ++i) {
            Rational s = t0 + step * Rational(i);
            if (ch.chartB && s == 0) continue;
            if (try_witness(chart_point(s, ch.chartB), val)) return;
        }
        throw LimitError("evaluation image: no admissible witness in a decided disc");
    }

    bool ball_witness(const SplitChart& ch, const Rational& t0, long k, Inv val) {
        int tau = (p == 2) ? 3 : 1;
        for (long i = 0; i <= tau + 10; ++i) {
            Rational step = rpow(p, k + i);
            for (long u = 0; u <= 120; ++u) {
                Rational s = t0 + step * Rational(u);
                if (ch.chartB && s == 0) continue;
                if (try_witness(chart_point(s, ch.chartB), val)) return true;
            }
        }
        return false;
    }

    // Derivative dominance: the values of F on this disc sweep an exact ball,
    // so points of the solvable locus appear at every sub-scale and a pinned
    // representative value is attained.
    bool ball_leaf(const PolyQ& sh) const {
        if (sh.degree() < 1 || sh.at(1) == 0) return false;
        long v1 = val_p(p, sh.at(1));
        for (int j = 2; j <= sh.degree(); ++j) {
            if (sh.at(j) == 0) continue;
            if (val_p(p, sh.at(j)) < v1 + 1) return false;
        }
        return sh.at(0) == 0 || val_p(p, sh.at(0)) >= v1;
    }

    std::optional<Inv> pinned_value(const SplitChart& ch, const Rational& t0, long k) {
        PinResult r1 = pin_split(gen_a, shift_padic(ch.G1, t0, k, p, prec), p);
        PinResult r2;
        if (ch.has_swap) r2 = pin_split(gen_a, shift_padic(ch.G2, t0, k, p, prec), p);
        if (r1.status == PinStatus::ok || r2.status == PinStatus::ok) {
            if (r1.status == PinStatus::ok && r2.status == PinStatus::ok &&
                r1.value != r2.value)
                throw LimitError("evaluation image: representative values disagree");
            return r1.status == PinStatus::ok ? r1.value : r2.value;
        }
        if (r1.status == PinStatus::flagged || r2.status == PinStatus::flagged)
            throw PrecisionLoss{};
        return std::nullopt;
    }

    void cover(const SplitChart& ch, const Rational& t0, long k) {
        if (done()) return;
        PolyQ sh = ch.F.compose_affine(t0, rpow(p, k));
        Rational q0 = sh.at(0);
        int tau = (p == 2) ? 3 : 1;
        if (q0 != 0) {
            bool any = false;
            long m1 = 0;
            for (int i = 1; i <= sh.degree(); ++i) {
                if (sh.at(i) == 0) continue;
                long vi = val_p(p, sh.at(i));
                if (!any || vi < m1) m1 = vi;
                any = true;
            }
            if (!any || m1 >= val_p(p, q0) + tau) {
                if (hilbert_symbol(a_surf, q0, v) != Inv::zero) return;  // off the locus
                std::optional<Inv> val = pinned_value(ch, t0, k);
                if (val) {
                    if (!have(*val)) disc_witness(ch, t0, k, *val);
                    return;
                }
                subdivide(ch, t0, k);  // fiber settled, representative not yet
                return;
            }
        }
        if (ball_leaf(sh)) {
            std::optional<Inv> val = pinned_value(ch, t0, k);
            if (val) {
                if (have(*val)) return;
                if (ball_witness(ch, t0, k, *val)) return;
                throw LimitError("evaluation image: no admissible witness near a decided center");
            }
        }
        subdivide(ch, t0, k);
    }

    void subdivide(const SplitChart& ch, const Rational& t0, long k) {
        if (k >= max_depth)
            throw LimitError("evaluation image: subdivision depth limit reached at " +
                             w.to_string());
        Rational step = rpow(p, k);
        if (p == 2) {
            cover(ch, t0, k + 1);
            if (!done()) cover(ch, t0 + step, k + 1);
            return;
        }
        if (p > 4096)
            throw LimitError("evaluation image: residue enumeration above the supported bound at " +
                             w.to_string());
        aggregate(ch, t0, k);
    }

    // Odd p: one residue sweep settles every class with a nonzero reduction;
    // residues where both the fiber and all representatives reduce to zero
    // recurse one level deeper.
    void aggregate(const SplitChart& ch, const Rational& t0, long k) {
        long pl = p.get_si();
        Rational step = rpow(p, k);
        PolyQ sh = ch.F.compose_affine(t0, step);
        bool any = false;
        long gammaF = 0;
        for (int i = 0; i <= sh.degree(); ++i) {
            if (sh.at(i) == 0) continue;
            long vi = val_p(p, sh.at(i));
            if (!any || vi < gammaF) gammaF = vi;
            any = true;
        }
        if (!any) throw LimitError("evaluation image: degenerate fiber polynomial");
        std::vector<long> fbar(sh.degree() + 1, 0);
        for (int i = 0; i <= sh.degree(); ++i) {
            if (sh.at(i) == 0 || val_p(p, sh.at(i)) != gammaF) continue;
            fbar[i] = unit_mod(p, Rational(sh.at(i) / rpow(p, gammaF)), p).get_si();
        }
        Int nqr = smallest_nonresidue_p(p);
        Inv fib_sq = hilbert_symbol(a_surf, rpow(p, gammaF), v);
        Inv fib_nr = hilbert_symbol(a_surf, Rational(rpow(p, gammaF) * Rational(nqr)), v);

        struct RepRes {
            std::vector<long> gbar;
            Inv v_sq = Inv::zero, v_nr = Inv::zero;
        };
        std::vector<RepRes> rr;
        int nrep = ch.has_swap ? 2 : 1;
        for (int r = 0; r < nrep; ++r) {
            const PadicPoly& G = (r == 0) ? ch.G1 : ch.G2;
            PadicPoly gs = shift_padic(G, t0, k, p, prec);
            long gammaG = 0;
            bool gany = false;
            for (const PadicNum& cj : gs) {
                if (cj.zero) continue;
                if (!gany || cj.val < gammaG) gammaG = cj.val;
                gany = true;
            }
            if (!gany) throw PrecisionLoss{};
            for (const PadicNum& cj : gs)
                if (cj.zero && cj.val <= gammaG) throw PrecisionLoss{};
            RepRes rep;
            rep.gbar.assign(gs.size(), 0);
            for (size_t i = 0; i < gs.size(); ++i) {
                if (gs[i].zero || gs[i].val != gammaG) continue;
                rep.gbar[i] = Int(gs[i].unit % p).get_si();
            }
            rep.v_sq = hilbert_symbol(gen_a, rpow(p, gammaG), v);
            rep.v_nr = hilbert_symbol(gen_a, Rational(rpow(p, gammaG) * Rational(nqr)), v);
            rr.push_back(std::move(rep));
        }

        auto horner = [&](const std::vector<long>& cs, long x) {
            long acc = 0;
            for (size_t i = cs.size(); i-- > 0;) acc = (acc * x + cs[i]) % pl;
            return acc;
        };
        std::vector<long> children;
        for (long j = 0; j < pl && !done(); ++j) {
            long fj = horner(fbar, j);
            if (fj == 0) {
                children.push_back(j);
                continue;
            }
            Inv fib = is_nonresidue(Int(fj), p) ? fib_nr : fib_sq;
            if (fib != Inv::zero) continue;  // residue class off the locus
            bool resolved = false;
            for (const RepRes& rep : rr) {
                long gj = horner(rep.gbar, j);
                if (gj == 0) continue;
                Inv val = is_nonresidue(Int(gj), p) ? rep.v_nr : rep.v_sq;
                resolved = true;
                if (!have(val)) disc_witness(ch, t0 + step * Rational(j), k + 1, val);
                break;
            }
            if (!resolved) children.push_back(j);
        }
        for (long j : children) {
            if (done()) return;
            cover(ch, t0 + step * Rational(j), k + 1);
        }
    }
};

// --- non-split places: exact arithmetic in L_w -------------------------------

struct QuadChart {
    PolyQuad F, G1, G2;
    bool has_swap = false;
    bool chartB = false;
};

struct QuadCtx {
    Rational a_surf;
    Rational gen_a;
    PolyQuad cf;
    PolyQuad gen_poly;
    PlaceOfL w;
    Int p;
    Int d;
    bool dyadic = false;
    int tau = 1;
    QuadElem pi = QuadElem::from_rational(Int(2), Rational(2));
    std::vector<QuadElem> reps;  // dyadic residue system of O_w / pi
    long pl = 0, dl = 0, q = 0;  // odd case: residue field data
    int max_depth = 40;
    LocalEvalReport* out = nullptr;
    std::vector<QuadElem> units;  // witness candidates

    bool done() const { return out->value_set.size() == 2; }
    bool have(Inv val) const { return out->value_set.count(val) > 0; }

    QuadElem qe(const Rational& x) const { return QuadElem::from_rational(d, x); }

    QuadElem pi_pow(long k) const {
        QuadElem r = qe(Rational(1));
        long n = k >= 0 ? k : -k;
        for (long i = 0; i < n; ++i) r = r * pi;
        if (k >= 0) return r;
        return qe(Rational(1)) / r;
    }

    bool try_witness(const QuadElem& t, Inv val) {
        QuadElem fiber = cf.eval(t);
        if (fiber.is_zero()) return false;
        if (hilbert_symbol_quad(a_surf, fiber, w) != Inv::zero) return false;
        QuadElem gval = gen_poly.eval(t);
        if (gval.is_zero()) return false;
        if (hilbert_symbol_quad(gen_a, gval, w) != val) return false;
        EvalWitness e;
        if (t.is_rational()) {
            e.t = t.x;
        } else {
            e.quadratic = true;
            e.tq = t;
        }
        e.value = val;
        out->witnesses.push_back(e);
        out->value_set.insert(val);
        return true;
    }

    void record_infinity(Inv val) {
        if (have(val)) return;
        EvalWitness e;
        e.at_infinity = true;
        e.value = val;
        out->witnesses.push_back(e);
        out->value_set.insert(val);
    }

    void disc_witness(const QuadChart& ch, const QuadElem& t0, long k, Inv val) {
        QuadElem step = pi_pow(k);
        for (const QuadElem& u : units) {
            QuadElem s = t0 + step * u;
            if (ch.chartB && s.is_zero()) continue;
            QuadElem t = ch.chartB ? qe(Rational(1)) / s : s;
            if (try_witness(t, val)) return;
        }
        throw LimitError("evaluation image: no admissible witness in a decided disc");
    }

    bool ball_witness(const QuadChart& ch, const QuadElem& t0, long k, Inv val) {
        for (long i = 0; i <= tau + 10; ++i) {
            QuadElem step = pi_pow(k + i);
            for (const QuadElem& u : units) {
                QuadElem s = t0 + step * u;
                if (ch.chartB && s.is_zero()) continue;
                QuadElem t = ch.chartB ? qe(Rational(1)) / s : s;
                if (try_witness(t, val)) return true;
            }
        }
        return false;
    }

    bool ball_leaf(const PolyQuad& sh) const {
        if (sh.degree() < 1) return false;
        QuadElem s1 = sh.at(1);
        if (s1.is_zero()) return false;
        long v1 = quad_val(s1, w);
        for (int j = 2; j <= sh.degree(); ++j) {
            QuadElem cj = sh.at(j);
            if (cj.is_zero()) continue;
            if (quad_val(cj, w) < v1 + 1) return false;
        }
        QuadElem s0 = sh.at(0);
        return s0.is_zero() || quad_val(s0, w) >= v1;
    }

    PinResult pin_quad(const Rational& slot, const PolyQuad& g, const QuadElem& t0, long k) {
        PolyQuad sh = g.compose_affine(t0, pi_pow(k));
        PinResult r;
        QuadElem g0 = sh.at(0);
        if (g0.is_zero()) return r;
        long v0 = quad_val(g0, w);
        for (int j = 1; j <= sh.degree(); ++j) {
            QuadElem cj = sh.at(j);
            if (cj.is_zero()) continue;
            if (quad_val(cj, w) < v0 + tau) return r;
        }
        r.status = PinStatus::ok;
        r.value = hilbert_symbol_quad(slot, g0, w);
        return r;
    }

    std::optional<Inv> pinned_value(const QuadChart& ch, const QuadElem& t0, long k) {
        PinResult r1 = pin_quad(gen_a, ch.G1, t0, k);
        PinResult r2;
        if (ch.has_swap) r2 = pin_quad(gen_a, ch.G2, t0, k);
        if (r1.status == PinStatus::ok || r2.status == PinStatus::ok) {
            if (r1.status == PinStatus::ok && r2.status == PinStatus::ok &&
                r1.value != r2.value)
                throw LimitError("evaluation image: representative values disagree");
            return r1.status == PinStatus::ok ? r1.value : r2.value;
        }
        return std::nullopt;
    }

    void cover(const QuadChart& ch, const QuadElem& t0, long k) {
        if (done()) return;
        PolyQuad sh = ch.F.compose_affine(t0, pi_pow(k));
        QuadElem q0 = sh.at(0);
        if (!q0.is_zero()) {
            long v0 = quad_val(q0, w);
            bool margin_ok = true;
            for (int j = 1; j <= sh.degree(); ++j) {
                QuadElem cj = sh.at(j);
                if (cj.is_zero()) continue;
                if (quad_val(cj, w) < v0 + tau) {
                    margin_ok = false;
                    break;
                }
            }
            if (margin_ok) {
                if (hilbert_symbol_quad(a_surf, q0, w) != Inv::zero) return;
                std::optional<Inv> val = pinned_value(ch, t0, k);
                if (val) {
                    if (!have(*val)) disc_witness(ch, t0, k, *val);
                    return;
                }
                subdivide(ch, t0, k);
                return;
            }
        }
        if (ball_leaf(sh)) {
            std::optional<Inv> val = pinned_value(ch, t0, k);
            if (val) {
                if (have(*val)) return;
                if (ball_witness(ch, t0, k, *val)) return;
                throw LimitError("evaluation image: no admissible witness near a decided center");
            }
        }
        subdivide(ch, t0, k);
    }

    void subdivide(const QuadChart& ch, const QuadElem& t0, long k) {
        if (k >= max_depth)
            throw LimitError("evaluation image: subdivision depth limit reached at " +
                             w.to_string());
        if (dyadic) {
            for (const QuadElem& r : reps) {
                if (done()) return;
                cover(ch, t0 + pi_pow(k) * r, k + 1);
            }
            return;
        }
        aggregate(ch, t0, k);
    }

    // Tiny residue field F_q, q odd.
    struct Fq {
        long x = 0, y = 0;
    };
    bool fq_zero(const Fq& z) const { return z.x == 0 && z.y == 0; }
    Fq fq_add(const Fq& a, const Fq& b) const { return Fq{(a.x + b.x) % pl, (a.y + b.y) % pl}; }
    Fq fq_mul(const Fq& a, const Fq& b) const {
        long xx = (a.x * b.x % pl + dl * (a.y * b.y % pl)) % pl;
        long yy = (a.x * b.y + a.y * b.x) % pl;
        return Fq{xx, yy};
    }
    bool fq_nonsquare(const Fq& z) const {
        long e = (q - 1) / 2;
        Fq acc{1, 0}, base = z;
        while (e > 0) {
            if (e & 1) acc = fq_mul(acc, base);
            base = fq_mul(base, base);
            e >>= 1;
        }
        return acc.x == pl - 1;
    }
    Fq fq_residue(const QuadElem& u) const {
        Fq r;
        if (u.is_zero()) return r;
        r.x = residue_mod(p, u.x).get_si();
        if (w.splitting == Splitting::inert) r.y = residue_mod(p, u.y).get_si();
        return r;
    }
    QuadElem fq_lift(const Fq& z) const { return QuadElem(d, Rational(z.x), Rational(z.y)); }
    Fq fq_nonresidue_elt() const {
        long ymax = (w.splitting == Splitting::inert) ? pl : 1;
        for (long x = 0; x < pl; ++x)
            for (long y = 0; y < ymax; ++y) {
                if (x == 0 && y == 0) continue;
                Fq z{x, y};
                if (fq_nonsquare(z)) return z;
            }
        throw LimitError("no nonresidue in the residue field");
    }

    void aggregate(const QuadChart& ch, const QuadElem& t0, long k) {
        PolyQuad sh = ch.F.compose_affine(t0, pi_pow(k));
        bool any = false;
        long gammaF = 0;
        for (int i = 0; i <= sh.degree(); ++i) {
            QuadElem ci = sh.at(i);
            if (ci.is_zero()) continue;
            long vi = quad_val(ci, w);
            if (!any || vi < gammaF) gammaF = vi;
            any = true;
        }
        if (!any) throw LimitError("evaluation image: degenerate fiber polynomial");
        QuadElem piF = pi_pow(gammaF);
        std::vector<Fq> fbar(sh.degree() + 1);
        for (int i = 0; i <= sh.degree(); ++i) {
            QuadElem ci = sh.at(i);
            if (ci.is_zero() || quad_val(ci, w) != gammaF) continue;
            fbar[i] = fq_residue(ci / piF);
        }
        Fq nres = fq_nonresidue_elt();
        Inv fib_sq = hilbert_symbol_quad(a_surf, piF, w);
        Inv fib_nr = hilbert_symbol_quad(a_surf, piF * fq_lift(nres), w);

        struct RepRes {
            std::vector<Fq> gbar;
            Inv v_sq = Inv::zero, v_nr = Inv::zero;
        };
        std::vector<RepRes> rr;
        int nrep = ch.has_swap ? 2 : 1;
        for (int r = 0; r < nrep; ++r) {
            const PolyQuad& G = (r == 0) ? ch.G1 : ch.G2;
            PolyQuad gs = G.compose_affine(t0, pi_pow(k));
            if (gs.is_zero()) continue;
            long gammaG = 0;
            bool gany = false;
            for (int i = 0; i <= gs.degree(); ++i) {
                QuadElem ci = gs.at(i);
                if (ci.is_zero()) continue;
                long vi = quad_val(ci, w);
                if (!gany || vi < gammaG) gammaG = vi;
                gany = true;
            }
            if (!gany) continue;
            QuadElem piG = pi_pow(gammaG);
            RepRes rep;
            rep.gbar.assign(gs.degree() + 1, Fq{});
            for (int i = 0; i <= gs.degree(); ++i) {
                QuadElem ci = gs.at(i);
                if (ci.is_zero() || quad_val(ci, w) != gammaG) continue;
                rep.gbar[i] = fq_residue(ci / piG);
            }
            rep.v_sq = hilbert_symbol_quad(gen_a, piG, w);
            rep.v_nr = hilbert_symbol_quad(gen_a, piG * fq_lift(nres), w);
            rr.push_back(std::move(rep));
        }

        auto horner = [&](const std::vector<Fq>& cs, const Fq& z) {
            Fq acc;
            for (size_t i = cs.size(); i-- > 0;) acc = fq_add(fq_mul(acc, z), cs[i]);
            return acc;
        };
        long ymax = (w.splitting == Splitting::inert) ? pl : 1;
        std::vector<Fq> children;
        for (long x = 0; x < pl && !done(); ++x)
            for (long y = 0; y < ymax && !done(); ++y) {
                Fq z{x, y};
                Fq fz = horner(fbar, z);
                if (fq_zero(fz)) {
                    children.push_back(z);
                    continue;
                }
                Inv fib = fq_nonsquare(fz) ? fib_nr : fib_sq;
                if (fib != Inv::zero) continue;
                bool resolved = false;
                for (const RepRes& rep : rr) {
                    Fq gz = horner(rep.gbar, z);
                    if (fq_zero(gz)) continue;
                    Inv val = fq_nonsquare(gz) ? rep.v_nr : rep.v_sq;
                    resolved = true;
                    if (!have(val)) disc_witness(ch, t0 + pi_pow(k) * fq_lift(z), k + 1, val);
                    break;
                }
                if (!resolved) children.push_back(z);
            }
        for (const Fq& z : children) {
            if (done()) return;
            cover(ch, t0 + pi_pow(k) * fq_lift(z), k + 1);
        }
    }
};

// Records the invariant over the infinite parameter when the fiber there is
// smooth and solvable: a monic even-degree representative extends with value
// zero; an even-degree one evaluates at its leading coefficient; odd degree is
// not supported.
template <typename Ctx>
void record_infinite_parameter(Ctx& ctx, const BrauerGeneratorL& gen, const PlaceOfL& w) {
    int gd = gen.symbol_poly.degree();
    if (gen.symbol_poly.is_monic() && gd % 2 == 0) {
        ctx.record_infinity(Inv::zero);
        return;
    }
    if (gd % 2 == 0) {
        ctx.record_infinity(hilbert_symbol_quad(gen.a, gen.symbol_poly.c.back(), w));
        return;
    }
    throw LimitError("evaluation image: unsupported representative shape at the infinite parameter");
}

LocalEvalReport run_split(const BrauerGeneratorL& gen, const PlaceOfL& w, const Rational& a,
                          const Rational& c, const PolyQ& f, int max_depth, int prec) {
    SplitCtx ctx;
    ctx.a_surf = a;
    ctx.gen_a = gen.a;
    ctx.cf = PolyQ::constant(c) * f;
    ctx.gen_poly = gen.symbol_poly;
    ctx.v = w.v;
    ctx.w = w;
    ctx.p = w.v.p;
    ctx.max_depth = max_depth;
    ctx.prec = prec;
    LocalEvalReport rep;
    rep.w = w;
    ctx.out = &rep;

    PolyQuad g1 = gen.symbol_poly;
    PolyQuad g2;
    bool has_swap = false;
    if (g1.is_monic() && g1.degree() >= 1) {
        auto [quo, rem] = pq_divmod(PolyQuad::from_rational_poly(w.d, ctx.cf), g1);
        if (rem.is_zero() && !quo.is_zero()) {
            g2 = quo;
            has_swap = true;
        }
    }

    SplitChart chA;
    chA.F = ctx.cf;
    chA.G1 = embed_poly(g1, w, prec);
    if (has_swap) chA.G2 = embed_poly(g2, w, prec);
    chA.has_swap = has_swap;

    SplitChart chB;
    chB.chartB = true;
    chB.F = ctx.cf.reversal(ctx.cf.degree());
    if (ctx.cf.degree() % 2 == 1)
        chB.F = chB.F * make_poly({Rational(0), Rational(1)});
    PolyQuad xq(w.d, {QuadElem::from_rational(w.d, Rational(0)),
                      QuadElem::from_rational(w.d, Rational(1))});
    PolyQuad g1b = g1.reversal(g1.degree());
    if (g1.degree() % 2 == 1) g1b = g1b * xq;
    chB.G1 = embed_poly(g1b, w, prec);
    if (has_swap) {
        PolyQuad g2b = g2.reversal(g2.degree());
        if (g2.degree() % 2 == 1) g2b = g2b * xq;
        chB.G2 = embed_poly(g2b, w, prec);
    }
    chB.has_swap = has_swap;

    ctx.cover(chA, Rational(0), 0);
    if (!ctx.done()) ctx.cover(chB, Rational(0), 1);

    if (!ctx.done() && ctx.cf.degree() % 2 == 0) {
        Rational lcv = ctx.cf.c.back();
        if (hilbert_symbol(a, lcv, ctx.v) == Inv::zero)
            record_infinite_parameter(ctx, gen, w);
    }
    return rep;
}

LocalEvalReport run_quad(const BrauerGeneratorL& gen, const PlaceOfL& w, const Rational& a,
                         const Rational& c, const PolyQ& f, int max_depth) {
    QuadCtx ctx;
    ctx.a_surf = a;
    ctx.gen_a = gen.a;
    ctx.w = w;
    ctx.p = w.v.p;
    ctx.d = w.d;
    ctx.max_depth = max_depth;
    ctx.dyadic = (w.v.p == 2);
    ctx.cf = PolyQuad::from_rational_poly(w.d, PolyQ::constant(c) * f);
    ctx.gen_poly = gen.symbol_poly;

    if (ctx.dyadic) {
        if (w.splitting == Splitting::inert) {
            ctx.pi = ctx.qe(Rational(2));
            ctx.tau = 3;
            QuadElem theta(ctx.d, Rational(1, 2), Rational(1, 2));
            ctx.reps = {ctx.qe(Rational(0)), ctx.qe(Rational(1)), theta,
                        ctx.qe(Rational(1)) + theta};
        } else {
            ctx.tau = 5;
            ctx.pi = (ctx.d % 2 == 0) ? QuadElem(ctx.d, Rational(0), Rational(1))
                                      : QuadElem(ctx.d, Rational(1), Rational(1));
            ctx.reps = {ctx.qe(Rational(0)), ctx.qe(Rational(1))};
        }
    } else {
        ctx.tau = 1;
        ctx.pl = w.v.p.get_si();
        if (w.splitting == Splitting::inert) {
            if (w.v.p > 63)
                throw LimitError("evaluation image: residue field above the supported bound at " +
                                 w.to_string());
            ctx.pi = ctx.qe(Rational(w.v.p));
            ctx.q = ctx.pl * ctx.pl;
            Int dm = ctx.d % w.v.p;
            if (dm < 0) dm += w.v.p;
            ctx.dl = dm.get_si();
        } else {
            if (w.v.p > 4096)
                throw LimitError("evaluation image: residue field above the supported bound at " +
                                 w.to_string());
            ctx.pi = QuadElem(ctx.d, Rational(0), Rational(1));  // sqrt(d)
            ctx.q = ctx.pl;
            ctx.dl = 0;
        }
    }

    // witness candidates: small integers and small mixed elements
    for (long i = 0; i <= 40; ++i) ctx.units.push_back(ctx.qe(Rational(i)));
    for (long x = 0; x <= 6; ++x)
        for (long y = 1; y <= 6; ++y)
            ctx.units.push_back(QuadElem(ctx.d, Rational(x), Rational(y)));
    if (ctx.dyadic && w.splitting == Splitting::inert)
        for (long x = 0; x <= 4; ++x)
            for (long y = 1; y <= 5; y += 2)
                ctx.units.push_back(QuadElem(ctx.d, Rational(2 * x + y, 2), Rational(y, 2)));

    LocalEvalReport rep;
    rep.w = w;
    ctx.out = &rep;

    PolyQuad g1 = gen.symbol_poly;
    PolyQuad g2;
    bool has_swap = false;
    if (g1.is_monic() && g1.degree() >= 1) {
        auto [quo, rem] = pq_divmod(ctx.cf, g1);
        if (rem.is_zero() && !quo.is_zero()) {
            g2 = quo;
            has_swap = true;
        }
    }

    QuadChart chA;
    chA.F = ctx.cf;
    chA.G1 = g1;
    chA.G2 = g2;
    chA.has_swap = has_swap;

    QuadChart chB;
    chB.chartB = true;
    PolyQuad xq(ctx.d, {ctx.qe(Rational(0)), ctx.qe(Rational(1))});
    chB.F = ctx.cf.reversal(ctx.cf.degree());
    if (ctx.cf.degree() % 2 == 1) chB.F = chB.F * xq;
    chB.G1 = g1.reversal(g1.degree());
    if (g1.degree() % 2 == 1) chB.G1 = chB.G1 * xq;
    if (has_swap) {
        chB.G2 = g2.reversal(g2.degree());
        if (g2.degree() % 2 == 1) chB.G2 = chB.G2 * xq;
    }
    chB.has_swap = has_swap;

    ctx.cover(chA, ctx.qe(Rational(0)), 0);
    if (!ctx.done()) ctx.cover(chB, ctx.qe(Rational(0)), 1);

    // rational slots die in the even-degree completion, so for even-degree f
    // the infinite fiber always has points here
    if (!ctx.done() && f.degree() % 2 == 0) record_infinite_parameter(ctx, gen, w);
    return rep;
}

// d > 0, one real embedding; exact sign analysis over the sample points of the
// combined root set of f and the norm of the representative.
LocalEvalReport run_real(const BrauerGeneratorL& gen, const PlaceOfL& w, const Rational& a,
                         const Rational& c, const PolyQ& f) {
    LocalEvalReport rep;
    rep.w = w;
    PolyQ cf = PolyQ::constant(c) * f;
    PolyQuad g = gen.symbol_poly;
    PolyQuad nq = g * g.conj();
    PolyQ ng;
    for (int i = 0; i <= nq.degree(); ++i) {
        QuadElem ci = nq.at(i);
        if (ci.y != 0) throw LimitError("evaluation image: norm polynomial is not rational");
        ng.c.push_back(ci.x);
    }
    while (!ng.c.empty() && ng.c.back() == 0) ng.c.pop_back();
    if (ng.is_zero()) throw InputError("evaluation image: zero representative");

    auto record = [&](Inv val, const Rational& t) {
        if (rep.value_set.count(val) > 0) return;
        EvalWitness e;
        e.t = t;
        e.value = val;
        rep.witnesses.push_back(e);
        rep.value_set.insert(val);
    };

    PolyQ rad = radical_poly(f * ng);
    for (const Rational& s : real_sign_sample_points(rad)) {
        if (rep.value_set.size() == 2) break;
        if (f.eval(s) == 0 || ng.eval(s) == 0) continue;
        if (!(a > 0) && !(cf.eval(s) > 0)) continue;  // no real points on this fiber
        QuadElem gv = g.eval(QuadElem::from_rational(w.d, s));
        record(hilbert_symbol_quad(gen.a, gv, w), s);
    }

    if (rep.value_set.size() < 2 && f.degree() % 2 == 0) {
        Rational lcv = cf.c.back();
        if (a > 0 || lcv > 0) {
            int gd = g.degree();
            if (g.is_monic() && gd % 2 == 0) {
                if (rep.value_set.count(Inv::zero) == 0) {
                    EvalWitness e;
                    e.at_infinity = true;
                    rep.witnesses.push_back(e);
                    rep.value_set.insert(Inv::zero);
                }
            } else if (gd % 2 == 0) {
                Inv val = hilbert_symbol_quad(gen.a, g.c.back(), w);
                if (rep.value_set.count(val) == 0) {
                    EvalWitness e;
                    e.at_infinity = true;
                    e.value = val;
                    rep.witnesses.push_back(e);
                    rep.value_set.insert(val);
                }
            } else {
                throw LimitError(
                    "evaluation image: unsupported representative shape at the infinite parameter");
            }
        }
    }
    if (rep.value_set.empty()) rep.note = "no real points at this embedding";
    return rep;
}

bool slot_is_square_in_completion(const Rational& z, const PlaceOfL& w) {
    if (w.v.is_real()) return w.d < 0 || z > 0;
    if (w.splitting == Splitting::split) return rational_is_local_square(z, w.v);
    return square_in_local_quad_ext(z, make_local_ext(w.d, w.v));
}

bool good_reduction_place(const PlaceOfL& w, const Rational& a, const Rational& gena,
                          const Rational& c, const PolyQ& f) {
    if (w.v.is_real() || w.v.p == 2) return false;
    const Int& p = w.v.p;
    if (val_p(p, a) != 0 || val_p(p, gena) != 0 || val_p(p, c) != 0) return false;
    for (int i = 0; i <= f.degree(); ++i)
        if (f.at(i) != 0 && val_p(p, f.at(i)) < 0) return false;
    Rational dl = poly_discriminant(f) * f.c.back();
    if (dl == 0 || val_p(p, dl) != 0) return false;
    if (w.d % p == 0) return false;
    return true;
}

// The invariant is identically zero; the report reduces to finding one local
// point (or discovering that none exists).
LocalEvalReport constant_zero_report(const PlaceOfL& w, const Rational& a, const Rational& c,
                                     const PolyQ& f, const std::string& note, int max_depth,
                                     uint64_t seed) {
    LocalEvalReport rep;
    rep.w = w;
    rep.note = note;
    auto push = [&](const Rational& t, bool at_inf) {
        EvalWitness e;
        e.at_infinity = at_inf;
        e.t = t;
        rep.witnesses.push_back(e);
        rep.value_set.insert(Inv::zero);
    };
    if (w.v.is_real()) {
        if (w.d < 0 || a > 0) {  // complex completion, or the conic side is definite-free
            for (Rational t = 0;; t += 1)
                if (f.eval(t) != 0) {
                    push(t, false);
                    return rep;
                }
        }
        PolyQ cf = PolyQ::constant(c) * f;
        for (const Rational& s : real_sign_sample_points(radical_poly(f)))
            if (f.eval(s) != 0 && cf.eval(s) > 0) {
                push(s, false);
                return rep;
            }
        if (f.degree() % 2 == 0 && cf.c.back() > 0) {
            push(Rational(0), true);
            return rep;
        }
        rep.note += "; no real points at this embedding";
        return rep;
    }
    if (w.splitting == Splitting::split) {
        SolvableReport s = chatelet_local_solvable(a, c, f, w.v, max_depth, seed);
        if (!s.solvable) {
            rep.note += "; no local points";
            return rep;
        }
        push(s.witness.t, s.witness.at_infinity);
        return rep;
    }
    // non-split completion: every rational parameter with a smooth fiber works,
    // because restriction to an even-degree extension kills the fiber class
    LocalQuadExt ext = make_local_ext(w.d, w.v);
    for (Rational t = 0; t <= 60; t += 1) {
        if (f.eval(t) == 0) continue;
        if (!conic_solvable_over_local_ext(a, Rational(c * f.eval(t)), ext))
            throw LimitError("evaluation image: internal solvability check failed");
        push(t, false);
        return rep;
    }
    throw LimitError("evaluation image: no smooth rational fiber found");
}

std::set<Place> surface_bad_places(const Rational& a, const Rational& c, const PolyQ& f) {
    std::set<Place> out;
    out.insert(Place::real());
    out.insert(Place::prime(Int(2)));
    auto add_int = [&](const Int& n) {
        Int m = abs_int(n);
        if (m <= 1) return;
        for (const auto& [pp, e] : factorize(m))
            if (pp > 1) out.insert(Place::prime(pp));
    };
    auto add_rat = [&](const Rational& x) {
        if (x == 0) return;
        add_int(Int(x.get_num()));
        add_int(Int(x.get_den()));
    };
    add_rat(a);
    add_rat(c);
    add_rat(Rational(poly_discriminant(f) * f.c.back()));
    return out;
}

}  // namespace

SolvableReport chatelet_local_solvable(const Rational& a, const Rational& c, const PolyQ& f,
                                       const Place& v, int max_depth, uint64_t seed) {
    SymbolValueSet s = symbol_value_set(a, c, f, v, max_depth, seed);
    SolvableReport r;
    r.solvable = s.contains(Inv::zero);
    if (r.solvable)
        for (const SymbolWitness& wit : s.witnesses)
            if (wit.value == Inv::zero) {
                r.witness = wit;
                break;
            }
    return r;
}

AdelicReport adelic_solvable(const ConicBundleData& X, int max_depth, uint64_t seed) {
    if (!X.chatelet)
        throw InputError("adelic solvability requires an explicit surface model");
    AdelicReport r;
    r.solvable = true;
    for (const Place& v : surface_bad_places(X.a, X.c, X.f)) {
        SolvableReport s = chatelet_local_solvable(X.a, X.c, X.f, v, max_depth, seed);
        LocalSolvability row;
        row.v = v;
        row.solvable = s.solvable;
        row.rule = "local-symbol-search";
        row.has_witness = s.solvable;
        if (s.solvable) row.witness = s.witness;
        r.table.push_back(row);
        if (!s.solvable) r.solvable = false;
    }
    return r;
}

AdelicReport adelic_solvable(const ConicBundleData& X, const QuadDisc& d, int max_depth,
                             uint64_t seed) {
    if (!X.chatelet)
        throw InputError("adelic solvability requires an explicit surface model");
    AdelicReport r;
    r.solvable = true;
    r.extension = true;
    r.d = d.d;
    std::set<Place> bad = surface_bad_places(X.a, X.c, X.f);
    for (const auto& [pp, e] : factorize(abs_int(d.d)))
        if (pp > 1) bad.insert(Place::prime(pp));
    for (const Place& v : bad) {
        for (const PlaceOfL& w : places_of_L_above(d.d, v)) {
            LocalSolvability row;
            row.extension = true;
            row.v = v;
            row.w = w;
            if (v.is_real() && d.d < 0) {
                // complex completion: every smooth fiber has points
                row.solvable = true;
                row.rule = "lem-even-degree-conic";
                for (Rational t = 0;; t += 1)
                    if (X.f.eval(t) != 0) {
                        row.has_witness = true;
                        row.witness.t = t;
                        break;
                    }
            } else if (v.is_real() || w.splitting == Splitting::split) {
                // the completion of L repeats the completion of Q
                SolvableReport s = chatelet_local_solvable(X.a, X.c, X.f, v, max_depth, seed);
                row.solvable = s.solvable;
                row.rule = "local-symbol-search";
                row.has_witness = s.solvable;
                if (s.solvable) row.witness = s.witness;
            } else {
                // even-degree completion kills every rational fiber class
                row.solvable = true;
                row.rule = "lem-even-degree-conic";
                LocalQuadExt ext = make_local_ext(d.d, v);
                for (Rational t = 0; t <= 60; t += 1) {
                    if (X.f.eval(t) == 0) continue;
                    if (!conic_solvable_over_local_ext(X.a, Rational(X.c * X.f.eval(t)), ext))
                        throw LimitError("adelic solvability: internal solvability check failed");
                    row.has_witness = true;
                    row.witness.t = t;
                    break;
                }
            }
            r.table.push_back(row);
            if (!row.solvable) r.solvable = false;
        }
    }
    return r;
}

LocalEvalReport evaluation_image(const BrauerGeneratorL& gen, const PlaceOfL& w,
                                 const Rational& a, const Rational& c, const PolyQ& f,
                                 int max_depth, int precision, uint64_t seed) {
    if (a == 0 || c == 0) throw InputError("evaluation image: zero surface coefficient");
    if (f.is_zero() || f.degree() < 1)
        throw InputError("evaluation image: fiber polynomial must be nonconstant");
    if (!is_squarefree(f)) throw InputError("evaluation image: fiber polynomial must be squarefree");
    if (!gen.has_symbol)
        throw InputError("evaluation image: generator has no symbol representative");
    if (gen.a == 0 || gen.symbol_poly.is_zero())
        throw InputError("evaluation image: degenerate symbol representative");
    if (gen.symbol_poly.d != w.d)
        throw InputError("evaluation image: place and generator discriminants differ");

    if (slot_is_square_in_completion(gen.a, w))
        return constant_zero_report(w, a, c, f,
                                    "the symbol class is trivial in this completion",
                                    max_depth, seed);
    if (good_reduction_place(w, a, gen.a, c, f))
        return constant_zero_report(w, a, c, f, "good-reduction constancy", max_depth, seed);
    if (w.v.is_real()) return run_real(gen, w, a, c, f);
    if (w.splitting == Splitting::split) {
        for (int pr = std::max(precision, 8); pr <= 1280; pr *= 2) {
            try {
                return run_split(gen, w, a, c, f, max_depth, pr);
            } catch (const PrecisionLoss&) {
                // window collapsed; retry wider
            }
        }
        throw LimitError("evaluation image: p-adic precision exhausted at " + w.to_string());
    }
    return run_quad(gen, w, a, c, f, max_depth);
}

std::string bm_decision_to_string(BmDecision d) {
    switch (d) {
        case BmDecision::obstruction_present: return "obstruction_present";
        case BmDecision::no_obstruction: return "no_obstruction";
        case BmDecision::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

BmReport bm_obstruction_quadratic(const ConicBundleData& X, const QuadDisc& d, int max_depth,
                                  int precision, uint64_t seed) {
    if (!X.chatelet)
        throw InputError("obstruction computation requires an explicit surface model");
    AdelicReport al = adelic_solvable(X, d, max_depth, seed);
    if (!al.solvable)
        throw InputError("obstruction computation requires adelic points over the extension");

    BmReport r;
    try {
        RestrictionData rd = restriction_map(X.S, d, seed);
        r.dimension_over_L = rd.over_L.quotient_dim();
        if (r.dimension_over_L == 0) {
            r.decision = BmDecision::no_obstruction;
            r.note = "the quotient group over the extension vanishes";
            return r;
        }
        if (r.dimension_over_L > 1) {
            r.decision = BmDecision::inconclusive;
            r.note = "quotient dimension exceeds the single-generator case";
            return r;
        }
        r.has_generator = true;
        r.generator = rd.over_L.generators.front();
        if (!r.generator.has_symbol) {
            r.decision = BmDecision::inconclusive;
            r.note = "the generator admits no symbol representative";
            return r;
        }

        std::set<Place> bad = surface_bad_places(X.a, X.c, X.f);
        auto add_rat = [&](const Rational& x) {
            for (const auto& [pp, e] : factorize(abs_int(Int(x.get_num()))))
                if (pp > 1) bad.insert(Place::prime(pp));
            for (const auto& [pp, e] : factorize(abs_int(Int(x.get_den()))))
                if (pp > 1) bad.insert(Place::prime(pp));
        };
        add_rat(r.generator.a);
        for (const auto& [pp, e] : factorize(abs_int(d.d)))
            if (pp > 1) bad.insert(Place::prime(pp));

        bool all_singleton = true;
        bool any_empty = false;
        Inv total = Inv::zero;
        for (const Place& v : bad)
            for (const PlaceOfL& w : places_of_L_above(d.d, v)) {
                LocalEvalReport lr =
                    evaluation_image(r.generator, w, X.a, X.c, X.f, max_depth, precision, seed);
                r.places.push_back(lr);
                if (lr.value_set.empty()) any_empty = true;
                else if (lr.value_set.size() == 1) total = inv_add(total, *lr.value_set.begin());
                else all_singleton = false;
            }
        if (any_empty) {
            r.decision = BmDecision::inconclusive;
            r.note = "a completion carries no local points despite adelic solvability";
            return r;
        }
        if (!all_singleton) {
            r.decision = BmDecision::no_obstruction;
            r.note = "some completion attains both invariants, so the sum can vanish";
            return r;
        }
        r.total_forced = true;
        r.total = total;
        if (total == Inv::half) {
            r.decision = BmDecision::obstruction_present;
            r.note = "the invariant sum is 1/2 at every adelic point";
        } else {
            r.decision = BmDecision::no_obstruction;
            r.note = "the invariant sum vanishes at every adelic point";
        }
        return r;
    } catch (const LimitError& e) {
        r.decision = BmDecision::inconclusive;
        r.note = e.what();
        return r;
    }
}

Inv parity_criterion(const Rational& a, const Rational& c, const QuadDisc& d) {
    if (a == 0 || c == 0) throw InputError("parity criterion: zero coefficient");
    Inv total = Inv::zero;
    for (const Place& v : ramified_places(a, c))
        if (splitting_type(d.d, v) == Splitting::split)
            total = inv_add(total, hilbert_symbol(a, c, v));
    return total;
}

std::string conclusion_to_string(Conclusion c) {
    switch (c) {
        case Conclusion::rational_point_exists: return "rational_point_exists";
        case Conclusion::hasse_principle_holds_over_L: return "hasse_principle_holds_over_L";
        case Conclusion::bm_obstruction_over_L: return "bm_obstruction_over_L";
        case Conclusion::no_adelic_points: return "no_adelic_points";
        case Conclusion::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string conditionality_to_string(Conditionality c) {
    return c == Conditionality::unconditional ? "unconditional" : "schinzel_conditional";
}

Verdict hasse_verdict(const ConicBundleData& X, const std::optional<QuadDisc>& d, int max_depth,
                      int precision, uint64_t seed) {
    Verdict V;
    if (d) {
        V.has_d = true;
        V.d = d->d;
    }

    // a degree-one singular parameter carries a rational double point
    for (const FiberDatum& fd : X.S)
        if (fd.point.degree() == 1) {
            V.conclusion = Conclusion::rational_point_exists;
            V.citations.push_back("lem-split-fiber-rational-point");
            V.note = "the singular fiber over a rational parameter has a rational point";
            return V;
        }

    std::optional<bool> adelic_q;
    if (X.chatelet) {
        if (d) {
            V.adelic = adelic_solvable(X, *d, max_depth, seed);
        } else {
            V.adelic = adelic_solvable(X, max_depth, seed);
            adelic_q = V.adelic.solvable;
        }
        V.has_adelic = true;
        if (!V.adelic.solvable) {
            V.conclusion = Conclusion::no_adelic_points;
            V.citations.push_back("obs-adelic-emptiness");
            return V;
        }
    }

    if (X.geometric_fiber_count == 4) {
        BrauerQuotient bq = brauer_quotient(X.S);
        bool fire = bq.quotient_dim() != 0;
        if (!fire && X.chatelet) {
            if (!adelic_q) adelic_q = adelic_solvable(X, max_depth, seed).solvable;
            fire = *adelic_q;
        }
        if (fire) {
            V.conclusion = Conclusion::hasse_principle_holds_over_L;
            V.citations.push_back("thm-four-fibers");
            return V;
        }
    }

    if (!d) {
        V.conclusion = Conclusion::inconclusive;
        V.note = "no decisive rule applies without a specified quadratic extension";
        return V;
    }

    std::set<Int> M = problematic_set_M(X, seed);
    if (M.count(d->d) == 0) {
        V.conclusion = Conclusion::hasse_principle_holds_over_L;
        V.citations.push_back("thm-problematic-avoidance");
        if (X.geometric_fiber_count > 5) {
            V.citations.push_back("hyp-schinzel-many-fibers");
            V.conditionality = Conditionality::schinzel_conditional;
        } else {
            V.citations.push_back("thm-bmo-five-fibers");
        }
        return V;
    }

    if (!X.chatelet) {
        V.conclusion = Conclusion::inconclusive;
        V.note = "the extension lies in the problematic set and no explicit model is available";
        return V;
    }

    BmReport bm = bm_obstruction_quadratic(X, *d, max_depth, precision, seed);
    V.has_bm = true;
    V.bm = bm;
    V.citations.push_back("thm-bm-sum");
    switch (bm.decision) {
        case BmDecision::obstruction_present: {
            V.conclusion = Conclusion::bm_obstruction_over_L;
            if (X.geometric_fiber_count == 4) {
                try {
                    NonsurjCase nc = classify_nonsurjective(X, *d, seed);
                    if (nc == NonsurjCase::case_i || nc == NonsurjCase::case_ii)
                        V.citations.push_back("cor-nonsurjective-cases");
                } catch (const InputError&) {
                    // classification inapplicable; the sum verdict stands alone
                }
            }
            return V;
        }
        case BmDecision::no_obstruction: {
            V.conclusion = Conclusion::hasse_principle_holds_over_L;
            if (X.geometric_fiber_count > 5) {
                V.citations.push_back("hyp-schinzel-many-fibers");
                V.conditionality = Conditionality::schinzel_conditional;
            } else {
                V.citations.push_back("thm-bmo-five-fibers");
            }
            return V;
        }
        case BmDecision::inconclusive: {
            V.conclusion = Conclusion::inconclusive;
            V.note = bm.note;
            return V;
        }
    }
    return V;
}

}  // namespace cb
