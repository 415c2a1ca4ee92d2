#include "cb/lfield.hpp"

#include <algorithm>

namespace cb {

std::string PlaceOfL::to_string() const {
    std::string base = v.is_real() ? (d < 0 ? "complex" : "real") : v.to_string();
    if (splitting == Splitting::split) return base + "#" + std::to_string(index);
    return base;
}

std::vector<PlaceOfL> places_of_L_above(const Int& d, const Place& v) {
    Splitting s = splitting_type(d, v);
    if (s == Splitting::split) {
        return {PlaceOfL{d, v, s, 0}, PlaceOfL{d, v, s, 1}};
    }
    return {PlaceOfL{d, v, s, 0}};
}

long quad_val(const QuadElem& z, const PlaceOfL& w) {
    if (z.x == 0 && z.y == 0) throw InputError("valuation of zero");
    if (w.v.is_real() || w.splitting == Splitting::split)
        throw InputError("quad_val requires a finite non-split place");
    long vn = val_p(w.v.p, quad_norm(z));
    if (w.splitting == Splitting::inert) return vn / 2;  // norms of units hit even valuations
    return vn;
}

int real_sign_embedding(const QuadElem& z, const PlaceOfL& w) {
    if (z.d <= 0) throw InputError("real embedding requires d > 0");
    Rational y = w.index == 0 ? z.y : Rational(-z.y);
    if (y == 0) return sign_of(z.x);
    if (z.x == 0) return sign_of(y);
    if (sign_of(z.x) == sign_of(y)) return sign_of(z.x);
    // mixed signs: compare |x| with |y|sqrt(d) exactly
    int cmp = sign_of(Rational(z.x * z.x) - Rational(y * y) * Rational(z.d));
    return cmp == 0 ? 0 : cmp * sign_of(z.x);
}

PadicNum embed_split(const QuadElem& z, const PlaceOfL& w, int prec) {
    if (w.v.is_real() || w.splitting != Splitting::split)
        throw InputError("embed_split requires a finite split place");
    PadicNum root = padic_sqrt(padic_from_rational(w.v.p, Rational(z.d), prec));
    if (w.index == 1) root = padic_neg(root);
    PadicNum xs = padic_from_rational(w.v.p, z.x, prec);
    PadicNum ys = padic_from_rational(w.v.p, z.y, prec);
    return padic_add(xs, padic_mul(ys, root));
}

Inv hilbert_symbol_quad(const Rational& a, const QuadElem& z, const PlaceOfL& w, int prec) {
    if (a == 0) throw InputError("symbol slot is zero");
    if (z.x == 0 && z.y == 0) throw InputError("symbol slot is zero");
    if (w.v.is_real()) {
        if (w.d < 0) return Inv::zero;  // complex place: every class dies
        if (w.splitting != Splitting::split) throw InputError("inconsistent real place data");
        if (sign_of(a) > 0) return Inv::zero;
        return real_sign_embedding(z, w) < 0 ? Inv::half : Inv::zero;
    }
    if (w.splitting == Splitting::split) {
        for (int pr = std::max(prec, 4); pr <= 1280; pr *= 2) {
            try {
                return hilbert_symbol_mixed(a, embed_split(z, w, pr));
            } catch (const LimitError&) {
                // cancellation consumed the precision; retry with more
            }
        }
        throw LimitError("embedding precision exhausted at a split place");
    }
    return hilbert_symbol(a, quad_norm(z), w.v);
}

}  // namespace cb
