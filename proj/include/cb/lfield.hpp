#pragma once

#include <string>
#include <vector>

#include "cb/exact.hpp"
#include "cb/local.hpp"

namespace cb {

// A place w of the quadratic field L = Q(sqrt(d)) together with the place of Q
// it lies over.  When v splits in L there are two places; `index` selects the
// branch.  Over a finite split v, index i corresponds to the embedding sending
// sqrt(d) to (-1)^i times the canonical p-adic square root (see padic_sqrt).
// Over a real split v, index i sends sqrt(d) to (-1)^i times the positive
// real root.  Non-split places (inert, ramified, or the complex place of an
// imaginary field) have index 0.
struct PlaceOfL {
    Int d;
    Place v;
    Splitting splitting;
    int index = 0;

    bool operator==(const PlaceOfL& o) const {
        return d == o.d && v == o.v && index == o.index;
    }
    bool operator<(const PlaceOfL& o) const {
        if (!(v == o.v)) return v < o.v;
        if (d != o.d) return d < o.d;
        return index < o.index;
    }
    std::string to_string() const;
};

// The places of L above v: two when v splits, otherwise one.
std::vector<PlaceOfL> places_of_L_above(const Int& d, const Place& v);

// Valuation of nonzero z at a finite non-split w, normalized so a uniformizer
// of L_w has valuation 1.  Computed from the norm: v_p(Nm z) equals the
// valuation at a ramified place and twice it at an inert one.
long quad_val(const QuadElem& z, const PlaceOfL& w);

// Sign of z under the real embedding selected by w (requires d > 0).
int real_sign_embedding(const QuadElem& z, const PlaceOfL& w);

// Image of z in L_w = Q_p for a finite split place w.
PadicNum embed_split(const QuadElem& z, const PlaceOfL& w, int prec);

// Local invariant of the quaternion class (a, z) over the completion L_w.
// Split places evaluate the embedded rational symbol; non-split places reduce
// to the symbol (a, Nm z) over Q_p, which has the same invariant because
// corestriction preserves local invariants and carries (a, z) to (a, Nm z).
Inv hilbert_symbol_quad(const Rational& a, const QuadElem& z, const PlaceOfL& w,
                        int prec = 20);

}  // namespace cb
