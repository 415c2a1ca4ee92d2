#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cb {

using Int = mpz_class;
using Rational = mpq_class;

// Bad user input: malformed rationals, square discriminants, reducible
// polynomials where irreducible ones are required, ...
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured computation bound was hit (trial-division bound, disc-subdivision
// depth, p-adic precision). Distinguished from InputError so the CLI can map it
// to its own exit code.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr unsigned long default_trial_division_bound = 1000000;

Rational make_rational(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional leading '-'. Rejects q = 0 and garbage.
Rational parse_rational(const std::string& s);

std::string rational_to_string(const Rational& r);

int sign_of(const Rational& r);

bool is_integer(const Rational& r);

// Prime factorization by trial division up to `bound`, then perfect-power
// reduction and a probable-prime check on the cofactor. Throws LimitError when
// the cofactor cannot be resolved. n must be nonzero; the sign is dropped.
std::vector<std::pair<Int, int>> factorize(const Int& n,
                                           unsigned long bound = default_trial_division_bound);

// Distinct primes dividing numerator or denominator.
std::vector<Int> primes_of(const Rational& r,
                           unsigned long bound = default_trial_division_bound);

// The unique squarefree integer m with r = m * (rational square). Sign of m
// equals the sign of r. r must be nonzero.
Int squarefree_part(const Rational& r,
                    unsigned long bound = default_trial_division_bound);

// r in Q^{x2}. Exact: r > 0 with numerator and denominator perfect squares.
// r must be nonzero.
bool is_square_rational(const Rational& r);

// Exact square root of a rational square (r >= 0, both parts perfect squares).
Rational sqrt_rational(const Rational& r);

bool is_prime(const Int& n);

// Discriminant of a quadratic field: nonzero squarefree integer, != 1.
// Construction normalizes any nonzero non-square rational to its squarefree part.
struct QuadDisc {
    Int d;

    static QuadDisc make(const Rational& raw);
    bool operator==(const QuadDisc& o) const { return d == o.d; }
};

// Element x + y*sqrt(d) of Q(sqrt(d)).
struct QuadElem {
    Int d;
    Rational x;
    Rational y;

    QuadElem() : d(0), x(0), y(0) {}
    QuadElem(Int d_, Rational x_, Rational y_)
        : d(std::move(d_)), x(std::move(x_)), y(std::move(y_)) {}

    static QuadElem from_rational(const Int& d, const Rational& x) {
        return QuadElem(d, x, Rational(0));
    }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }

    QuadElem conj() const { return QuadElem(d, x, -y); }

    bool operator==(const QuadElem& o) const {
        return d == o.d && x == o.x && y == o.y;
    }
};

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
QuadElem operator*(const Rational& c, const QuadElem& a);
QuadElem operator/(const QuadElem& a, const QuadElem& b);

// Nm(z) = x^2 - d y^2.
Rational quad_norm(const QuadElem& z);

// z in Q(sqrt(d))^{x2}, z nonzero. For y = 0: x or x/d a rational square.
// Otherwise Nm(z) must be n^2 with n >= 0 rational and one of (x+n)/2, (x-n)/2
// a rational square.
bool quad_is_square(const QuadElem& z);

// Exact square root when quad_is_square holds.
QuadElem quad_sqrt(const QuadElem& z);

std::string quad_to_string(const QuadElem& z);

}  // namespace cb
