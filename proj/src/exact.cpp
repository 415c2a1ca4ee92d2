#include "cb/exact.hpp"

#include <cctype>

namespace cb {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    // mpq_set_str accepts whitespace and some exotic forms; pre-validate.
    bool seen_digit = false;
    bool seen_slash = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '-') {
            bool at_start = (i == 0) || (seen_slash && s[i - 1] == '/');
            if (!at_start) throw InputError("malformed rational: " + s);
        } else if (ch == '/') {
            if (seen_slash || !seen_digit || i + 1 == s.size())
                throw InputError("malformed rational: " + s);
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            seen_digit = true;
        } else {
            throw InputError("malformed rational: " + s);
        }
    }
    if (!seen_digit) throw InputError("malformed rational: " + s);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw InputError("malformed rational: " + s);
    if (mpq_denref(r.get_mpq_t())->_mp_size == 0)
        throw InputError("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

namespace {
// mpq_class construction from two integers does not canonicalize; normalize
// defensively before inspecting numerator/denominator.
Rational reduced(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c;
}
}  // namespace

std::string rational_to_string(const Rational& r) {
    Rational c = reduced(r);
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

int sign_of(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

bool is_integer(const Rational& r) { return reduced(r).get_den() == 1; }

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Resolves the cofactor left after trial division: every prime factor exceeds
// `bound`. Appends factors to `out`; throws LimitError when c defeats the
// perfect-power / primality checks.
void resolve_cofactor(Int c, int mult, unsigned long bound,
                      std::vector<std::pair<Int, int>>& out) {
    if (c == 1) return;
    if (is_prime(c)) {
        out.emplace_back(c, mult);
        return;
    }
    // All prime factors > bound, so a composite cofactor is >= bound^2.
    Int bound2 = Int(bound) * Int(bound);
    if (c < bound2) {  // must be prime; primality test said otherwise
        throw LimitError("factorization limit: inconsistent cofactor " + c.get_str());
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
        for (unsigned long k = 2; ; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) {
                resolve_cofactor(root, mult * static_cast<int>(k), bound, out);
                return;
            }
            Int chk;
            mpz_pow_ui(chk.get_mpz_t(), Int(2).get_mpz_t(), k + 1);
            if (chk > c) break;  // no exact root exists; defensive
        }
    }
    throw LimitError("factorization limit: unresolved cofactor " + c.get_str());
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n, unsigned long bound) {
    if (n == 0) throw InputError("factorize(0)");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    if (m == 1) return out;

    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };

    strip(2);
    strip(3);
    Int p = 5;
    // 6k +- 1 wheel; stop once p^2 > m or p > bound.
    while (p <= static_cast<long>(bound)) {
        if (p * p > m) break;
        strip(p);
        Int q = p + 2;
        if (q * q > m) { p = q; break; }
        strip(q);
        p += 6;
    }
    if (m > 1) {
        if (m < p * p) {
            out.emplace_back(m, 1);  // remaining cofactor below square of last divisor
        } else {
            resolve_cofactor(m, 1, bound, out);
        }
    }
    return out;
}

std::vector<Int> primes_of(const Rational& raw, unsigned long bound) {
    Rational r = reduced(raw);
    if (r == 0) throw InputError("primes_of(0)");
    std::vector<Int> ps;
    for (auto& [p, e] : factorize(r.get_num(), bound)) ps.push_back(p);
    for (auto& [p, e] : factorize(r.get_den(), bound)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

namespace {

// Squarefree part of |n|, same cofactor rules as factorize but a perfect-square
// cofactor resolves to 1 without needing its factorization.
Int squarefree_part_abs(Int m, unsigned long bound) {
    Int result = 1;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e & 1) result *= p;
    };
    strip(2);
    strip(3);
    Int p = 5;
    while (p <= static_cast<long>(bound)) {
        if (p * p > m) break;
        strip(p);
        Int q = p + 2;
        if (q * q > m) { p = q; break; }
        strip(q);
        p += 6;
    }
    if (m == 1) return result;
    if (m < p * p || is_prime(m)) return result * m;
    if (mpz_perfect_square_p(m.get_mpz_t())) return result;
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = 2; ; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                if (k % 2 == 0) return result;
                return result * squarefree_part_abs(root, bound);
            }
            Int chk;
            mpz_pow_ui(chk.get_mpz_t(), Int(2).get_mpz_t(), k + 1);
            if (chk > m) break;
        }
    }
    throw LimitError("factorization limit: unresolved cofactor " + m.get_str());
}

}  // namespace

Int squarefree_part(const Rational& raw, unsigned long bound) {
    Rational r = reduced(raw);
    if (r == 0) throw InputError("squarefree_part(0)");
    // r = num/den in lowest terms; num*den has the same square class.
    Int m = abs(r.get_num() * r.get_den());
    Int sf = squarefree_part_abs(m, bound);
    return sign_of(r) < 0 ? Int(-sf) : sf;
}

bool is_square_rational(const Rational& raw) {
    Rational r = reduced(raw);
    if (r == 0) throw InputError("is_square_rational(0)");
    if (sign_of(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

Rational sqrt_rational(const Rational& raw) {
    Rational r = reduced(raw);
    if (sign_of(r) < 0 || !mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(r.get_den().get_mpz_t()))
        throw InputError("sqrt_rational of a non-square");
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(n, d);
}

QuadDisc QuadDisc::make(const Rational& raw) {
    if (raw == 0) throw InputError("quadratic discriminant must be nonzero");
    Int d = squarefree_part(raw);
    if (d == 1) throw InputError("quadratic discriminant is a square");
    return QuadDisc{d};
}

namespace {
void require_same_field(const QuadElem& a, const QuadElem& b) {
    if (a.d != b.d)
        throw InputError("mixed quadratic fields: sqrt(" + a.d.get_str() +
                         ") vs sqrt(" + b.d.get_str() + ")");
}
}  // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return QuadElem(a.d, a.x + b.x, a.y + b.y);
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return QuadElem(a.d, a.x - b.x, a.y - b.y);
}

QuadElem operator-(const QuadElem& a) { return QuadElem(a.d, -a.x, -a.y); }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    Rational d(a.d);
    return QuadElem(a.d, a.x * b.x + d * a.y * b.y, a.x * b.y + a.y * b.x);
}

QuadElem operator*(const Rational& c, const QuadElem& a) {
    return QuadElem(a.d, c * a.x, c * a.y);
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw InputError("division by zero in Q(sqrt(d))");
    Rational n = quad_norm(b);
    QuadElem num = a * b.conj();
    return QuadElem(a.d, num.x / n, num.y / n);
}

Rational quad_norm(const QuadElem& z) {
    return z.x * z.x - Rational(z.d) * z.y * z.y;
}

bool quad_is_square(const QuadElem& z) {
    if (z.is_zero()) throw InputError("quad_is_square(0)");
    if (z.y == 0) {
        return is_square_rational(z.x) || is_square_rational(z.x / Rational(z.d));
    }
    Rational nm = quad_norm(z);
    if (nm == 0 || !is_square_rational(nm)) return false;
    Rational n = sqrt_rational(nm);  // n >= 0
    Rational h1 = (z.x + n) / 2;
    Rational h2 = (z.x - n) / 2;
    return (h1 != 0 && is_square_rational(h1)) || (h2 != 0 && is_square_rational(h2));
}

QuadElem quad_sqrt(const QuadElem& z) {
    if (z.is_zero()) throw InputError("quad_sqrt(0)");
    if (z.y == 0) {
        if (is_square_rational(z.x)) return QuadElem(z.d, sqrt_rational(z.x), 0);
        Rational xd = z.x / Rational(z.d);
        if (is_square_rational(xd)) return QuadElem(z.d, 0, sqrt_rational(xd));
        throw InputError("quad_sqrt of a non-square");
    }
    Rational nm = quad_norm(z);
    if (nm == 0 || !is_square_rational(nm)) throw InputError("quad_sqrt of a non-square");
    Rational n = sqrt_rational(nm);
    for (const Rational& half : {Rational((z.x + n) / 2), Rational((z.x - n) / 2)}) {
        if (half != 0 && is_square_rational(half)) {
            Rational u = sqrt_rational(half);
            Rational v = z.y / (2 * u);
            QuadElem w(z.d, u, v);
            if (w * w == z) return w;
        }
    }
    throw InputError("quad_sqrt of a non-square");
}

std::string quad_to_string(const QuadElem& z) {
    if (z.y == 0) return rational_to_string(z.x);
    std::string ys = rational_to_string(z.y);
    std::string out;
    if (z.x != 0) out += rational_to_string(z.x);
    if (sign_of(z.y) >= 0 && !out.empty()) out += "+";
    if (ys == "1") {
    } else if (ys == "-1") {
        out += "-";
    } else {
        out += ys + "*";
    }
    out += "sqrt(" + z.d.get_str() + ")";
    return out;
}

}  // namespace cb
