#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "latgenus/ints.hpp"

namespace latgenus {

// The binary quadratic form a x^2 + b x y + c y^2, identified with the
// even rank-2 lattice of Gram matrix [[2a, b], [b, 2c]].
struct BQForm {
    Int a, b, c;

    BQForm() : a(0), b(0), c(0) {}
    BQForm(Int a_, Int b_, Int c_) : a(a_), b(b_), c(c_) {}

    Int eval(Int x, Int y) const { return a * x * x + b * x * y + c * y * y; }

    friend bool operator==(const BQForm& f, const BQForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
    friend bool operator!=(const BQForm& f, const BQForm& g) { return !(f == g); }
    friend bool operator<(const BQForm& f, const BQForm& g) {
        if (f.a != g.a)
            return f.a < g.a;
        if (f.b != g.b)
            return f.b < g.b;
        return f.c < g.c;
    }

    friend std::ostream& operator<<(std::ostream& os, const BQForm& f);
};

// Q[a,b,c] format.
std::string to_q_string(const BQForm& f);
// L[2a,b,2c] format (Gram matrix entries).
std::string to_l_string(const BQForm& f);
// Accepts both Q[a,b,c] and L[2a,b,2c] literals; the L form requires even
// first and last entries.
BQForm parse_form(const std::string& text);

// 2x2 integer matrix of determinant +-1, acting on forms as Q -> g^T Q g.
struct Unimodular {
    Int m00, m01, m10, m11;

    Unimodular() : m00(1), m01(0), m10(0), m11(1) {}
    Unimodular(Int a, Int b, Int c, Int d) : m00(a), m01(b), m10(c), m11(d) {}

    static Unimodular identity() { return Unimodular(); }
    // [[1, k], [0, 1]]
    static Unimodular shear(Int k) { return Unimodular(1, k, 0, 1); }
    // [[0, -1], [1, 0]]
    static Unimodular flip() { return Unimodular(0, Int(-1), 1, 0); }
    // [[1, 0], [0, -1]], the orientation-reversing witness (a,b,c) -> (a,-b,c).
    static Unimodular reflect() { return Unimodular(1, 0, 0, Int(-1)); }

    Int det() const { return m00 * m11 - m01 * m10; }
    bool is_unimodular() const { return det().abs() == Int(1); }

    Unimodular operator*(const Unimodular& o) const {
        return Unimodular(m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                          m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11);
    }
    Unimodular inverse() const;

    friend bool operator==(const Unimodular& g, const Unimodular& h) {
        return g.m00 == h.m00 && g.m01 == h.m01 && g.m10 == h.m10 && g.m11 == h.m11;
    }
    friend std::ostream& operator<<(std::ostream& os, const Unimodular& g);
};

Int discriminant(const BQForm& f);

// a > 0 and b^2 - 4ac < 0.
bool is_positive_definite(const BQForm& f);
void require_positive_definite(const BQForm& f);

Int content(const BQForm& f);
bool is_primitive(const BQForm& f);
// (m, f/m) with m = gcd(|a|,|b|,|c|).
std::pair<Int, BQForm> primitive_part(const BQForm& f);

// Q[m a, m b, m c]; m must be positive.
BQForm scale(const BQForm& f, Int m);

// The right action f -> g^T Q g; g must have determinant +-1.
BQForm act(const BQForm& f, const Unimodular& g);

// |b| <= a <= c with b >= 0 when |b| = a or a = c.
bool is_reduced(const BQForm& f);

struct Reduction {
    BQForm form;
    Unimodular g; // act(input, g) == form, det(g) = +1
};

// Gauss reduction of a positive-definite form, with an SL2 witness.
Reduction reduce(const BQForm& f);

// SL2 equivalence; returns g with act(f1, g) == f2 when the reduced forms
// coincide.
std::optional<Unimodular> properly_equivalent(const BQForm& f1, const BQForm& f2);

// GL2 equivalence (lattice isomorphism forgetting orientation).
std::optional<Unimodular> equivalent(const BQForm& f1, const BQForm& f2);

// All reduced forms of discriminant d (< 0, = 0 or 1 mod 4), sorted
// lexicographically; primitive_only filters to gcd(a,b,c) = 1.
std::vector<BQForm> reduced_forms(Int d, bool primitive_only);

struct Representation {
    Int x, y, value;
};

// A value v = f(x, y) with gcd(v, n) = 1, for primitive positive-definite f.
// The search walks rings of increasing max(|x|,|y|); within a ring by
// (|x|, |y|), non-negative coordinate first. Throws std::runtime_error when
// the ring radius exceeds max_radius.
Representation represent_coprime(const BQForm& f, Int n, long long max_radius = 1000);

// Same search restricted to gcd(x, y) = 1 (a primitive vector), used to
// build equivalent forms with prescribed leading coefficient.
Representation represent_coprime_primitive(const BQForm& f, Int n, long long max_radius = 1000);

} // namespace latgenus
