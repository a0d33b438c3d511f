#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "latgenus/field.hpp"
#include "latgenus/qform.hpp"

namespace latgenus {

struct OrderData {
    Int field_disc; // D_K
    Int conductor;  // f
    Int disc;       // d = D_K f^2
};

// Rank-2 Z-submodule of an imaginary quadratic field ("grid"), stored as a
// canonical Hermite basis over a cleared denominator:
//
//     L = Z * (p / den)  +  Z * ((r + s*omega) / den)
//
// with omega = (D_K + sqrt(D_K))/2, p > 0, s > 0, 0 <= r < p and
// gcd(p, r, s, den) = 1. Equality of grids is equality of this data.
class Grid {
public:
    // Canonicalises the span of integer rows (x + y*omega)/den; throws on
    // rank < 2.
    static Grid from_rows(Int d_k, Int den, std::vector<std::pair<Int, Int>> rows);
    static Grid from_generators(Int d_k, const std::vector<QFieldElement>& gens);
    // The order O_f = Z + Z f omega.
    static Grid order(Int d_k, Int f);
    static Grid maximal_order(Int d_k) { return order(d_k, 1); }
    // L_Q = Z + Z (-b + sqrt(d)) / (2a) for a primitive positive-definite Q.
    static Grid from_form(const BQForm& f);

    Int field_disc() const { return dk_; }
    Int den() const { return den_; }
    Int p() const { return p_; }
    Int r() const { return r_; }
    Int s() const { return s_; }

    // The stored basis vectors p/den and (r + s*omega)/den.
    QFieldElement alpha() const;
    QFieldElement beta() const;
    // Ordered basis (beta, alpha), which has Im(beta/alpha) > 0.
    std::pair<QFieldElement, QFieldElement> positive_basis() const;

    bool contains(const QFieldElement& x) const;
    bool is_submodule_of(const Grid& other) const;
    // [other : this], valid when this is a finite-index submodule of other.
    Int index_in(const Grid& other) const;

    Grid scaled(const QFieldElement& lambda) const;
    Grid scaled(const Rational& q) const;

    // Conductor f(L) of the multiplier ring O(L) = {x in K : x L <= L}.
    OrderData multiplier_ring() const;

    // lambda and tau with L = lambda (Z + Z tau) and tau in the standard
    // fundamental domain of the upper half-plane.
    std::pair<QFieldElement, QFieldElement> normalize() const;

    // Reduced representative of the form (x, y)_L on a positive basis;
    // primitive of discriminant D_K f(L)^2. Integrality of the Gram matrix
    // is asserted at runtime.
    BQForm norm_form() const;
    // Unreduced Gram coefficients on the positive basis (test hook).
    BQForm norm_form_raw() const;

    friend Grid sum(const Grid& a, const Grid& b);
    friend Grid product(const Grid& a, const Grid& b);
    friend Grid intersect(const Grid& a, const Grid& b);

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.dk_ == b.dk_ && a.den_ == b.den_ && a.p_ == b.p_ && a.r_ == b.r_ &&
               a.s_ == b.s_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Grid& g);

private:
    Grid(Int dk, Int den, Int p, Int r, Int s)
        : dk_(dk), den_(den), p_(p), r_(r), s_(s) {}

    Int dk_, den_, p_, r_, s_;
};

// The ideal Z a + Z (-b + sqrt(d))/2 of O_f representing the class of the
// primitive form Q[a,b,c]; equals a * L_Q, so [I] = [L_Q], with index
// [O_f : I] = a.
Grid standard_ideal(const BQForm& f);

// I + mu O_f == O_f, for an ideal I of the order of conductor f.
bool is_prime_to(const Grid& ideal, Int f, Int mu);

// I is contained in O_f and closed under multiplication by O_f.
bool is_ideal_of(const Grid& ideal, Int f);

// I * Z_K, a Z_K-ideal.
Grid extend(const Grid& ideal);

// J intersected with O_f.
Grid contract(const Grid& zk_ideal, Int f);

} // namespace latgenus
