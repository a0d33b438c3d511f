#pragma once

#include <ostream>
#include <string>

#include "latgenus/ints.hpp"

namespace latgenus {

// d < 0 and d = 0 or 1 (mod 4)
bool is_valid_discriminant(Int d);
void require_valid_discriminant(Int d);

// d = 1 mod 4 squarefree, or d = 4m with m = 2,3 mod 4 squarefree
bool is_fundamental_discriminant(Int d);

struct DiscriminantSplit {
    Int fundamental; // D_K
    Int conductor;   // f, with d = D_K f^2
};

DiscriminantSplit split_discriminant(Int d);

// Element u + v*sqrt(D_K) of the imaginary quadratic field of fundamental
// discriminant D_K, with exact rational coordinates.
class QFieldElement {
public:
    QFieldElement(Int d_k, Rational u, Rational v) : dk_(d_k), u_(u), v_(v) {}
    static QFieldElement integer(Int d_k, Int n) { return {d_k, Rational(n), Rational(0)}; }
    // omega = (D_K + sqrt(D_K)) / 2, a Z-basis vector of the maximal order.
    static QFieldElement omega(Int d_k) {
        return {d_k, Rational(d_k, Int(2)), Rational(Int(1), Int(2))};
    }

    Int field_disc() const { return dk_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    QFieldElement conj() const { return {dk_, u_, -v_}; }
    Rational norm() const { return u_ * u_ - v_ * v_ * Rational(dk_); }
    Rational trace() const { return u_ + u_; }
    Rational real() const { return u_; }

    // Coordinates (x, y) with *this = x + y*omega.
    std::pair<Rational, Rational> omega_coords() const {
        Rational y = v_ + v_;
        Rational x = u_ - Rational(dk_) * v_;
        return {x, y};
    }
    static QFieldElement from_omega_coords(Int d_k, Rational x, Rational y) {
        return {d_k, x + y * Rational(d_k, Int(2)), y * Rational(Int(1), Int(2))};
    }

    friend QFieldElement operator+(const QFieldElement& a, const QFieldElement& b) {
        a.check_same_field(b);
        return {a.dk_, a.u_ + b.u_, a.v_ + b.v_};
    }
    friend QFieldElement operator-(const QFieldElement& a, const QFieldElement& b) {
        a.check_same_field(b);
        return {a.dk_, a.u_ - b.u_, a.v_ - b.v_};
    }
    friend QFieldElement operator*(const QFieldElement& a, const QFieldElement& b) {
        a.check_same_field(b);
        return {a.dk_, a.u_ * b.u_ + a.v_ * b.v_ * Rational(a.dk_),
                a.u_ * b.v_ + a.v_ * b.u_};
    }
    friend QFieldElement operator/(const QFieldElement& a, const QFieldElement& b) {
        a.check_same_field(b);
        if (b.is_zero())
            throw std::domain_error("division by zero field element");
        Rational n = b.norm();
        QFieldElement t = a * b.conj();
        return {a.dk_, t.u_ / n, t.v_ / n};
    }
    QFieldElement operator-() const { return {dk_, -u_, -v_}; }

    friend bool operator==(const QFieldElement& a, const QFieldElement& b) {
        return a.dk_ == b.dk_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const QFieldElement& a, const QFieldElement& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const QFieldElement& x);

private:
    void check_same_field(const QFieldElement& o) const {
        if (dk_ != o.dk_)
            throw std::invalid_argument("field mismatch between elements");
    }

    Int dk_;
    Rational u_, v_;
};

std::string to_string(const QFieldElement& x);

} // namespace latgenus
