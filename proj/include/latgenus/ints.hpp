#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgenus {

// Fixed-width 128-bit signed integer with overflow detection.
// Every arithmetic operation that would leave the representable range
// throws std::overflow_error instead of wrapping.
class Int {
public:
    constexpr Int() : v_(0) {}
    constexpr Int(long long x) : v_(x) {}
    constexpr Int(int x) : v_(x) {}

    static constexpr Int raw(__int128 x) {
        Int r;
        r.v_ = x;
        return r;
    }
    constexpr __int128 raw() const { return v_; }

    friend Int operator+(Int a, Int b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in +");
        return raw(r);
    }
    friend Int operator-(Int a, Int b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in -");
        return raw(r);
    }
    friend Int operator*(Int a, Int b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw std::overflow_error("integer overflow in *");
        return raw(r);
    }
    Int operator-() const {
        if (v_ == min_raw())
            throw std::overflow_error("integer overflow in negation");
        return raw(-v_);
    }
    // Truncated division, C semantics.
    friend Int operator/(Int a, Int b) {
        if (b.v_ == 0)
            throw std::domain_error("division by zero");
        if (a.v_ == min_raw() && b.v_ == -1)
            throw std::overflow_error("integer overflow in /");
        return raw(a.v_ / b.v_);
    }
    friend Int operator%(Int a, Int b) {
        if (b.v_ == 0)
            throw std::domain_error("division by zero");
        if (a.v_ == min_raw() && b.v_ == -1)
            throw std::overflow_error("integer overflow in %");
        return raw(a.v_ % b.v_);
    }

    Int& operator+=(Int b) { return *this = *this + b; }
    Int& operator-=(Int b) { return *this = *this - b; }
    Int& operator*=(Int b) { return *this = *this * b; }
    Int& operator/=(Int b) { return *this = *this / b; }
    Int& operator%=(Int b) { return *this = *this % b; }

    friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Int a, Int b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Int a, Int b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Int a, Int b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Int a, Int b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Int a, Int b) { return a.v_ >= b.v_; }

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
    constexpr bool is_even() const { return (v_ & 1) == 0; }
    constexpr bool is_odd() const { return (v_ & 1) != 0; }

    Int abs() const { return v_ < 0 ? -*this : *this; }

    // Narrowing accessors; throw when the value does not fit.
    long long to_ll() const {
        if (v_ > (__int128)INT64_MAX || v_ < (__int128)INT64_MIN)
            throw std::overflow_error("value does not fit in 64 bits");
        return (long long)v_;
    }
    double to_double() const { return (double)v_; }

private:
    __int128 v_;
    static constexpr __int128 min_raw() { return -(((__int128)1) << 126) * 2; }
};

std::string to_string(Int x);
Int parse_int(const std::string& s);

// Floor division and the matching non-negative remainder.
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

Int gcd(Int a, Int b);
Int gcd(Int a, Int b, Int c);
Int lcm(Int a, Int b);
// g = gcd(a,b) = x*a + y*b
Int gcd_ext(Int a, Int b, Int& x, Int& y);

// Largest s with s*s <= n; n must be non-negative.
Int isqrt(Int n);
bool is_perfect_square(Int n);

// Kronecker/Jacobi symbol (a|n) for odd n > 0.
int jacobi(Int a, Int n);

// Trial-division factorisation, smallest prime first.
std::vector<std::pair<Int, int>> factor(Int n);
bool is_squarefree(Int n);

// Exact rational number, always stored in lowest terms with positive
// denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n, Int d);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Int(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    Int floor() const { return floor_div(num_, den_); }
    // Nearest integer, ties rounded up (floor(x + 1/2)).
    Int round_nearest() const;

    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    Int num_, den_;
};

std::string to_string(const Rational& r);

} // namespace latgenus
