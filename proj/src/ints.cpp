#include "latgenus/ints.hpp"

#include <algorithm>

namespace latgenus {

std::string to_string(Int x) {
    if (x.is_zero())
        return "0";
    bool neg = x.sign() < 0;
    // Peel digits from the absolute value without negating INT128_MIN.
    __int128 v = x.raw();
    std::string s;
    while (v != 0) {
        int d = (int)(v % 10);
        if (d < 0)
            d = -d;
        s.push_back(char('0' + d));
        v /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int parse_int(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        i++;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        i++;
    }
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("not an integer: '" + s + "'");
    Int r = 0;
    for (; i < s.size(); i++) {
        char ch = s[i];
        if (ch == ' ' || ch == '\t') {
            // allow trailing whitespace only
            for (size_t j = i; j < s.size(); j++)
                if (s[j] != ' ' && s[j] != '\t')
                    throw std::invalid_argument("not an integer: '" + s + "'");
            break;
        }
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("not an integer: '" + s + "'");
        r = r * Int(10) + Int(ch - '0');
    }
    return neg ? -r : r;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (!(a % b).is_zero() && ((a.sign() < 0) != (b.sign() < 0)))
        q -= Int(1);
    return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Int gcd(Int a, Int b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int gcd(Int a, Int b, Int c) { return gcd(gcd(a, b), c); }

Int lcm(Int a, Int b) {
    if (a.is_zero() || b.is_zero())
        return 0;
    return (a / gcd(a, b) * b).abs();
}

Int gcd_ext(Int a, Int b, Int& x, Int& y) {
    // Iterative extended Euclid on |a|, |b|; signs fixed afterwards.
    Int old_r = a.abs(), r = b.abs();
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (!r.is_zero()) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    x = a.sign() < 0 ? -old_s : old_s;
    y = b.sign() < 0 ? -old_t : old_t;
    return old_r;
}

Int isqrt(Int n) {
    if (n.sign() < 0)
        throw std::domain_error("isqrt of negative number");
    if (n.is_zero())
        return 0;
    // Newton iteration from a floating-point seed.
    __int128 v = n.raw();
    double approx = std::max(1.0, __builtin_sqrt((double)v));
    __int128 x = (__int128)approx;
    for (int i = 0; i < 200; i++) {
        __int128 nx = (x + v / x) / 2;
        if (nx >= x)
            break;
        x = nx;
    }
    while (x * x > v)
        x--;
    while ((x + 1) * (x + 1) <= v)
        x++;
    return Int::raw(x);
}

bool is_perfect_square(Int n) {
    if (n.sign() < 0)
        return false;
    Int s = isqrt(n);
    return s * s == n;
}

int jacobi(Int a, Int n) {
    if (n.sign() <= 0 || n.is_even())
        throw std::domain_error("jacobi symbol needs odd positive modulus");
    a = floor_mod(a, n);
    int result = 1;
    while (!a.is_zero()) {
        while (a.is_even()) {
            a = a / Int(2);
            Int r = n % Int(8);
            if (r == Int(3) || r == Int(5))
                result = -result;
        }
        std::swap(a, n);
        if (a % Int(4) == Int(3) && n % Int(4) == Int(3))
            result = -result;
        a = floor_mod(a, n);
    }
    return n == Int(1) ? result : 0;
}

std::vector<std::pair<Int, int>> factor(Int n) {
    n = n.abs();
    std::vector<std::pair<Int, int>> out;
    if (n <= Int(1))
        return out;
    auto strip = [&](Int p) {
        int e = 0;
        while ((n % p).is_zero()) {
            n /= p;
            e++;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + Int(2));
    }
    if (n > Int(1))
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(Int n) {
    for (auto& [p, e] : factor(n))
        if (e >= 2)
            return false;
    return true;
}

Rational::Rational(Int n, Int d) : num_(n), den_(d) {
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > Int(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

Int Rational::round_nearest() const {
    return (*this + Rational(1, 2)).floor();
}

std::string to_string(const Rational& r) {
    if (r.is_integer())
        return to_string(r.num());
    return to_string(r.num()) + "/" + to_string(r.den());
}

} // namespace latgenus
