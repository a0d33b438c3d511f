#include "latgenus/field.hpp"

namespace latgenus {

bool is_valid_discriminant(Int d) {
    if (d.sign() >= 0)
        return false;
    Int r = floor_mod(d, Int(4));
    return r == Int(0) || r == Int(1);
}

void require_valid_discriminant(Int d) {
    if (!is_valid_discriminant(d))
        throw std::invalid_argument("invalid discriminant " + to_string(d) +
                                    " (need d < 0 and d = 0,1 mod 4)");
}

bool is_fundamental_discriminant(Int d) {
    if (d.sign() >= 0)
        return false;
    Int r = floor_mod(d, Int(4));
    if (r == Int(1))
        return is_squarefree(d);
    if (r == Int(0)) {
        Int m = d / Int(4);
        Int rm = floor_mod(m, Int(4));
        return (rm == Int(2) || rm == Int(3)) && is_squarefree(m);
    }
    return false;
}

DiscriminantSplit split_discriminant(Int d) {
    require_valid_discriminant(d);
    for (Int f = isqrt(-d); f >= Int(1); f -= Int(1)) {
        if (!(d % (f * f)).is_zero())
            continue;
        Int d0 = d / (f * f);
        if (is_fundamental_discriminant(d0))
            return {d0, f};
    }
    throw std::logic_error("no fundamental discriminant found for " + to_string(d));
}

std::ostream& operator<<(std::ostream& os, const QFieldElement& x) {
    return os << to_string(x);
}

std::string to_string(const QFieldElement& x) {
    if (x.is_rational())
        return to_string(x.u());
    std::string s;
    if (!x.u().is_zero())
        s += to_string(x.u()) + (x.v().sign() > 0 ? "+" : "");
    s += to_string(x.v()) + "*sqrt(" + to_string(x.field_disc()) + ")";
    return s;
}

} // namespace latgenus
