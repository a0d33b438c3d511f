#include "latgenus/qform.hpp"

#include <algorithm>

namespace latgenus {

std::ostream& operator<<(std::ostream& os, const BQForm& f) {
    return os << to_q_string(f);
}

std::string to_q_string(const BQForm& f) {
    return "Q[" + to_string(f.a) + "," + to_string(f.b) + "," + to_string(f.c) + "]";
}

std::string to_l_string(const BQForm& f) {
    return "L[" + to_string(f.a * Int(2)) + "," + to_string(f.b) + "," +
           to_string(f.c * Int(2)) + "]";
}

BQForm parse_form(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t')
            s.push_back(ch);
    if (s.size() < 7 || (s[0] != 'Q' && s[0] != 'L') || s[1] != '[' || s.back() != ']')
        throw std::invalid_argument("malformed form literal: '" + text + "'");
    std::string body = s.substr(2, s.size() - 3);
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); i++) {
        if (i == body.size() || body[i] == ',') {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3)
        throw std::invalid_argument("malformed form literal: '" + text + "'");
    Int x = parse_int(parts[0]), y = parse_int(parts[1]), z = parse_int(parts[2]);
    if (s[0] == 'Q')
        return BQForm(x, y, z);
    if (x.is_odd() || z.is_odd())
        throw std::invalid_argument("L[...] literal needs even first and last entries: '" +
                                    text + "'");
    return BQForm(x / Int(2), y, z / Int(2));
}

Unimodular Unimodular::inverse() const {
    Int d = det();
    if (d.abs() != Int(1))
        throw std::invalid_argument("matrix is not unimodular");
    Unimodular adj(m11, -m01, -m10, m00);
    if (d == Int(1))
        return adj;
    return Unimodular(-adj.m00, -adj.m01, -adj.m10, -adj.m11);
}

std::ostream& operator<<(std::ostream& os, const Unimodular& g) {
    return os << "[[" << to_string(g.m00) << "," << to_string(g.m01) << "],["
              << to_string(g.m10) << "," << to_string(g.m11) << "]]";
}

Int discriminant(const BQForm& f) { return f.b * f.b - Int(4) * f.a * f.c; }

bool is_positive_definite(const BQForm& f) {
    return f.a.sign() > 0 && discriminant(f).sign() < 0;
}

void require_positive_definite(const BQForm& f) {
    if (!is_positive_definite(f))
        throw std::invalid_argument("form " + to_q_string(f) + " is not positive definite");
}

Int content(const BQForm& f) {
    Int g = gcd(f.a, f.b, f.c);
    if (g.is_zero())
        throw std::invalid_argument("content of the zero form");
    return g;
}

bool is_primitive(const BQForm& f) { return content(f) == Int(1); }

std::pair<Int, BQForm> primitive_part(const BQForm& f) {
    Int m = content(f);
    return {m, BQForm(f.a / m, f.b / m, f.c / m)};
}

BQForm scale(const BQForm& f, Int m) {
    if (m.sign() <= 0)
        throw std::invalid_argument("scale factor must be positive");
    return BQForm(f.a * m, f.b * m, f.c * m);
}

BQForm act(const BQForm& f, const Unimodular& g) {
    if (!g.is_unimodular())
        throw std::invalid_argument("matrix is not unimodular");
    Int a2 = f.eval(g.m00, g.m10);
    Int c2 = f.eval(g.m01, g.m11);
    Int b2 = Int(2) * f.a * g.m00 * g.m01 + f.b * (g.m00 * g.m11 + g.m01 * g.m10) +
             Int(2) * f.c * g.m10 * g.m11;
    return BQForm(a2, b2, c2);
}

bool is_reduced(const BQForm& f) {
    if (!is_positive_definite(f))
        return false;
    Int ab = f.b.abs();
    if (!(ab <= f.a && f.a <= f.c))
        return false;
    if ((ab == f.a || f.a == f.c) && f.b.sign() < 0)
        return false;
    return true;
}

namespace {

// Translate b into (-a, a], accumulating the witness.
void normalize_step(BQForm& f, Unimodular& g) {
    Int k = floor_div(f.a - f.b, Int(2) * f.a);
    if (!k.is_zero()) {
        Unimodular t = Unimodular::shear(k);
        f = act(f, t);
        g = g * t;
    }
}

} // namespace

Reduction reduce(const BQForm& f) {
    require_positive_definite(f);
    Reduction r{f, Unimodular::identity()};
    normalize_step(r.form, r.g);
    while (r.form.a > r.form.c) {
        Unimodular s = Unimodular::flip();
        r.form = act(r.form, s);
        r.g = r.g * s;
        normalize_step(r.form, r.g);
    }
    if (r.form.a == r.form.c && r.form.b.sign() < 0) {
        Unimodular s = Unimodular::flip();
        r.form = act(r.form, s);
        r.g = r.g * s;
    }
    return r;
}

std::optional<Unimodular> properly_equivalent(const BQForm& f1, const BQForm& f2) {
    require_positive_definite(f1);
    require_positive_definite(f2);
    Reduction r1 = reduce(f1), r2 = reduce(f2);
    if (r1.form != r2.form)
        return std::nullopt;
    return r1.g * r2.g.inverse();
}

std::optional<Unimodular> equivalent(const BQForm& f1, const BQForm& f2) {
    if (auto g = properly_equivalent(f1, f2))
        return g;
    // Try the mirror image of f2: (a,-b,c) = act(f2, diag(1,-1)).
    Unimodular j = Unimodular::reflect();
    Reduction r1 = reduce(f1);
    Reduction r2 = reduce(act(f2, j));
    if (r1.form != r2.form)
        return std::nullopt;
    return r1.g * r2.g.inverse() * j;
}

std::vector<BQForm> reduced_forms(Int d, bool primitive_only) {
    if (d.sign() >= 0)
        throw std::invalid_argument("discriminant must be negative");
    Int r4 = floor_mod(d, Int(4));
    if (r4 != Int(0) && r4 != Int(1))
        throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    std::vector<BQForm> out;
    // |b| <= sqrt(|d|/3), b = d (mod 2)
    Int bmax = isqrt((-d) / Int(3));
    for (Int b = floor_mod(d, Int(2)); b <= bmax; b += Int(2)) {
        Int m4 = b * b - d; // = 4ac
        if (!(m4 % Int(4)).is_zero())
            continue;
        Int m = m4 / Int(4);
        for (Int a = std::max(b, Int(1)); a * a <= m; a += Int(1)) {
            if (!(m % a).is_zero())
                continue;
            Int c = m / a;
            BQForm f(a, b, c);
            if (primitive_only && !is_primitive(f))
                continue;
            out.push_back(f);
            // The mirror (a,-b,c) is reduced exactly off the boundary.
            if (b.sign() > 0 && b < a && a < c)
                out.push_back(BQForm(a, -b, c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Representation search_representation(const BQForm& f, Int n, long long max_radius,
                                     bool primitive_vector) {
    if (!is_positive_definite(f) || !is_primitive(f))
        throw std::invalid_argument("represent_coprime needs a primitive positive-definite form");
    if (n.is_zero())
        throw std::invalid_argument("modulus must be non-zero");
    for (long long r = 0; r <= max_radius; r++) {
        // within the ring max(|x|,|y|) = r: (|x|, |y|) ascending, and for each
        // pair of magnitudes the non-negative sign first
        for (long long ax = 0; ax <= r; ax++) {
            long long ay_lo = (ax == r) ? 0 : r;
            for (long long ay = ay_lo; ay <= r; ay++) {
                for (int sx = 0; sx < (ax == 0 ? 1 : 2); sx++) {
                    for (int sy = 0; sy < (ay == 0 ? 1 : 2); sy++) {
                        Int x = Int(sx == 0 ? ax : -ax);
                        Int y = Int(sy == 0 ? ay : -ay);
                        if (x.is_zero() && y.is_zero())
                            continue;
                        if (primitive_vector && gcd(x, y) != Int(1))
                            continue;
                        Int v = f.eval(x, y);
                        if (gcd(v, n) == Int(1))
                            return {x, y, v};
                    }
                }
            }
        }
    }
    throw std::runtime_error("no represented value coprime to " + to_string(n) +
                             " within search radius " + std::to_string(max_radius));
}

} // namespace

Representation represent_coprime(const BQForm& f, Int n, long long max_radius) {
    return search_representation(f, n, max_radius, false);
}

Representation represent_coprime_primitive(const BQForm& f, Int n, long long max_radius) {
    return search_representation(f, n, max_radius, true);
}

} // namespace latgenus
