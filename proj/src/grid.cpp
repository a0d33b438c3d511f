#include "latgenus/grid.hpp"

#include <array>

namespace latgenus {

namespace {

Int omega_norm(Int dk) { return (dk * dk - dk) / Int(4); }

// (x1 + y1 w)(x2 + y2 w) with w^2 = D_K w - N(w).
std::pair<Int, Int> mul_coords(Int dk, Int x1, Int y1, Int x2, Int y2) {
    Int nw = omega_norm(dk);
    return {x1 * x2 - y1 * y2 * nw, x1 * y2 + y1 * x2 + y1 * y2 * dk};
}

} // namespace

Grid Grid::from_rows(Int d_k, Int den, std::vector<std::pair<Int, Int>> rows) {
    if (!is_fundamental_discriminant(d_k))
        throw std::invalid_argument("not a fundamental discriminant: " + to_string(d_k));
    if (den.sign() == 0)
        throw std::invalid_argument("zero denominator");
    if (den.sign() < 0) {
        den = -den;
        for (auto& [x, y] : rows) {
            x = -x;
            y = -y;
        }
    }
    // Combine rows into (z, s) with s = gcd of all omega-coordinates.
    Int zx = 0, zy = 0;
    for (auto& [x, y] : rows) {
        if (y.is_zero())
            continue;
        if (zy.is_zero()) {
            zx = x;
            zy = y;
            continue;
        }
        Int u, v;
        Int g = gcd_ext(zy, y, u, v);
        zx = u * zx + v * x;
        zy = g;
    }
    if (zy.is_zero())
        throw std::invalid_argument("grid basis is degenerate (rank < 2)");
    if (zy.sign() < 0) {
        zx = -zx;
        zy = -zy;
    }
    // Kill the omega-coordinate of every row; gcd of leftovers is p.
    Int p = 0;
    for (auto& [x, y] : rows) {
        Int rem = x - (y / zy) * zx;
        p = gcd(p, rem);
    }
    if (p.is_zero())
        throw std::invalid_argument("grid basis is degenerate (rank < 2)");
    Int r = floor_mod(zx, p);
    Int s = zy;
    Int g = gcd(gcd(p, r), gcd(s, den));
    return Grid(d_k, den / g, p / g, r / g, s / g);
}

Grid Grid::from_generators(Int d_k, const std::vector<QFieldElement>& gens) {
    Int den = 1;
    std::vector<std::pair<Rational, Rational>> coords;
    for (const auto& g : gens) {
        if (g.field_disc() != d_k)
            throw std::invalid_argument("field mismatch in grid generators");
        auto [x, y] = g.omega_coords();
        coords.push_back({x, y});
        den = lcm(den, lcm(x.den(), y.den()));
    }
    std::vector<std::pair<Int, Int>> rows;
    for (auto& [x, y] : coords)
        rows.push_back({x.num() * (den / x.den()), y.num() * (den / y.den())});
    return from_rows(d_k, den, rows);
}

Grid Grid::order(Int d_k, Int f) {
    if (f.sign() <= 0)
        throw std::invalid_argument("conductor must be positive");
    return from_rows(d_k, 1, {{Int(1), Int(0)}, {Int(0), f}});
}

Grid Grid::from_form(const BQForm& f) {
    require_positive_definite(f);
    if (!is_primitive(f))
        throw std::invalid_argument("grid of an imprimitive form: " + to_q_string(f));
    Int d = discriminant(f);
    DiscriminantSplit sp = split_discriminant(d);
    // tau = (-b + sqrt(d)) / (2a) = (-b - f D_K + 2 f omega) / (2a)
    Int two_a = Int(2) * f.a;
    Int x = -f.b - sp.conductor * sp.fundamental;
    Int y = Int(2) * sp.conductor;
    return from_rows(sp.fundamental, two_a, {{two_a, Int(0)}, {x, y}});
}

QFieldElement Grid::alpha() const {
    return QFieldElement(dk_, Rational(p_, den_), Rational(0));
}

QFieldElement Grid::beta() const {
    return QFieldElement::from_omega_coords(dk_, Rational(r_, den_), Rational(s_, den_));
}

std::pair<QFieldElement, QFieldElement> Grid::positive_basis() const {
    return {beta(), alpha()};
}

bool Grid::contains(const QFieldElement& x) const {
    if (x.field_disc() != dk_)
        return false;
    auto [cx, cy] = x.omega_coords();
    Rational bet = cy * Rational(den_) / Rational(s_);
    if (!bet.is_integer())
        return false;
    Rational alf = (cx * Rational(den_) - bet * Rational(r_)) / Rational(p_);
    return alf.is_integer();
}

bool Grid::is_submodule_of(const Grid& other) const {
    return other.contains(alpha()) && other.contains(beta());
}

Int Grid::index_in(const Grid& other) const {
    if (!is_submodule_of(other))
        throw std::invalid_argument("not a submodule; index undefined");
    // det of the basis matrix of L is (p s / den^2); the index is the ratio.
    Rational ratio = Rational(p_ * s_, den_ * den_) /
                     Rational(other.p_ * other.s_, other.den_ * other.den_);
    if (!ratio.is_integer())
        throw std::logic_error("non-integral index between nested grids");
    return ratio.num();
}

Grid Grid::scaled(const QFieldElement& lambda) const {
    if (lambda.is_zero())
        throw std::invalid_argument("scaling a grid by zero");
    return from_generators(dk_, {alpha() * lambda, beta() * lambda});
}

Grid Grid::scaled(const Rational& q) const {
    return scaled(QFieldElement(dk_, q, Rational(0)));
}

OrderData Grid::multiplier_ring() const {
    // O(L) = O(Z + Z tau) for tau = beta/alpha; read the conductor off the
    // primitive integral polynomial of tau.
    QFieldElement tau = beta() / alpha();
    Rational tr = tau.trace();
    Rational nm = tau.norm();
    // tau^2 - tr*tau + nm = 0; clear denominators to A x^2 + B x + C.
    Int den = lcm(tr.den(), nm.den());
    Int a = den;
    Int b = -(tr.num() * (den / tr.den()));
    Int c = nm.num() * (den / nm.den());
    Int g = gcd(a, b, c);
    a /= g;
    b /= g;
    c /= g;
    Int disc = b * b - Int(4) * a * c;
    Int fsq = disc / dk_;
    if (!(disc % dk_).is_zero() || !is_perfect_square(fsq))
        throw std::logic_error("multiplier ring computation failed");
    return {dk_, isqrt(fsq), disc};
}

std::pair<QFieldElement, QFieldElement> Grid::normalize() const {
    QFieldElement lambda = alpha();
    QFieldElement tau = beta() / alpha(); // Im(tau) > 0
    const Rational one(1), half(Int(1), Int(2));
    for (;;) {
        Int k = (tau.real() + half).floor();
        if (!k.is_zero())
            tau = tau - QFieldElement::integer(dk_, k);
        Rational n = tau.norm();
        if (n < one || (n == one && tau.real().sign() > 0)) {
            lambda = lambda * tau;
            tau = -(tau.conj() / QFieldElement(dk_, n, Rational(0)));
            continue;
        }
        return {lambda, tau};
    }
}

BQForm Grid::norm_form_raw() const {
    Int f = multiplier_ring().conductor;
    Int nb = r_ * r_ + r_ * s_ * dk_ + s_ * s_ * omega_norm(dk_); // N(r + s w)
    Rational a(f * nb, p_ * s_);
    Rational b(f * (Int(2) * r_ + s_ * dk_), s_);
    Rational c(f * p_, s_);
    if (!a.is_integer() || !b.is_integer() || !c.is_integer())
        throw std::logic_error("norm form of grid is not integral");
    return BQForm(a.num(), b.num(), c.num());
}

BQForm Grid::norm_form() const {
    BQForm raw = norm_form_raw();
    Int f = multiplier_ring().conductor;
    if (discriminant(raw) != dk_ * f * f)
        throw std::logic_error("norm form has wrong discriminant");
    if (!is_primitive(raw))
        throw std::logic_error("norm form of grid is imprimitive");
    return reduce(raw).form;
}

Grid sum(const Grid& a, const Grid& b) {
    if (a.dk_ != b.dk_)
        throw std::invalid_argument("field mismatch in grid sum");
    Int den = lcm(a.den_, b.den_);
    Int ka = den / a.den_, kb = den / b.den_;
    return Grid::from_rows(a.dk_, den,
                           {{a.p_ * ka, Int(0)},
                            {a.r_ * ka, a.s_ * ka},
                            {b.p_ * kb, Int(0)},
                            {b.r_ * kb, b.s_ * kb}});
}

Grid product(const Grid& a, const Grid& b) {
    if (a.dk_ != b.dk_)
        throw std::invalid_argument("field mismatch in grid product");
    Int den = a.den_ * b.den_;
    std::array<std::pair<Int, Int>, 2> ra{{{a.p_, Int(0)}, {a.r_, a.s_}}};
    std::array<std::pair<Int, Int>, 2> rb{{{b.p_, Int(0)}, {b.r_, b.s_}}};
    std::vector<std::pair<Int, Int>> rows;
    for (auto& [x1, y1] : ra)
        for (auto& [x2, y2] : rb)
            rows.push_back(mul_coords(a.dk_, x1, y1, x2, y2));
    return Grid::from_rows(a.dk_, den, rows);
}

Grid intersect(const Grid& a, const Grid& b) {
    if (a.dk_ != b.dk_)
        throw std::invalid_argument("field mismatch in grid intersection");
    Int den = lcm(a.den_, b.den_);
    Int ka = den / a.den_, kb = den / b.den_;
    // Kernel of the stacked 4x2 matrix [A; -B]: integer row reduction with a
    // tracked unimodular transform; zero rows of the echelon give the kernel.
    Int m[4][2] = {{a.p_ * ka, Int(0)},
                   {a.r_ * ka, a.s_ * ka},
                   {-(b.p_ * kb), Int(0)},
                   {-(b.r_ * kb), -(b.s_ * kb)}};
    Int u[4][4];
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            u[i][j] = Int(i == j ? 1 : 0);
    int pivot = 0;
    for (int col = 0; col < 2 && pivot < 4; col++) {
        for (int i = pivot + 1; i < 4; i++) {
            if (m[i][col].is_zero())
                continue;
            if (m[pivot][col].is_zero()) {
                std::swap(m[pivot], m[i]);
                std::swap(u[pivot], u[i]);
                continue;
            }
            Int x = m[pivot][col], y = m[i][col];
            Int bu, bv;
            Int g = gcd_ext(x, y, bu, bv);
            Int xs = x / g, ys = y / g;
            for (int j = 0; j < 2; j++) {
                Int np = bu * m[pivot][j] + bv * m[i][j];
                Int ni = -ys * m[pivot][j] + xs * m[i][j];
                m[pivot][j] = np;
                m[i][j] = ni;
            }
            for (int j = 0; j < 4; j++) {
                Int np = bu * u[pivot][j] + bv * u[i][j];
                Int ni = -ys * u[pivot][j] + xs * u[i][j];
                u[pivot][j] = np;
                u[i][j] = ni;
            }
        }
        if (!m[pivot][col].is_zero())
            pivot++;
    }
    std::vector<std::pair<Int, Int>> rows;
    std::pair<Int, Int> arows[2] = {{a.p_ * ka, Int(0)}, {a.r_ * ka, a.s_ * ka}};
    for (int i = 0; i < 4; i++) {
        if (!m[i][0].is_zero() || !m[i][1].is_zero())
            continue;
        Int x = u[i][0] * arows[0].first + u[i][1] * arows[1].first;
        Int y = u[i][0] * arows[0].second + u[i][1] * arows[1].second;
        rows.push_back({x, y});
    }
    return Grid::from_rows(a.dk_, den, rows);
}

std::ostream& operator<<(std::ostream& os, const Grid& g) {
    os << "Grid(D_K=" << to_string(g.field_disc()) << ", (";
    os << to_string(g.p()) << " + 0*w, " << to_string(g.r()) << " + " << to_string(g.s())
       << "*w)/" << to_string(g.den()) << ")";
    return os;
}

Grid standard_ideal(const BQForm& f) {
    require_positive_definite(f);
    if (!is_primitive(f))
        throw std::invalid_argument("standard ideal of an imprimitive form");
    Int d = discriminant(f);
    DiscriminantSplit sp = split_discriminant(d);
    // Z a + Z (-b + sqrt(d))/2, with sqrt(d) = f D_K + 2 f omega... cleared:
    // (-b + sqrt(d))/2 = (-b - f D_K)/2 + f omega
    Int x = (-f.b - sp.conductor * sp.fundamental) / Int(2);
    return Grid::from_rows(sp.fundamental, 1, {{f.a, Int(0)}, {x, sp.conductor}});
}

bool is_ideal_of(const Grid& ideal, Int f) {
    Grid ord = Grid::order(ideal.field_disc(), f);
    if (!ideal.is_submodule_of(ord))
        return false;
    QFieldElement fw = QFieldElement::omega(ideal.field_disc()) *
                       QFieldElement::integer(ideal.field_disc(), f);
    return ideal.contains(ideal.alpha() * fw) && ideal.contains(ideal.beta() * fw);
}

bool is_prime_to(const Grid& ideal, Int f, Int mu) {
    if (mu.is_zero())
        throw std::invalid_argument("mu must be non-zero");
    if (!is_ideal_of(ideal, f))
        throw std::invalid_argument("grid is not an ideal of the order of conductor " +
                                    to_string(f));
    Grid ord = Grid::order(ideal.field_disc(), f);
    return sum(ideal, ord.scaled(Rational(mu.abs()))) == ord;
}

Grid extend(const Grid& ideal) {
    return product(ideal, Grid::maximal_order(ideal.field_disc()));
}

Grid contract(const Grid& zk_ideal, Int f) {
    return intersect(zk_ideal, Grid::order(zk_ideal.field_disc(), f));
}

} // namespace latgenus
