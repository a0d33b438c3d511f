#include <doctest.h>

#include <algorithm>

#include "latgenus/class_group.hpp"
#include "test_util.hpp"

using namespace latgenus;
using namespace latgenus::testutil;

namespace {

// Independent composition oracle (Gauss, via concordant forms): bring the
// two classes to representatives (A1, B, A2 C) and (A2, B, A1 C) with
// coprime leading coefficients and a common middle coefficient; the product
// class is then (A1 A2, B, C). Uses only form arithmetic, no grids.
BQForm gauss_compose(const BQForm& f1, const BQForm& f2) {
    Int d = discriminant(f1);
    REQUIRE(discriminant(f2) == d);
    // translate f2 so its leading coefficient is coprime to f1's
    Representation rep = represent_coprime_primitive(f2, f1.a);
    Int u, v;
    REQUIRE(gcd_ext(rep.x, rep.y, u, v) == Int(1));
    BQForm g2 = act(f2, Unimodular(rep.x, -v, rep.y, u));
    Int a1 = f1.a, b1 = f1.b;
    Int a2 = g2.a, b2 = g2.b;
    REQUIRE(gcd(a1, a2) == Int(1));
    // find B with B = b1 mod 2 a1, B = b2 mod 2 a2 (solvable: b1 = b2 = d mod 2)
    Int x, y;
    gcd_ext(a1, a2, x, y);
    // B = b1 + 2 a1 k, need 2 a1 k = b2 - b1 mod 2 a2, i.e. a1 k = (b2-b1)/2 mod a2
    Int half_diff = (b2 - b1) / Int(2);
    Int k = floor_mod(x * half_diff, a2); // x = a1^{-1} mod a2
    Int big_b = b1 + Int(2) * a1 * k;
    Int c4 = big_b * big_b - d;
    REQUIRE((c4 % (Int(4) * a1 * a2)).is_zero());
    Int c = c4 / (Int(4) * a1 * a2);
    return reduce(BQForm(a1 * a2, big_b, c)).form;
}

FormClass cls(long long a, long long b, long long c) {
    return FormClass(BQForm(Int(a), Int(b), Int(c)));
}

// Does f represent N? Exact: for each y, solve a x^2 + b x y + (c y^2 - N) = 0.
bool represents(const BQForm& f, Int n) {
    Int d = discriminant(f);
    // discriminant in x is 4 a N + d y^2, non-negative only for
    // y^2 <= 4 a N / |d|
    Int ymax = isqrt(Int(4) * f.a * n / (-d)) + Int(1);
    for (Int y = 0; y <= ymax; y += Int(1)) {
        Int dx = Int(4) * f.a * n + d * y * y;
        if (dx.sign() < 0)
            continue;
        if (!is_perfect_square(dx))
            continue;
        Int s = isqrt(dx);
        for (Int sign : {Int(1), Int(-1)}) {
            Int num = -f.b * y + sign * s;
            if ((num % (Int(2) * f.a)).is_zero())
                return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("form classes") {
    CHECK(cls(1, 2, 12).rep() == BQForm(1, 0, 11));
    CHECK_THROWS_AS(FormClass(BQForm(2, 2, 6)), std::invalid_argument);
    CHECK_THROWS_AS(FormClass(BQForm(1, 5, 1)), std::invalid_argument);
}

TEST_CASE("principal classes") {
    CHECK(principal_class(Int(-44)).rep() == BQForm(1, 0, 11));
    CHECK(principal_class(Int(-23)).rep() == BQForm(1, 1, 6));
    CHECK(principal_class(Int(-4)).rep() == BQForm(1, 0, 1));
    CHECK_THROWS_AS(principal_class(Int(-6)), std::invalid_argument);
}

TEST_CASE("composition at d = -44") {
    FormClass p = principal_class(Int(-44));
    FormClass x = cls(3, 2, 4);
    FormClass xb = cls(3, -2, 4);
    for (const BQForm& f : reduced_forms(Int(-44), true))
        CHECK(compose(p, FormClass(f)) == FormClass(f));
    CHECK(compose(x, xb) == p);
    CHECK(compose(x, x) == xb);
    CHECK_THROWS_AS(compose(p, principal_class(Int(-20))), std::invalid_argument);
}

TEST_CASE("inverses") {
    CHECK(inverse_class(cls(3, 2, 4)) == cls(3, -2, 4));
    FormClass p = principal_class(Int(-44));
    CHECK(inverse_class(p) == p);
    CHECK(inverse_class(cls(2, 0, 13)) == cls(2, 0, 13)); // two-torsion
    for (int i = 0; i < 50; i++) {
        FormClass x(random_primitive_form());
        CHECK(compose(x, inverse_class(x)) == principal_class(x.disc()));
    }
}

TEST_CASE("composition agrees with the concordant-form oracle") {
    for (long long d : {-44LL, -20LL, -23LL, -56LL, -104LL, -39LL, -47LL, -84LL, -195LL,
                        -260LL, -480LL}) {
        auto forms = reduced_forms(Int(d), true);
        for (const BQForm& f1 : forms)
            for (const BQForm& f2 : forms) {
                CAPTURE(d);
                CHECK(compose(FormClass(f1), FormClass(f2)).rep() == gauss_compose(f1, f2));
            }
    }
    for (int i = 0; i < 100; i++) {
        BQForm f = random_primitive_form();
        Int d = discriminant(f);
        auto forms = reduced_forms(d, true);
        const BQForm& g = forms[rand_range(0, (long long)forms.size() - 1)];
        CHECK(compose(FormClass(f), FormClass(g)).rep() == gauss_compose(f, g));
    }
}

TEST_CASE("composition multiplies coprime represented values") {
    for (int i = 0; i < 50; i++) {
        BQForm f = random_primitive_form();
        auto forms = reduced_forms(discriminant(f), true);
        const BQForm& g = forms[rand_range(0, (long long)forms.size() - 1)];
        Int n1 = f.eval(Int(rand_range(-4, 4)), Int(rand_range(-4, 4)));
        Int n2 = g.eval(Int(rand_range(-4, 4)), Int(rand_range(-4, 4)));
        if (n1.is_zero() || n2.is_zero() || gcd(n1, n2) != Int(1))
            continue;
        BQForm prod = compose(FormClass(f), FormClass(g)).rep();
        CHECK(represents(prod, n1 * n2));
    }
}

TEST_CASE("class group structures") {
    ClassGroup g44 = class_group(Int(-44), true);
    CHECK(g44.h() == Int(3));
    REQUIRE(g44.structure.size() == 1);
    CHECK(g44.structure[0] == Int(3));

    ClassGroup g4 = class_group(Int(-4), true);
    CHECK(g4.h() == Int(1));
    CHECK(g4.structure.empty());

    ClassGroup g20 = class_group(Int(-20), true);
    CHECK(g20.h() == Int(2));
    REQUIRE(g20.structure.size() == 1);
    CHECK(g20.structure[0] == Int(2));
    REQUIRE(g20.classes.size() == 2);
    CHECK(g20.classes[0].rep() == BQForm(1, 0, 5));
    CHECK(g20.classes[1].rep() == BQForm(2, 2, 3));

    // Klein group
    ClassGroup g84 = class_group(Int(-84), true);
    CHECK(g84.h() == Int(4));
    REQUIRE(g84.structure.size() == 2);
    CHECK(g84.structure[0] == Int(2));
    CHECK(g84.structure[1] == Int(2));

    // cyclic of order 4
    ClassGroup g39 = class_group(Int(-39), true);
    REQUIRE(g39.structure.size() == 1);
    CHECK(g39.structure[0] == Int(4));

    // product of invariant factors is h, with divisibility down the chain
    for (long long d = -3; d >= -400; d--) {
        if (!is_valid_discriminant(Int(d)))
            continue;
        ClassGroup g = class_group(Int(d));
        Int prod = 1;
        for (size_t i = 0; i < g.structure.size(); i++) {
            prod *= g.structure[i];
            if (i + 1 < g.structure.size())
                CHECK((g.structure[i] % g.structure[i + 1]).is_zero());
        }
        CHECK(prod == g.h());
    }
}

TEST_CASE("group laws sampled") {
    for (int i = 0; i < 60; i++) {
        Int d;
        do {
            d = Int(-rand_range(3, 500));
        } while (!is_valid_discriminant(d));
        auto forms = reduced_forms(d, true);
        auto pick = [&] { return FormClass(forms[rand_range(0, (long long)forms.size() - 1)]); };
        FormClass x = pick(), y = pick(), z = pick();
        CHECK(compose(x, y) == compose(y, x));
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    }
}

TEST_CASE("squares subgroup") {
    ClassGroup g44 = class_group(Int(-44));
    CHECK(squares_subgroup(g44).size() == 3); // odd order: squaring is onto

    ClassGroup g20 = class_group(Int(-20));
    auto sq20 = squares_subgroup(g20);
    REQUIRE(sq20.size() == 1);
    CHECK(sq20[0] == principal_class(Int(-20)));

    auto sq4 = squares_subgroup(class_group(Int(-4)));
    REQUIRE(sq4.size() == 1);
    CHECK(sq4[0] == principal_class(Int(-4)));
}

TEST_CASE("galois action") {
    FormClass p = principal_class(Int(-44));
    FormClass x = cls(3, 2, 4);
    CHECK(galois_act(p, x) == x);
    CHECK(galois_act(x, p) == inverse_class(x));
    // the orbit of any class under the action is the whole group
    std::vector<FormClass> orbit;
    for (const BQForm& f : reduced_forms(Int(-44), true))
        orbit.push_back(galois_act(FormClass(f), p));
    std::sort(orbit.begin(), orbit.end());
    CHECK(orbit.size() == 3);
    CHECK(std::unique(orbit.begin(), orbit.end()) == orbit.end());
}

TEST_CASE("proper ideals prime to mu") {
    Grid i = find_proper_ideal_prime_to(cls(3, 2, 4), Int(2));
    CHECK(i == standard_ideal(BQForm(3, 2, 4)));
    CHECK(is_prime_to(i, Int(2), Int(2)));

    Grid p = find_proper_ideal_prime_to(principal_class(Int(-44)), Int(7));
    CHECK(p == Grid::order(Int(-11), Int(2)));

    // d = -20: the class of Q[2,2,3] has an ideal of odd index
    Grid q = find_proper_ideal_prime_to(cls(2, 2, 3), Int(2));
    CHECK(is_prime_to(q, Int(1), Int(2)));
    CHECK(FormClass(q.norm_form()) == cls(2, 2, 3));

    // randomized: class and primality are always achieved
    for (int i2 = 0; i2 < 60; i2++) {
        FormClass x(random_primitive_form());
        Int mu = Int(rand_range(1, 40));
        auto sp = split_discriminant(x.disc());
        Grid ideal = find_proper_ideal_prime_to(x, mu);
        CHECK(is_prime_to(ideal, sp.conductor, mu));
        CHECK(ideal.multiplier_ring().conductor == sp.conductor);
        CHECK(FormClass(ideal.norm_form()) == x);
    }
}
