#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "latgenus/qform.hpp"
#include "test_util.hpp"

using namespace latgenus;
using namespace latgenus::testutil;

namespace {

// Independent class-number oracle: all forms of discriminant d with
// 1 <= a, c <= |d| form a finite graph under the elementary moves
// (a,b,c) -> (c,-b,a) and b -> b +- 2a; Gauss reduction keeps every such
// form inside the box, so connected components = SL2 classes.
long long orbit_count_bfs(long long d, bool primitive_only) {
    std::set<std::array<long long, 3>> verts;
    for (long long a = 1; a <= -d; a++) {
        for (long long c = 1; c <= -d; c++) {
            long long bsq = 4 * a * c + d;
            if (bsq < 0)
                continue;
            long long b = (long long)std::llround(std::sqrt((double)bsq));
            while (b * b < bsq)
                b++;
            while (b > 0 && b * b > bsq)
                b--;
            if (b * b != bsq)
                continue;
            if (primitive_only && std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            verts.insert({a, b, c});
            if (b != 0)
                verts.insert({a, -b, c});
        }
    }
    std::set<std::array<long long, 3>> seen;
    long long components = 0;
    for (const auto& v : verts) {
        if (seen.count(v))
            continue;
        components++;
        std::vector<std::array<long long, 3>> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            auto [a, b, c] = stack.back();
            stack.pop_back();
            std::array<std::array<long long, 3>, 3> nbrs = {{
                {c, -b, a},
                {a, b + 2 * a, a + b + c},
                {a, b - 2 * a, a - b + c},
            }};
            for (auto& n : nbrs) {
                if (!verts.count(n) || seen.count(n))
                    continue;
                seen.insert(n);
                stack.push_back(n);
            }
        }
    }
    return components;
}

} // namespace

TEST_CASE("discriminant of fixed forms") {
    CHECK(discriminant(BQForm(3, 2, 4)) == Int(-44));
    CHECK(discriminant(BQForm(1, 0, 11)) == Int(-44));
    CHECK(discriminant(BQForm(1, 0, 1)) == Int(-4));
}

TEST_CASE("content and primitive part") {
    auto [m, f0] = primitive_part(BQForm(15, 10, 20));
    CHECK(m == Int(5));
    CHECK(f0 == BQForm(3, 2, 4));
    CHECK(discriminant(f0) == discriminant(BQForm(15, 10, 20)) / Int(25));

    auto [m2, g0] = primitive_part(BQForm(3, 2, 4));
    CHECK(m2 == Int(1));
    CHECK(g0 == BQForm(3, 2, 4));

    auto [m3, h0] = primitive_part(BQForm(15, 0, 33));
    CHECK(m3 == Int(3));
    CHECK(h0 == BQForm(5, 0, 11));

    CHECK_THROWS_AS(content(BQForm(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("scaling") {
    CHECK(scale(BQForm(3, 2, 4), Int(2)) == BQForm(6, 4, 8));
    CHECK(scale(BQForm(1, 0, 11), Int(5)) == BQForm(5, 0, 55));
    BQForm f = random_posdef_form();
    CHECK(scale(f, Int(1)) == f);
    CHECK(discriminant(scale(f, Int(3))) == Int(9) * discriminant(f));
    CHECK_THROWS_AS(scale(f, Int(0)), std::invalid_argument);
}

TEST_CASE("matrix action") {
    BQForm f(1, 0, 11);
    CHECK(act(f, Unimodular::identity()) == f);
    CHECK(act(f, Unimodular(1, 1, 0, 1)) == BQForm(1, 2, 12));
    CHECK_THROWS_AS(act(f, Unimodular(2, 0, 0, 1)), std::invalid_argument);

    for (int i = 0; i < 100; i++) {
        BQForm g = random_posdef_form();
        Unimodular u = random_gl2();
        CHECK(discriminant(act(g, u)) == discriminant(g));
        CHECK(content(act(g, u)) == content(g));
    }
    // right action: act(act(f,g),h) = act(f, g h)
    for (int i = 0; i < 100; i++) {
        BQForm g = random_posdef_form();
        Unimodular u = random_gl2(), v = random_gl2();
        CHECK(act(act(g, u), v) == act(g, u * v));
    }
}

TEST_CASE("reduction") {
    SUBCASE("already reduced") {
        auto r = reduce(BQForm(1, 0, 11));
        CHECK(r.form == BQForm(1, 0, 11));
        CHECK(r.g == Unimodular::identity());
    }
    SUBCASE("boundary a = c forces b >= 0") {
        auto r = reduce(BQForm(4, -3, 4));
        CHECK(r.form == BQForm(4, 3, 4));
        CHECK(act(BQForm(4, -3, 4), r.g) == r.form);
        CHECK(r.g.det() == Int(1));
    }
    SUBCASE("boundary |b| = a forces b >= 0") {
        auto r = reduce(BQForm(3, -3, 5));
        CHECK(r.form == BQForm(3, 3, 5));
    }
    SUBCASE("witness and idempotence on random orbits") {
        for (int i = 0; i < 1000; i++) {
            BQForm f = random_posdef_form();
            Unimodular u = random_sl2();
            BQForm g = act(f, u);
            auto rf = reduce(f);
            auto rg = reduce(g);
            CHECK(rf.form == rg.form);
            CHECK(is_reduced(rf.form));
            CHECK(act(f, rf.g) == rf.form);
            CHECK(rf.g.det() == Int(1));
            CHECK(reduce(rf.form).form == rf.form);
        }
    }
    CHECK_THROWS_AS(reduce(BQForm(-1, 0, -1)), std::invalid_argument);
    CHECK_THROWS_AS(reduce(BQForm(1, 5, 1)), std::invalid_argument);
}

TEST_CASE("proper equivalence") {
    CHECK_FALSE(properly_equivalent(BQForm(3, 2, 4), BQForm(3, -2, 4)).has_value());
    auto w = properly_equivalent(BQForm(1, 2, 12), BQForm(1, 0, 11));
    REQUIRE(w.has_value());
    CHECK(act(BQForm(1, 2, 12), *w) == BQForm(1, 0, 11));
    CHECK(w->det() == Int(1));

    for (int i = 0; i < 200; i++) {
        BQForm f = random_posdef_form();
        Unimodular u = random_sl2();
        auto g = properly_equivalent(f, act(f, u));
        REQUIRE(g.has_value());
        CHECK(act(f, *g) == act(f, u));
        CHECK(g->det() == Int(1));
    }
}

TEST_CASE("full GL2 equivalence") {
    auto w = equivalent(BQForm(3, 2, 4), BQForm(3, -2, 4));
    REQUIRE(w.has_value());
    CHECK(w->det() == Int(-1));
    CHECK(act(BQForm(3, 2, 4), *w) == BQForm(3, -2, 4));

    CHECK_FALSE(equivalent(BQForm(3, 2, 4), BQForm(1, 0, 11)).has_value());

    BQForm f = random_posdef_form();
    auto id = equivalent(f, f);
    REQUIRE(id.has_value());
    CHECK(act(f, *id) == f);

    for (int i = 0; i < 200; i++) {
        BQForm g = random_posdef_form();
        Unimodular u = random_gl2();
        auto h = equivalent(g, act(g, u));
        REQUIRE(h.has_value());
        CHECK(act(g, *h) == act(g, u));
    }
    // properly equivalent implies equivalent
    for (int i = 0; i < 50; i++) {
        BQForm g = random_posdef_form();
        Unimodular u = random_sl2();
        CHECK(equivalent(g, act(g, u)).has_value());
    }
}

TEST_CASE("reduced form enumeration") {
    auto prim = reduced_forms(Int(-44), true);
    REQUIRE(prim.size() == 3);
    CHECK(prim[0] == BQForm(1, 0, 11));
    CHECK(prim[1] == BQForm(3, -2, 4));
    CHECK(prim[2] == BQForm(3, 2, 4));

    auto all = reduced_forms(Int(-44), false);
    REQUIRE(all.size() == 4);
    CHECK(std::find(all.begin(), all.end(), BQForm(2, 2, 6)) != all.end());

    auto d3 = reduced_forms(Int(-3), false);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == BQForm(1, 1, 1));

    CHECK_THROWS_AS(reduced_forms(Int(5), true), std::invalid_argument);
    CHECK_THROWS_AS(reduced_forms(Int(-5), true), std::invalid_argument);
}

TEST_CASE("enumeration matches BFS orbit counting up to |d| = 200") {
    for (long long d = -3; d >= -200; d--) {
        long long r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1)
            continue;
        CAPTURE(d);
        CHECK((long long)reduced_forms(Int(d), true).size() == orbit_count_bfs(d, true));
        CHECK((long long)reduced_forms(Int(d), false).size() == orbit_count_bfs(d, false));
    }
}

TEST_CASE("lattice vector norms are even") {
    for (int i = 0; i < 100; i++) {
        BQForm f = random_posdef_form();
        Int x = Int(rand_range(-10, 10)), y = Int(rand_range(-10, 10));
        // Gram (v,v) = 2 f(x,y)
        CHECK((Int(2) * f.eval(x, y)).is_even());
    }
}

TEST_CASE("coprime representation") {
    auto r1 = represent_coprime(BQForm(1, 0, 11), Int(11));
    CHECK(r1.x == Int(1));
    CHECK(r1.y == Int(0));
    CHECK(r1.value == Int(1));

    auto r2 = represent_coprime(BQForm(2, 2, 3), Int(40));
    CHECK(r2.x == Int(0));
    CHECK(r2.y == Int(1));
    CHECK(r2.value == Int(3));

    auto r3 = represent_coprime(BQForm(3, 2, 4), Int(6));
    CHECK(gcd(r3.value, Int(6)) == Int(1));
    CHECK(BQForm(3, 2, 4).eval(r3.x, r3.y) == r3.value);

    CHECK_THROWS_AS(represent_coprime(BQForm(2, 2, 6), Int(5)), std::invalid_argument);
    // exhaustion reports the bound
    CHECK_THROWS_AS(represent_coprime(BQForm(1, 0, 1), Int(2), 0), std::runtime_error);
}

TEST_CASE("form literals") {
    CHECK(parse_form("Q[3,2,4]") == BQForm(3, 2, 4));
    CHECK(parse_form("L[6,2,8]") == BQForm(3, 2, 4));
    CHECK(parse_form("L[2, 0, 22]") == BQForm(1, 0, 11));
    CHECK(parse_form("Q[4,-3,4]") == BQForm(4, -3, 4));
    CHECK(to_q_string(BQForm(3, 2, 4)) == "Q[3,2,4]");
    CHECK(to_l_string(BQForm(3, 2, 4)) == "L[6,2,8]");
    CHECK_THROWS_AS(parse_form("L[3,2,4]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("Q[3,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("nonsense"), std::invalid_argument);
}

TEST_CASE("checked integer overflow is reported") {
    Int big = Int(1);
    for (int i = 0; i < 126; i++)
        big *= Int(2);
    CHECK_THROWS_AS(big * Int(4), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK(to_string(Int(-44)) == "-44");
    CHECK(parse_int("-1100") == Int(-1100));
    CHECK(to_string(parse_int("170141183460469231731687303715884105727")) ==
          "170141183460469231731687303715884105727");
}
