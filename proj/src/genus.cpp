#include "latgenus/genus.hpp"

#include <algorithm>
#include <map>

namespace latgenus {

namespace {

int chi_minus4(Int v) { return floor_mod(v, Int(4)) == Int(1) ? 1 : -1; }

int chi_8(Int v) {
    Int r = floor_mod(v, Int(8));
    return (r == Int(1) || r == Int(7)) ? 1 : -1;
}

} // namespace

GenusInvariant assigned_characters(const BQForm& f, long long max_radius) {
    require_positive_definite(f);
    auto [m, f0] = primitive_part(f);
    Int d = discriminant(f);
    Int d0 = discriminant(f0);
    Int v = represent_coprime(f0, Int(2) * d0, max_radius).value;
    GenusInvariant inv{d, m, {}};
    for (auto& [prime, e] : factor(d0)) {
        (void)e;
        if (prime == Int(2))
            continue;
        inv.chars.push_back(jacobi(v, prime));
    }
    if (floor_mod(d0, Int(4)).is_zero()) {
        // d0 = -4n; the 2-adic characters depend on n mod 8
        Int n = (-d0) / Int(4);
        Int n8 = floor_mod(n, Int(8));
        if (n8 == Int(1) || n8 == Int(5) || n8 == Int(4))
            inv.chars.push_back(chi_minus4(v));
        else if (n8 == Int(2))
            inv.chars.push_back(chi_minus4(v) * chi_8(v));
        else if (n8 == Int(6))
            inv.chars.push_back(chi_8(v));
        else if (n8 == Int(0)) {
            inv.chars.push_back(chi_minus4(v));
            inv.chars.push_back(chi_8(v));
        }
        // n = 3, 7 (mod 8): no 2-adic character
    }
    return inv;
}

SameGenusResult same_genus(const BQForm& f1, const BQForm& f2) {
    require_positive_definite(f1);
    require_positive_definite(f2);
    if (discriminant(f1) != discriminant(f2) || content(f1) != content(f2))
        return {false, std::nullopt};
    FormClass c1(primitive_part(f1).second);
    FormClass c2(primitive_part(f2).second);
    FormClass quotient = compose(c2, inverse_class(c1));
    for (const BQForm& g : reduced_forms(c1.disc(), true)) {
        FormClass x(g);
        if (compose(x, x) == quotient)
            return {true, x};
    }
    return {false, std::nullopt};
}

std::vector<BQForm> genus_classes(const BQForm& f) {
    require_positive_definite(f);
    auto [m, f0] = primitive_part(f);
    FormClass base(f0);
    std::vector<BQForm> out;
    for (const BQForm& g : reduced_forms(base.disc(), true)) {
        FormClass x(g);
        FormClass member = compose(base, compose(x, x));
        out.push_back(m == Int(1) ? member.rep() : scale(member.rep(), m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GenusSize genus_size(const BQForm& f) {
    std::vector<BQForm> cls = genus_classes(f);
    long long gl2 = 0;
    for (const BQForm& g : cls) {
        // one orbit per {g, mirror(g)} pair; count each once
        BQForm mirror = reduce(BQForm(g.a, -g.b, g.c)).form;
        if (!(mirror < g))
            gl2++;
    }
    return {(long long)cls.size(), gl2};
}

std::vector<std::vector<FormClass>> genera_by_squares(Int d) {
    std::vector<FormClass> classes;
    for (const BQForm& f : reduced_forms(d, true))
        classes.push_back(FormClass(f));
    std::vector<FormClass> sq = squares_of(classes);
    std::vector<std::vector<FormClass>> genera;
    std::vector<bool> used(classes.size(), false);
    for (size_t i = 0; i < classes.size(); i++) {
        if (used[i])
            continue;
        std::vector<FormClass> coset;
        for (const FormClass& s : sq)
            coset.push_back(compose(classes[i], s));
        std::sort(coset.begin(), coset.end());
        coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
        for (const FormClass& x : coset) {
            auto it = std::lower_bound(classes.begin(), classes.end(), x);
            if (it == classes.end() || *it != x)
                throw std::logic_error("coset member missing from class list");
            used[it - classes.begin()] = true;
        }
        genera.push_back(coset);
    }
    return genera;
}

std::vector<std::vector<FormClass>> genera_by_characters(Int d, long long max_radius) {
    std::map<GenusInvariant, std::vector<FormClass>> fibers;
    for (const BQForm& f : reduced_forms(d, true))
        fibers[assigned_characters(f, max_radius)].push_back(FormClass(f));
    std::vector<std::vector<FormClass>> genera;
    for (auto& [inv, cls] : fibers) {
        std::sort(cls.begin(), cls.end());
        genera.push_back(cls);
    }
    std::sort(genera.begin(), genera.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return genera;
}

} // namespace latgenus
