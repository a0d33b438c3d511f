#include "latgenus/class_group.hpp"

#include <algorithm>
#include <map>

namespace latgenus {

FormClass::FormClass(const BQForm& f) : d_(discriminant(f)), rep_(f) {
    require_positive_definite(f);
    if (!is_primitive(f))
        throw std::invalid_argument("class of an imprimitive form: " + to_q_string(f) +
                                    "; take the primitive part first");
    rep_ = reduce(f).form;
}

FormClass principal_class(Int d) {
    require_valid_discriminant(d);
    if (floor_mod(d, Int(4)).is_zero())
        return FormClass(BQForm(1, 0, -d / Int(4)));
    return FormClass(BQForm(1, 1, (Int(1) - d) / Int(4)));
}

FormClass compose(const FormClass& x, const FormClass& y) {
    if (x.disc() != y.disc())
        throw std::invalid_argument("discriminant mismatch in composition");
    Grid gx = Grid::from_form(x.rep());
    Grid gy = Grid::from_form(y.rep());
    return FormClass(product(gx, gy).norm_form());
}

FormClass inverse_class(const FormClass& x) {
    const BQForm& f = x.rep();
    return FormClass(BQForm(f.a, -f.b, f.c));
}

FormClass power(const FormClass& x, Int n) {
    if (n.sign() < 0)
        return power(inverse_class(x), -n);
    FormClass acc = principal_class(x.disc());
    FormClass base = x;
    while (n.sign() > 0) {
        if (n.is_odd())
            acc = compose(acc, base);
        n /= Int(2);
        if (n.sign() > 0)
            base = compose(base, base);
    }
    return acc;
}

FormClass galois_act(const FormClass& m, const FormClass& l) {
    return compose(inverse_class(m), l);
}

namespace {

// Order of x given that it divides n.
Int element_order(const FormClass& x, Int n, const FormClass& unit) {
    std::vector<Int> divisors;
    for (Int t = 1; t * t <= n; t += Int(1)) {
        if (!(n % t).is_zero())
            continue;
        divisors.push_back(t);
        if (t * t != n)
            divisors.push_back(n / t);
    }
    std::sort(divisors.begin(), divisors.end());
    for (Int e : divisors)
        if (power(x, e) == unit)
            return e;
    throw std::logic_error("element order does not divide the group order");
}

// Invariant factors of an abelian group from the multiset of element
// orders: for each prime p the p-torsion counts t_j = #{x : x^(p^j) = 1}
// determine the partition of the p-part.
std::vector<Int> structure_from_orders(const std::vector<Int>& orders) {
    Int h = Int((long long)orders.size());
    if (h == Int(1))
        return {};
    std::vector<std::vector<Int>> per_prime; // prime-power columns, largest first
    for (auto& [prime, emax] : factor(h)) {
        (void)emax;
        std::vector<long long> count_dividing; // t_j for j = 0, 1, ...
        count_dividing.push_back(1);           // only the unit has order 1
        for (Int pj = prime;; pj *= prime) {
            long long t = 0;
            for (Int o : orders)
                if ((pj % o).is_zero())
                    t++;
            count_dividing.push_back(t);
            if (Int(t) == h || count_dividing[count_dividing.size() - 2] == t)
                break;
        }
        // s_j = log_p t_j; lambda has (s_j - s_{j-1}) parts of size >= j
        std::vector<long long> s;
        for (long long t : count_dividing) {
            long long e = 0;
            Int acc = 1;
            while (acc < Int(t)) {
                acc *= prime;
                e++;
            }
            if (acc != Int(t))
                throw std::logic_error("torsion count is not a prime power");
            s.push_back(e);
        }
        std::vector<Int> parts; // p^lambda_i, lambda_1 >= lambda_2 >= ...
        for (size_t j = 1; j < s.size(); j++) {
            long long parts_ge_j = s[j] - s[j - 1];
            while ((long long)parts.size() < parts_ge_j)
                parts.push_back(Int(1));
            for (long long i = 0; i < parts_ge_j; i++)
                parts[i] *= prime;
        }
        if (!parts.empty())
            per_prime.push_back(parts);
    }
    size_t width = 0;
    for (auto& parts : per_prime)
        width = std::max(width, parts.size());
    std::vector<Int> factors(width, Int(1));
    for (auto& parts : per_prime)
        for (size_t i = 0; i < parts.size(); i++)
            factors[i] *= parts[i];
    return factors;
}

} // namespace

ClassGroup class_group(Int d, bool check_closure) {
    require_valid_discriminant(d);
    ClassGroup g;
    g.d = d;
    for (const BQForm& f : reduced_forms(d, true))
        g.classes.push_back(FormClass(f));
    Int h = g.h();
    FormClass unit = principal_class(d);
    std::vector<Int> orders;
    for (const FormClass& x : g.classes)
        orders.push_back(element_order(x, h, unit));
    g.structure = structure_from_orders(orders);
    if (check_closure) {
        std::vector<BQForm> reps;
        for (const FormClass& x : g.classes)
            reps.push_back(x.rep());
        for (const FormClass& x : g.classes)
            for (const FormClass& y : g.classes) {
                BQForm p = compose(x, y).rep();
                if (!std::binary_search(reps.begin(), reps.end(), p))
                    throw std::logic_error("composition table does not close for d = " +
                                           to_string(d));
            }
    }
    return g;
}

std::vector<FormClass> squares_of(const std::vector<FormClass>& classes) {
    std::vector<FormClass> sq;
    for (const FormClass& x : classes)
        sq.push_back(compose(x, x));
    std::sort(sq.begin(), sq.end());
    sq.erase(std::unique(sq.begin(), sq.end()), sq.end());
    return sq;
}

std::vector<FormClass> squares_subgroup(const ClassGroup& g) {
    return squares_of(g.classes);
}

Grid find_proper_ideal_prime_to(const FormClass& x, Int mu, long long max_radius) {
    if (mu.is_zero())
        throw std::invalid_argument("mu must be non-zero");
    const BQForm& f = x.rep();
    if (gcd(f.a, mu) == Int(1))
        return standard_ideal(f);
    Representation rep = represent_coprime_primitive(f, mu, max_radius);
    // Complete the primitive vector (x, y) to an SL2 matrix; the translate
    // then has leading coefficient f(x, y), which is coprime to mu.
    Int u, v;
    Int g = gcd_ext(rep.x, rep.y, u, v);
    if (g != Int(1))
        throw std::logic_error("representation vector is not primitive");
    Unimodular t(rep.x, -v, rep.y, u);
    BQForm translated = act(f, t);
    return standard_ideal(translated);
}

} // namespace latgenus
