#pragma once

#include <vector>

#include "latgenus/grid.hpp"
#include "latgenus/qform.hpp"

namespace latgenus {

// SL2-class of a primitive positive-definite form, held by its unique
// reduced representative.
class FormClass {
public:
    explicit FormClass(const BQForm& f);

    const BQForm& rep() const { return rep_; }
    Int disc() const { return d_; }

    friend bool operator==(const FormClass& x, const FormClass& y) {
        return x.rep_ == y.rep_;
    }
    friend bool operator!=(const FormClass& x, const FormClass& y) { return !(x == y); }
    friend bool operator<(const FormClass& x, const FormClass& y) {
        return x.rep_ < y.rep_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FormClass& x) {
        return os << x.rep_;
    }

private:
    Int d_;
    BQForm rep_;
};

// Class of the principal form: Q[1,0,-d/4] or Q[1,1,(1-d)/4].
FormClass principal_class(Int d);

// Group law [L][M] = [LM]: both classes are mapped to grids, the grids are
// multiplied, and the product is read back through its norm form.
FormClass compose(const FormClass& x, const FormClass& y);

// Class of (a,-b,c).
FormClass inverse_class(const FormClass& x);

// compose(x, x... n times); n may be any integer.
FormClass power(const FormClass& x, Int n);

// [M]-action [L] -> [M^-1 L] on classes of one discriminant.
FormClass galois_act(const FormClass& m, const FormClass& l);

struct ClassGroup {
    Int d;
    std::vector<FormClass> classes; // reduced_forms(d, primitive), in order
    std::vector<Int> structure;     // invariant factors, non-increasing,
                                    // each divisible by the next; empty for
                                    // the trivial group
    Int h() const { return Int((long long)classes.size()); }
};

// Enumerates Cl_d and determines its abelian group structure. When
// check_closure is set, the full composition table is verified to land in
// the enumerated class list.
ClassGroup class_group(Int d, bool check_closure = false);

// { x^2 : x in Cl_d }, deduplicated and sorted.
std::vector<FormClass> squares_subgroup(const ClassGroup& g);
std::vector<FormClass> squares_of(const std::vector<FormClass>& classes);

// An O_f-ideal I with [I] = x and I + mu O_f = O_f, built from an
// SL2-translate of the representative whose leading coefficient is coprime
// to mu.
Grid find_proper_ideal_prime_to(const FormClass& x, Int mu, long long max_radius = 1000);

} // namespace latgenus
