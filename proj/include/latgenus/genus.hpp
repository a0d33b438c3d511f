#pragma once

#include <optional>
#include <vector>

#include "latgenus/class_group.hpp"

namespace latgenus {

// Character-vector fingerprint of a form: discriminant, content, and the
// assigned characters of the primitive part evaluated on a represented value
// coprime to 2d. Two forms lie in one genus exactly when these agree; used
// as an independent oracle against the squares-subgroup criterion.
struct GenusInvariant {
    Int d;
    Int m;
    std::vector<int> chars; // +-1 entries

    friend bool operator==(const GenusInvariant& a, const GenusInvariant& b) {
        return a.d == b.d && a.m == b.m && a.chars == b.chars;
    }
    friend bool operator!=(const GenusInvariant& a, const GenusInvariant& b) {
        return !(a == b);
    }
    friend bool operator<(const GenusInvariant& a, const GenusInvariant& b) {
        if (a.d != b.d)
            return a.d < b.d;
        if (a.m != b.m)
            return a.m < b.m;
        return a.chars < b.chars;
    }
};

GenusInvariant assigned_characters(const BQForm& f, long long max_radius = 1000);

struct SameGenusResult {
    bool same;
    // When same: a class r with r^2 = class(F2') * class(F1')^-1, the square
    // root used by the conjugation certificate.
    std::optional<FormClass> sqrt_class;
};

// Normative genus test: equal discriminant and content, and the primitive
// parts differ by a square in the class group.
SameGenusResult same_genus(const BQForm& f1, const BQForm& f2);

// All SL2-classes in the genus of F, as forms scaled back by the content.
std::vector<BQForm> genus_classes(const BQForm& f);

struct GenusSize {
    long long sl2;
    long long gl2; // orbits after (a,b,c) ~ (a,-b,c) identification
};

GenusSize genus_size(const BQForm& f);

// Partition of the primitive classes of discriminant d into genera, by the
// squares-subgroup coset criterion; each genus sorted, genera sorted by
// first element.
std::vector<std::vector<FormClass>> genera_by_squares(Int d);
// The same partition computed from the character oracle.
std::vector<std::vector<FormClass>> genera_by_characters(Int d, long long max_radius = 1000);

} // namespace latgenus
