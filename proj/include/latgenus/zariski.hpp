#pragma once

#include <string>
#include <vector>

#include "latgenus/genus.hpp"
#include "latgenus/grid.hpp"

namespace latgenus {

// One row of the built-in catalog: a Dynkin-type label and the two
// transcendental lattices T[C], T[C'] of a conjugate pair of maximizing
// sextics, stored as forms (the printed lattice L[2a,b,2c] is Q[a,b,c]).
struct ZariskiRow {
    int index; // 1-based
    std::string dynkin;
    BQForm t1, t2;
};

// The full catalog, 34 rows, exactly as shipped in data/zariski_table.csv.
const std::vector<ZariskiRow>& zariski_table();

// CSV with header index,dynkin,t1_2a,t1_b,t1_2c,t2_2a,t2_b,t2_2c
// (lattice notation entries).
std::string zariski_table_csv();

struct RowReport {
    int index = 0;
    std::string dynkin;
    Int d = 0;  // common discriminant
    Int m = 0;  // common content
    Int d0 = 0; // discriminant of the primitive parts
    bool disc_equal = false;
    bool content_equal = false;
    bool in_same_genus = false;
    bool gl2_distinct = false;
    bool passed() const { return disc_equal && content_equal && in_same_genus && gl2_distinct; }
    // names of the failing checks, prefixed with the row index
    std::vector<std::string> failures() const;
};

// Checks that a row is an arithmetic Zariski pair at the lattice level:
// equal discriminants and contents, same genus, GL2-inequivalent (hence the
// genus holds at least two isomorphism classes).
RowReport verify_row(const ZariskiRow& row);

// Constructive conjugation witness: the ideal data that carries the class
// of t1's lattice to t2's inside Cl_{d0}, with every claim re-checked by
// exact grid arithmetic.
struct ConjugationCertificate {
    Int m = 0;
    Int d0 = 0;
    Int conductor = 0; // f, with d0 = D_K f^2
    FormClass l0;      // class of t1 / m
    FormClass l0_prime; // class of t2 / m
    FormClass sqrt_class; // r with r^2 [L0] = [L0']
    Grid ideal_f;       // I_f, proper O_f-ideal prime to m f, [I_f] = r
    Grid ideal_mf;      // I_mf = I_f Z_K intersected with O_mf

    bool square_relation = false;   // r^2 [L0] = [L0'] in Cl_{d0}
    bool ideal_f_prime = false;     // I_f prime to m f
    bool ideal_mf_proper = false;   // I_mf proper O_mf-ideal, prime to m f
    bool contraction_identity = false; // I_mf O_f = I_f as modules
    bool product_matches = false;   // norm_form(I_mf I_f L0) ~SL2 t2 / m
    bool verified() const {
        return square_relation && ideal_f_prime && ideal_mf_proper &&
               contraction_identity && product_matches;
    }
};

// Requires same_genus(t1, t2); throws std::invalid_argument otherwise.
// max_radius bounds the representative search inside find_proper_ideal_prime_to.
ConjugationCertificate conjugation_certificate(const BQForm& t1, const BQForm& t2,
                                               long long max_radius = 1000);

struct GenusCandidate {
    Int d;
    std::vector<std::vector<BQForm>> genera; // only genera with >= 2 GL2 classes
};

// Scans the discriminant range for genera containing at least two
// isomorphism classes of lattices; max_range bounds |d_min - d_max|.
std::vector<GenusCandidate> find_candidate_pairs(Int d_min, Int d_max,
                                                 long long max_range = 1000000);

} // namespace latgenus
