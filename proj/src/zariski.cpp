#include "latgenus/zariski.hpp"

#include <sstream>

namespace latgenus {

namespace {

ZariskiRow row(int index, const char* dynkin, long long g1a, long long g1b, long long g1c,
               long long g2a, long long g2b, long long g2c) {
    // entries arrive in lattice notation L[2a, b, 2c]
    return {index, dynkin, BQForm(Int(g1a / 2), Int(g1b), Int(g1c / 2)),
            BQForm(Int(g2a / 2), Int(g2b), Int(g2c / 2))};
}

std::vector<ZariskiRow> build_table() {
    return {
        row(1, "E8+A10+A1", 6, 2, 8, 2, 0, 22),
        row(2, "E8+A6+A4+A1", 8, 2, 18, 2, 0, 70),
        row(3, "E6+D5+A6+A2", 12, 0, 42, 6, 0, 84),
        row(4, "E6+A10+A3", 12, 0, 22, 4, 0, 66),
        row(5, "E6+A10+A2+A1", 18, 6, 24, 6, 0, 66),
        row(6, "E6+A7+A4+A2", 24, 0, 30, 6, 0, 120),
        row(7, "E6+A6+A4+A2+A1", 30, 0, 42, 18, 6, 72),
        row(8, "D8+A10+A1", 6, 2, 8, 2, 0, 22),
        row(9, "D8+A6+A4+A1", 8, 2, 18, 2, 0, 70),
        row(10, "D7+A12", 6, 2, 18, 2, 0, 52),
        row(11, "D7+A8+A4", 18, 0, 20, 2, 0, 180),
        row(12, "D5+A10+A4", 20, 0, 22, 12, 4, 38),
        row(13, "D5+A6+A5+A2+A1", 12, 0, 42, 6, 0, 84),
        row(14, "D5+A6+2A4", 20, 0, 70, 10, 0, 140),
        row(15, "A18+A1", 8, 2, 10, 2, 0, 38),
        row(16, "A16+A3", 4, 0, 34, 2, 0, 68),
        row(17, "A16+A2+A1", 10, 4, 22, 6, 0, 34),
        row(18, "A13+A4+2A1", 8, 2, 18, 2, 0, 70),
        row(19, "A12+A6+A1", 8, 2, 46, 2, 0, 182),
        row(20, "A12+A5+2A1", 12, 6, 16, 4, 2, 40),
        row(21, "A12+A4+A2+A1", 24, 6, 34, 6, 0, 130),
        row(22, "A10+A9", 10, 0, 22, 2, 0, 110),
        row(23, "A10+A9", 8, 3, 8, 2, 1, 28),
        row(24, "A10+A8+A1", 18, 0, 22, 10, 2, 40),
        row(25, "A10+A7+A2", 22, 0, 24, 6, 0, 88),
        row(26, "A10+A7+2A1", 10, 2, 18, 2, 0, 88),
        row(27, "A10+A6+A2+A1", 22, 0, 42, 16, 2, 58),
        row(28, "A10+A5+A3+A1", 12, 0, 22, 4, 0, 66),
        row(29, "A10+2A4+A1", 30, 10, 40, 10, 0, 110),
        row(30, "A10+A4+2A2+A1", 30, 0, 66, 6, 0, 330),
        row(31, "A8+A6+A4+A1", 22, 4, 58, 18, 0, 70),
        row(32, "A7+A6+A4+A2", 24, 0, 70, 6, 0, 280),
        row(33, "A7+A6+A4+2A1", 18, 4, 32, 2, 0, 280),
        row(34, "A7+A5+A4+A2+A1", 24, 0, 30, 6, 0, 120),
    };
}

} // namespace

const std::vector<ZariskiRow>& zariski_table() {
    static const std::vector<ZariskiRow> table = build_table();
    return table;
}

std::string zariski_table_csv() {
    std::ostringstream os;
    os << "index,dynkin,t1_2a,t1_b,t1_2c,t2_2a,t2_b,t2_2c\n";
    for (const ZariskiRow& r : zariski_table()) {
        os << r.index << "," << r.dynkin << "," << to_string(r.t1.a * Int(2)) << ","
           << to_string(r.t1.b) << "," << to_string(r.t1.c * Int(2)) << ","
           << to_string(r.t2.a * Int(2)) << "," << to_string(r.t2.b) << ","
           << to_string(r.t2.c * Int(2)) << "\n";
    }
    return os.str();
}

std::vector<std::string> RowReport::failures() const {
    std::vector<std::string> out;
    std::string prefix = "row " + std::to_string(index) + " (" + dynkin + "): ";
    if (!disc_equal)
        out.push_back(prefix + "discriminants differ");
    if (!content_equal)
        out.push_back(prefix + "contents differ");
    if (!in_same_genus)
        out.push_back(prefix + "lattices are not in the same genus");
    if (!gl2_distinct)
        out.push_back(prefix + "lattices are GL2-equivalent");
    return out;
}

RowReport verify_row(const ZariskiRow& r) {
    RowReport rep;
    rep.index = r.index;
    rep.dynkin = r.dynkin;
    rep.d = discriminant(r.t1);
    rep.disc_equal = discriminant(r.t1) == discriminant(r.t2);
    rep.m = content(r.t1);
    rep.content_equal = content(r.t1) == content(r.t2);
    rep.d0 = rep.d / (rep.m * rep.m);
    if (rep.disc_equal && rep.content_equal)
        rep.in_same_genus = same_genus(r.t1, r.t2).same;
    rep.gl2_distinct = !equivalent(r.t1, r.t2).has_value();
    return rep;
}

ConjugationCertificate conjugation_certificate(const BQForm& t1, const BQForm& t2,
                                               long long max_radius) {
    SameGenusResult sg = same_genus(t1, t2);
    if (!sg.same)
        throw std::invalid_argument("forms " + to_q_string(t1) + " and " + to_q_string(t2) +
                                    " are not in the same genus");
    auto [m, f1] = primitive_part(t1);
    BQForm f2 = primitive_part(t2).second;
    Int d0 = discriminant(f1);
    DiscriminantSplit sp = split_discriminant(d0);
    Int f = sp.conductor;
    Int mf = m * f;

    ConjugationCertificate cert{
        m, d0, f, FormClass(f1), FormClass(f2), *sg.sqrt_class,
        find_proper_ideal_prime_to(*sg.sqrt_class, mf, max_radius),
        Grid::maximal_order(sp.fundamental) /* placeholder, set below */};

    // (i) the square relation in Cl_{d0}
    cert.square_relation =
        compose(compose(cert.sqrt_class, cert.sqrt_class), cert.l0) == cert.l0_prime;

    // (ii) I_f is a proper O_f-ideal prime to m f representing the root
    cert.ideal_f_prime = is_prime_to(cert.ideal_f, f, mf) &&
                         cert.ideal_f.multiplier_ring().conductor == f &&
                         FormClass(cert.ideal_f.norm_form()) == cert.sqrt_class;

    // (iii) extend to Z_K and contract to O_mf
    Grid j = extend(cert.ideal_f);
    cert.ideal_mf = contract(j, mf);
    cert.ideal_mf_proper = is_prime_to(cert.ideal_mf, mf, mf) &&
                           cert.ideal_mf.multiplier_ring().conductor == mf;

    // (iv) I_mf O_f = I_f, exact module equality
    cert.contraction_identity =
        product(cert.ideal_mf, Grid::order(sp.fundamental, f)) == cert.ideal_f;

    // (v) replay the product: [I_mf I_f L0] must be the class of t2 / m
    Grid l0 = Grid::from_form(f1);
    Grid carried = product(product(cert.ideal_mf, cert.ideal_f), l0);
    cert.product_matches = FormClass(carried.norm_form()) == cert.l0_prime;

    return cert;
}

std::vector<GenusCandidate> find_candidate_pairs(Int d_min, Int d_max, long long max_range) {
    if (d_min > d_max || d_max.sign() >= 0)
        throw std::invalid_argument("need d_min <= d_max < 0");
    if (d_max - d_min > Int(max_range))
        throw std::invalid_argument("discriminant range exceeds the configured budget of " +
                                    std::to_string(max_range));
    std::vector<GenusCandidate> out;
    for (Int d = d_max; d >= d_min; d -= Int(1)) {
        if (!is_valid_discriminant(d))
            continue;
        GenusCandidate cand{d, {}};
        for (const auto& genus : genera_by_squares(d)) {
            long long gl2 = 0;
            std::vector<BQForm> forms;
            for (const FormClass& x : genus) {
                forms.push_back(x.rep());
                BQForm mirror = reduce(BQForm(x.rep().a, -x.rep().b, x.rep().c)).form;
                if (!(mirror < x.rep()))
                    gl2++;
            }
            if (gl2 >= 2)
                cand.genera.push_back(forms);
        }
        if (!cand.genera.empty())
            out.push_back(cand);
    }
    return out;
}

} // namespace latgenus
