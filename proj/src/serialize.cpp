#include "latgenus/serialize.hpp"

namespace latgenus {

namespace {

// Table-scale integers fit in 64 bits; report anything larger instead of
// emitting an inexact JSON number.
long long as_number(Int x) { return x.to_ll(); }

} // namespace

json to_json(const BQForm& f) {
    return json::array({as_number(f.a), as_number(f.b), as_number(f.c)});
}

json to_json(const Unimodular& g) {
    return json::array({json::array({as_number(g.m00), as_number(g.m01)}),
                        json::array({as_number(g.m10), as_number(g.m11)})});
}

json to_json(const Grid& g) {
    json j;
    j["D_K"] = as_number(g.field_disc());
    j["den"] = as_number(g.den());
    j["basis"] = json::array({json::array({as_number(g.p()), 0}),
                              json::array({as_number(g.r()), as_number(g.s())})});
    return j;
}

json to_json(const ClassGroup& g) {
    json j;
    j["d"] = as_number(g.d);
    j["h"] = as_number(g.h());
    json st = json::array();
    for (Int e : g.structure)
        st.push_back(as_number(e));
    j["structure"] = st;
    json cls = json::array();
    for (const FormClass& x : g.classes)
        cls.push_back(to_json(x.rep()));
    j["classes"] = cls;
    return j;
}

json to_json(const RowReport& r) {
    json j;
    j["index"] = r.index;
    j["dynkin"] = r.dynkin;
    j["d"] = as_number(r.d);
    j["m"] = as_number(r.m);
    j["d0"] = as_number(r.d0);
    j["disc_equal"] = r.disc_equal;
    j["content_equal"] = r.content_equal;
    j["same_genus"] = r.in_same_genus;
    j["gl2_distinct"] = r.gl2_distinct;
    j["passed"] = r.passed();
    return j;
}

json to_json(const ConjugationCertificate& c) {
    json j;
    j["m"] = as_number(c.m);
    j["d0"] = as_number(c.d0);
    j["f"] = as_number(c.conductor);
    j["l0"] = to_json(c.l0.rep());
    j["l0_prime"] = to_json(c.l0_prime.rep());
    j["sqrt_class"] = to_json(c.sqrt_class.rep());
    j["ideal_f"] = to_json(c.ideal_f);
    j["ideal_mf"] = to_json(c.ideal_mf);
    j["square_relation"] = c.square_relation;
    j["ideal_f_prime"] = c.ideal_f_prime;
    j["ideal_mf_proper"] = c.ideal_mf_proper;
    j["contraction_identity"] = c.contraction_identity;
    j["product_matches"] = c.product_matches;
    j["verified"] = c.verified();
    return j;
}

json genus_report_json(const BQForm& f, long long max_radius) {
    json j;
    auto [m, f0] = primitive_part(f);
    j["d"] = as_number(discriminant(f));
    j["m"] = as_number(m);
    json cls = json::array();
    for (const BQForm& g : genus_classes(f))
        cls.push_back(to_json(g));
    j["genus"] = cls;
    GenusSize sz = genus_size(f);
    j["g_sl2"] = sz.sl2;
    j["g_gl2"] = sz.gl2;
    GenusInvariant inv = assigned_characters(f0, max_radius);
    j["certificate"] = inv.chars;
    return j;
}

} // namespace latgenus
