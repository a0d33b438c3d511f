// latgenus: exact arithmetic for even rank-2 lattices / binary quadratic
// forms: reduction, class groups, genus tests, and conjugation certificates
// for the built-in catalog of lattice pairs.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latgenus/jfunc.hpp"
#include "latgenus/serialize.hpp"

using namespace latgenus;

namespace {

long long search_bound() {
    if (const char* env = std::getenv("GENUS_SEARCH_BOUND")) {
        try {
            long long b = std::stoll(env);
            if (b > 0)
                return std::min(b, 1000000000LL);
        } catch (...) {
        }
        throw CLI::ValidationError("GENUS_SEARCH_BOUND must be a positive integer");
    }
    return 1000;
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string witness_text(const Unimodular& g) {
    return "[[" + to_string(g.m00) + "," + to_string(g.m01) + "],[" + to_string(g.m10) +
           "," + to_string(g.m11) + "]]";
}

int run(int argc, char** argv) {
    CLI::App app{"exact lattice genus arithmetic for even rank-2 lattices"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string form_a, form_b, d_str, d_min_str, d_max_str;
    int exit_code = 0;

    auto* cmd_reduce = app.add_subcommand("reduce", "Gauss-reduce a form, with SL2 witness");
    cmd_reduce->add_option("form", form_a, "form literal Q[a,b,c] or L[2a,b,2c]")->required();
    cmd_reduce->callback([&] {
        Reduction r = reduce(parse_form(form_a));
        json j;
        j["reduced"] = to_json(r.form);
        j["witness"] = to_json(r.g);
        emit(as_json, j, to_q_string(r.form) + "\nwitness: " + witness_text(r.g));
    });

    auto* cmd_disc = app.add_subcommand("disc", "discriminant b^2 - 4ac");
    cmd_disc->add_option("form", form_a)->required();
    cmd_disc->callback([&] {
        Int d = discriminant(parse_form(form_a));
        json j;
        j["d"] = d.to_ll();
        emit(as_json, j, to_string(d));
    });

    auto* cmd_equiv = app.add_subcommand("equiv", "equivalence test with witness");
    bool proper = false, full = false;
    cmd_equiv->add_flag("--proper", proper, "SL2 (oriented) equivalence");
    cmd_equiv->add_flag("--full", full, "GL2 equivalence (default)");
    cmd_equiv->add_option("form1", form_a)->required();
    cmd_equiv->add_option("form2", form_b)->required();
    cmd_equiv->callback([&] {
        BQForm f1 = parse_form(form_a), f2 = parse_form(form_b);
        auto w = proper ? properly_equivalent(f1, f2) : equivalent(f1, f2);
        json j;
        j["equivalent"] = w.has_value();
        if (w)
            j["witness"] = to_json(*w);
        emit(as_json, j,
             w ? ("equivalent: true\nwitness: " + witness_text(*w)) : "equivalent: false");
        if (!w)
            exit_code = 1;
    });

    auto* cmd_cg = app.add_subcommand("classgroup", "class group of a discriminant");
    cmd_cg->add_option("d", d_str, "negative discriminant")->required();
    cmd_cg->callback([&] {
        ClassGroup g = class_group(parse_int(d_str));
        json j = to_json(g);
        std::string text = "d = " + to_string(g.d) + "\nh = " + to_string(g.h());
        text += "\nstructure:";
        if (g.structure.empty())
            text += " trivial";
        for (Int e : g.structure)
            text += " Z/" + to_string(e);
        text += "\nclasses:";
        for (const FormClass& x : g.classes)
            text += " " + to_q_string(x.rep());
        emit(as_json, j, text);
    });

    auto* cmd_comp = app.add_subcommand("compose", "compose two classes of one discriminant");
    cmd_comp->add_option("d", d_str)->required();
    cmd_comp->add_option("form1", form_a)->required();
    cmd_comp->add_option("form2", form_b)->required();
    cmd_comp->callback([&] {
        Int d = parse_int(d_str);
        FormClass x(parse_form(form_a));
        FormClass y(parse_form(form_b));
        if (x.disc() != d || y.disc() != d)
            throw CLI::ValidationError("forms do not have discriminant " + d_str);
        FormClass z = compose(x, y);
        json j;
        j["result"] = to_json(z.rep());
        emit(as_json, j, to_q_string(z.rep()));
    });

    auto* cmd_genus = app.add_subcommand("genus", "same-genus test for two forms");
    cmd_genus->add_option("form1", form_a)->required();
    cmd_genus->add_option("form2", form_b)->required();
    cmd_genus->callback([&] {
        SameGenusResult r = same_genus(parse_form(form_a), parse_form(form_b));
        json j;
        j["same_genus"] = r.same;
        if (r.sqrt_class)
            j["sqrt_class"] = to_json(r.sqrt_class->rep());
        emit(as_json, j, std::string("same genus: ") + (r.same ? "true" : "false"));
        if (!r.same)
            exit_code = 1;
    });

    auto* cmd_glist = app.add_subcommand("genus-list", "all classes in the genus of a form");
    cmd_glist->add_option("form", form_a)->required();
    cmd_glist->callback([&] {
        BQForm f = parse_form(form_a);
        json j = genus_report_json(f, search_bound());
        std::string text;
        for (const BQForm& g : genus_classes(f))
            text += (text.empty() ? "" : " ") + to_q_string(g);
        emit(as_json, j, text);
    });

    auto* cmd_gcount = app.add_subcommand("gcount", "genus sizes (SL2 and GL2 counts)");
    cmd_gcount->add_option("form", form_a)->required();
    cmd_gcount->callback([&] {
        GenusSize s = genus_size(parse_form(form_a));
        json j;
        j["g_sl2"] = s.sl2;
        j["g_gl2"] = s.gl2;
        emit(as_json, j,
             "g_sl2 = " + std::to_string(s.sl2) + "\ng_gl2 = " + std::to_string(s.gl2));
    });

    auto* cmd_grid = app.add_subcommand("grid", "grid arithmetic");
    cmd_grid->require_subcommand(1);
    auto* cmd_gf = cmd_grid->add_subcommand("from-form", "grid Z + Z(-b+sqrt(d))/(2a)");
    cmd_gf->add_option("form", form_a)->required();
    cmd_gf->callback([&] {
        Grid g = Grid::from_form(parse_form(form_a));
        OrderData o = g.multiplier_ring();
        json j = to_json(g);
        j["f"] = o.conductor.to_ll();
        j["d"] = o.disc.to_ll();
        std::ostringstream os;
        os << g << "\nconductor f = " << to_string(o.conductor) << ", d = "
           << to_string(o.disc);
        emit(as_json, j, os.str());
    });
    auto* cmd_gp = cmd_grid->add_subcommand("product", "product of the grids of two forms");
    cmd_gp->add_option("form1", form_a)->required();
    cmd_gp->add_option("form2", form_b)->required();
    cmd_gp->callback([&] {
        Grid a = Grid::from_form(parse_form(form_a));
        Grid b = Grid::from_form(parse_form(form_b));
        Grid p = product(a, b);
        json j = to_json(p);
        j["f"] = p.multiplier_ring().conductor.to_ll();
        j["norm_form"] = to_json(p.norm_form());
        std::ostringstream os;
        os << p << "\nconductor f = " << to_string(p.multiplier_ring().conductor)
           << "\nnorm form: " << to_q_string(p.norm_form());
        emit(as_json, j, os.str());
    });

    auto* cmd_conj = app.add_subcommand(
        "conjugate", "conjugation certificate carrying one lattice class to the other");
    cmd_conj->add_option("form1", form_a)->required();
    cmd_conj->add_option("form2", form_b)->required();
    cmd_conj->callback([&] {
        ConjugationCertificate c = conjugation_certificate(parse_form(form_a),
                                                           parse_form(form_b), search_bound());
        json j = to_json(c);
        std::ostringstream os;
        os << "m = " << to_string(c.m) << ", d0 = " << to_string(c.d0)
           << ", f = " << to_string(c.conductor);
        os << "\nsqrt class: " << to_q_string(c.sqrt_class.rep());
        os << "\nideal I_f: " << c.ideal_f << "\nideal I_mf: " << c.ideal_mf;
        os << "\nchecks: square_relation=" << (c.square_relation ? "ok" : "FAIL")
           << " ideal_f_prime=" << (c.ideal_f_prime ? "ok" : "FAIL")
           << " ideal_mf_proper=" << (c.ideal_mf_proper ? "ok" : "FAIL")
           << " contraction_identity=" << (c.contraction_identity ? "ok" : "FAIL")
           << " product_matches=" << (c.product_matches ? "ok" : "FAIL");
        os << "\nverified: " << (c.verified() ? "true" : "false");
        emit(as_json, j, os.str());
        if (!c.verified())
            exit_code = 1;
    });

    auto* cmd_table = app.add_subcommand("table", "built-in catalog of lattice pairs");
    cmd_table->require_subcommand(1);
    auto* cmd_tv = cmd_table->add_subcommand("verify", "verify catalog rows");
    int row_index = 0;
    cmd_tv->add_option("--row", row_index, "verify a single 1-based row");
    cmd_tv->callback([&] {
        const auto& table = zariski_table();
        if (row_index < 0 || row_index > (int)table.size())
            throw CLI::ValidationError("--row must be between 1 and 34");
        json rows = json::array();
        int passed = 0, total = 0;
        std::string text;
        for (const ZariskiRow& r : table) {
            if (row_index != 0 && r.index != row_index)
                continue;
            total++;
            RowReport rep = verify_row(r);
            rows.push_back(to_json(rep));
            if (rep.passed()) {
                passed++;
            } else {
                for (const std::string& fail : rep.failures())
                    text += fail + "\n";
            }
        }
        text += std::to_string(passed) + "/" + std::to_string(total) + " rows verified";
        json j;
        j["rows"] = rows;
        j["passed"] = passed;
        j["total"] = total;
        emit(as_json, j, text);
        if (passed != total)
            exit_code = 1;
    });
    auto* cmd_te = cmd_table->add_subcommand("export", "export the catalog");
    bool as_csv = false;
    cmd_te->add_flag("--csv", as_csv, "CSV with lattice-notation columns");
    cmd_te->callback([&] {
        if (as_csv || !as_json) {
            std::cout << zariski_table_csv();
            return;
        }
        json rows = json::array();
        for (const ZariskiRow& r : zariski_table()) {
            json row;
            row["index"] = r.index;
            row["dynkin"] = r.dynkin;
            row["t1"] = to_json(r.t1);
            row["t2"] = to_json(r.t2);
            rows.push_back(row);
        }
        std::cout << rows.dump() << "\n";
    });

    auto* cmd_j = app.add_subcommand("jinv", "numeric j-invariant of the form's lattice");
    int j_terms = 40;
    cmd_j->add_option("form", form_a)->required();
    cmd_j->add_option("--terms", j_terms, "series terms (2..255)");
    cmd_j->callback([&] {
        std::complex<double> v = j_invariant(Grid::from_form(parse_form(form_a)), j_terms);
        json j;
        j["re"] = v.real();
        j["im"] = v.imag();
        std::ostringstream os;
        os.precision(15);
        os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
        emit(as_json, j, os.str());
    });

    auto* cmd_search = app.add_subcommand(
        "search", "scan discriminants for genera with >= 2 lattice classes");
    cmd_search->add_option("d_min", d_min_str)->required();
    cmd_search->add_option("d_max", d_max_str)->required();
    cmd_search->callback([&] {
        long long budget = search_bound() * 1000; // range budget
        auto found = find_candidate_pairs(parse_int(d_min_str), parse_int(d_max_str), budget);
        json arr = json::array();
        std::string text;
        for (const GenusCandidate& cand : found) {
            json c;
            c["d"] = cand.d.to_ll();
            json genera = json::array();
            for (const auto& genus : cand.genera) {
                json g = json::array();
                std::string line = "d = " + to_string(cand.d) + ":";
                for (const BQForm& f : genus) {
                    g.push_back(to_json(f));
                    line += " " + to_q_string(f);
                }
                genera.push_back(g);
                text += line + "\n";
            }
            c["genera"] = genera;
            arr.push_back(c);
        }
        text += std::to_string(found.size()) + " discriminant(s) found";
        emit(as_json, arr, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
