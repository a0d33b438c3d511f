#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latgenus/jfunc.hpp"
#include "latgenus/serialize.hpp"

namespace py = pybind11;
using namespace latgenus;

namespace {

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

std::tuple<long long, long long, long long> form_tuple(const BQForm& f) {
    return {f.a.to_ll(), f.b.to_ll(), f.c.to_ll()};
}

std::vector<std::vector<long long>> matrix_rows(const Unimodular& g) {
    return {{g.m00.to_ll(), g.m01.to_ll()}, {g.m10.to_ll(), g.m11.to_ll()}};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for even rank-2 lattices: reduction, class "
              "groups, genus theory, and conjugation certificates";

    py::class_<BQForm>(m, "BQForm")
        .def(py::init([](long long a, long long b, long long c) {
                 return BQForm(Int(a), Int(b), Int(c));
             }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_property_readonly("a", [](const BQForm& f) { return f.a.to_ll(); })
        .def_property_readonly("b", [](const BQForm& f) { return f.b.to_ll(); })
        .def_property_readonly("c", [](const BQForm& f) { return f.c.to_ll(); })
        .def("eval",
             [](const BQForm& f, long long x, long long y) {
                 return f.eval(Int(x), Int(y)).to_ll();
             })
        .def("__eq__", [](const BQForm& f, const BQForm& g) { return f == g; })
        .def("__hash__",
             [](const BQForm& f) {
                 return py::hash(py::make_tuple(f.a.to_ll(), f.b.to_ll(), f.c.to_ll()));
             })
        .def("__repr__", [](const BQForm& f) { return to_q_string(f); })
        .def("as_tuple", &form_tuple)
        .def("lattice_notation", &to_l_string);

    m.def("parse_form", &parse_form, py::arg("text"),
          "parse a Q[a,b,c] or L[2a,b,2c] literal");
    m.def("discriminant", [](const BQForm& f) { return discriminant(f).to_ll(); });
    m.def("content", [](const BQForm& f) { return content(f).to_ll(); });
    m.def("primitive_part", [](const BQForm& f) {
        auto [mm, f0] = primitive_part(f);
        return py::make_tuple(mm.to_ll(), f0);
    });
    m.def("scale", [](const BQForm& f, long long k) { return scale(f, Int(k)); });
    m.def("reduce", [](const BQForm& f) {
        Reduction r = reduce(f);
        return py::make_tuple(r.form, matrix_rows(r.g));
    });
    m.def("is_reduced", &is_reduced);
    m.def("act", [](const BQForm& f, const std::vector<std::vector<long long>>& g) {
        if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2)
            throw std::invalid_argument("matrix must be 2x2");
        return act(f, Unimodular(Int(g[0][0]), Int(g[0][1]), Int(g[1][0]), Int(g[1][1])));
    });
    m.def("properly_equivalent",
          [](const BQForm& f1, const BQForm& f2) -> py::object {
              auto w = properly_equivalent(f1, f2);
              if (!w)
                  return py::none();
              return py::cast(matrix_rows(*w));
          });
    m.def("equivalent", [](const BQForm& f1, const BQForm& f2) -> py::object {
        auto w = equivalent(f1, f2);
        if (!w)
            return py::none();
        return py::cast(matrix_rows(*w));
    });
    m.def(
        "reduced_forms",
        [](long long d, bool primitive_only) { return reduced_forms(Int(d), primitive_only); },
        py::arg("d"), py::arg("primitive_only") = true);
    m.def("represent_coprime",
          [](const BQForm& f, long long n, long long max_radius) {
              Representation r = represent_coprime(f, Int(n), max_radius);
              return py::make_tuple(r.x.to_ll(), r.y.to_ll(), r.value.to_ll());
          },
          py::arg("form"), py::arg("n"), py::arg("max_radius") = 1000);

    m.def("split_discriminant", [](long long d) {
        DiscriminantSplit s = split_discriminant(Int(d));
        return py::make_tuple(s.fundamental.to_ll(), s.conductor.to_ll());
    });
    m.def("principal_form",
          [](long long d) { return principal_class(Int(d)).rep(); });
    m.def("compose", [](const BQForm& f1, const BQForm& f2) {
        return compose(FormClass(f1), FormClass(f2)).rep();
    });
    m.def("inverse", [](const BQForm& f) { return inverse_class(FormClass(f)).rep(); });
    m.def("galois_act", [](const BQForm& mform, const BQForm& l) {
        return galois_act(FormClass(mform), FormClass(l)).rep();
    });
    m.def(
        "class_group",
        [](long long d, bool check_closure) {
            return json_to_py(to_json(class_group(Int(d), check_closure)));
        },
        py::arg("d"), py::arg("check_closure") = false,
        "dict with d, h, structure, classes");

    m.def("same_genus", [](const BQForm& f1, const BQForm& f2) {
        return same_genus(f1, f2).same;
    });
    m.def("genus_classes", [](const BQForm& f) { return genus_classes(f); });
    m.def("genus_size", [](const BQForm& f) {
        GenusSize s = genus_size(f);
        return py::make_tuple(s.sl2, s.gl2);
    });
    m.def("genus_report", [](const BQForm& f) { return json_to_py(genus_report_json(f)); });

    m.def("grid_from_form", [](const BQForm& f) { return json_to_py(to_json(Grid::from_form(f))); });
    m.def("norm_form", [](const BQForm& f) { return Grid::from_form(f).norm_form(); });
    m.def("conductor", [](const BQForm& f) {
        return Grid::from_form(f).multiplier_ring().conductor.to_ll();
    });

    m.def("j_invariant", [](const BQForm& f, int terms) {
        return j_invariant(Grid::from_form(f), terms);
    }, py::arg("form"), py::arg("terms") = 40);

    m.def("zariski_table", [] {
        py::list rows;
        for (const ZariskiRow& r : zariski_table()) {
            py::dict d;
            d["index"] = r.index;
            d["dynkin"] = r.dynkin;
            d["t1"] = r.t1;
            d["t2"] = r.t2;
            rows.append(d);
        }
        return rows;
    });
    m.def("zariski_table_csv", &zariski_table_csv);
    m.def("verify_row", [](int index) {
        const auto& table = zariski_table();
        if (index < 1 || index > (int)table.size())
            throw std::out_of_range("row index must be 1..34");
        return json_to_py(to_json(verify_row(table[index - 1])));
    });
    m.def("verify_table", [] {
        py::list out;
        for (const ZariskiRow& r : zariski_table())
            out.append(json_to_py(to_json(verify_row(r))));
        return out;
    });
    m.def("conjugation_certificate", [](const BQForm& t1, const BQForm& t2) {
        return json_to_py(to_json(conjugation_certificate(t1, t2)));
    });
    m.def(
        "find_candidate_pairs",
        [](long long d_min, long long d_max, long long max_range) {
            py::list out;
            for (const GenusCandidate& c : find_candidate_pairs(Int(d_min), Int(d_max), max_range)) {
                py::dict entry;
                entry["d"] = c.d.to_ll();
                entry["genera"] = c.genera;
                out.append(entry);
            }
            return out;
        },
        py::arg("d_min"), py::arg("d_max"), py::arg("max_range") = 1000000);

#ifdef LATGENUS_VERSION
    m.attr("__version__") = LATGENUS_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
