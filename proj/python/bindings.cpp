#include "thetainv/json_io.hpp"
#include "thetainv/repro.hpp"
#include "thetainv/surgery.hpp"
#include "thetainv/theta_spaces.hpp"
#include "thetainv/twisted_homology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace ti = thetainv;

namespace {

ti::Scalar scalar_from_parts(const std::string& r, const std::string& i, const std::string& s5,
                             const std::string& is5) {
    return ti::Scalar(ti::rational_from_string(r), ti::rational_from_string(i),
                      ti::rational_from_string(s5), ti::rational_from_string(is5));
}

ti::Rep build_rep(int variant, bool extended) {
    ti::Rep rho = ti::rho_235(variant);
    if (extended) return ti::rho1_extension(rho);
    return rho;
}

ti::SurgerySpec build_spec(int parity,
                           const std::vector<std::pair<std::string, long>>& edges,
                           int variant, bool extended) {
    if (edges.size() != 3) throw std::invalid_argument("exactly three edge decorations required");
    ti::SurgerySpec spec;
    spec.parity = parity;
    for (size_t k = 0; k < 3; ++k)
        spec.edges[k] = ti::EdgeDecoration{edges[k].first, edges[k].second};
    spec.rep = ti::RepSelector{variant, extended};
    return spec;
}

py::dict report_dict(const ti::ReproReport& r) {
    py::dict d;
    d["case"] = r.case_name;
    d["source"] = r.source;
    d["expected"] = r.expected;
    d["computed"] = r.computed;
    d["match"] = r.match;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for the two-loop finite-type invariant";

    py::register_exception<ti::division_by_zero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<ti::io::schema_error>(m, "SchemaError", PyExc_ValueError);

    py::class_<ti::Scalar>(m, "Scalar")
        .def(py::init<>())
        .def(py::init<long>())
        .def(py::init(&scalar_from_parts), py::arg("r"), py::arg("i") = "0",
             py::arg("s5") = "0", py::arg("is5") = "0")
        .def_static("fraction", &ti::Scalar::fraction)
        .def_static("sqrt5", &ti::Scalar::sqrt5)
        .def_static("unit_i", &ti::Scalar::unit_i)
        .def("is_zero", &ti::Scalar::is_zero)
        .def("is_rational", &ti::Scalar::is_rational)
        .def("is_real", &ti::Scalar::is_real)
        .def("conj", &ti::Scalar::conj)
        .def("galois_sqrt5", &ti::Scalar::galois_sqrt5)
        .def("inverse", &ti::Scalar::inverse)
        .def("coord", [](const ti::Scalar& s, int k) {
            if (k < 0 || k > 3) throw std::out_of_range("coordinate index must be 0..3");
            return ti::rational_to_string(s.coord(k));
        })
        .def("__add__", [](const ti::Scalar& a, const ti::Scalar& b) { return a + b; })
        .def("__sub__", [](const ti::Scalar& a, const ti::Scalar& b) { return a - b; })
        .def("__mul__", [](const ti::Scalar& a, const ti::Scalar& b) { return a * b; })
        .def("__truediv__", [](const ti::Scalar& a, const ti::Scalar& b) { return a / b; })
        .def("__neg__", [](const ti::Scalar& a) { return -a; })
        .def("__eq__", [](const ti::Scalar& a, const ti::Scalar& b) { return a == b; })
        .def("__ne__", [](const ti::Scalar& a, const ti::Scalar& b) { return a != b; })
        .def("__hash__", [](const ti::Scalar& a) { return py::hash(py::str(a.str())); })
        .def("__str__", &ti::Scalar::str)
        .def("__repr__", [](const ti::Scalar& a) { return "Scalar(" + a.str() + ")"; })
        .def("json", [](const ti::Scalar& a) { return ti::io::dumps(ti::io::to_json(a)); });

    py::class_<ti::TriLaurent>(m, "TriLaurent")
        .def(py::init<>())
        .def("is_zero", &ti::TriLaurent::is_zero)
        .def("coeff", [](const ti::TriLaurent& p, long a, long b, long c) {
            return p.coeff({a, b, c});
        })
        .def("terms", [](const ti::TriLaurent& p) {
            std::vector<std::pair<std::array<long, 3>, ti::Scalar>> out(p.terms().begin(),
                                                                        p.terms().end());
            return out;
        })
        .def("__add__", [](const ti::TriLaurent& a, const ti::TriLaurent& b) { return a + b; })
        .def("__sub__", [](const ti::TriLaurent& a, const ti::TriLaurent& b) { return a - b; })
        .def("__mul__", [](const ti::TriLaurent& a, const ti::Scalar& c) { return a * c; })
        .def("__neg__", [](const ti::TriLaurent& a) { return -a; })
        .def("__eq__", [](const ti::TriLaurent& a, const ti::TriLaurent& b) { return a == b; })
        .def("__ne__", [](const ti::TriLaurent& a, const ti::TriLaurent& b) { return a != b; })
        .def("permuted", [](const ti::TriLaurent& p, int i, int j, int k) {
            return p.permuted({i, j, k});
        })
        .def("inverted", &ti::TriLaurent::inverted)
        .def("substitute", [](const ti::TriLaurent& p, long k1, long k2, long k3) {
            return p.substitute3(k1, k2, k3).str("x");
        })
        .def("__str__", &ti::TriLaurent::str)
        .def("__repr__", [](const ti::TriLaurent& p) { return "TriLaurent(" + p.str() + ")"; })
        .def("json", [](const ti::TriLaurent& p) { return ti::io::dumps(ti::io::to_json(p)); });

    py::class_<ti::SThetaElt>(m, "SThetaElt")
        .def(py::init<int>())
        .def(py::init<int, ti::TriLaurent>())
        .def("parity", &ti::SThetaElt::parity)
        .def("image", &ti::SThetaElt::image)
        .def("is_zero", &ti::SThetaElt::is_zero)
        .def("well_formed", &ti::SThetaElt::well_formed)
        .def("__add__", [](const ti::SThetaElt& a, const ti::SThetaElt& b) { return a + b; })
        .def("__mul__", [](const ti::SThetaElt& a, const ti::Scalar& c) { return a * c; })
        .def("__eq__", [](const ti::SThetaElt& a, const ti::SThetaElt& b) { return a == b; })
        .def("__ne__", [](const ti::SThetaElt& a, const ti::SThetaElt& b) { return a != b; })
        .def("__str__", [](const ti::SThetaElt& a) { return a.image().str(); })
        .def("json", [](const ti::SThetaElt& a) { return ti::io::dumps(ti::io::to_json(a)); });

    m.def("parse_scalar", [](const std::string& text) {
        return ti::io::scalar_from_json(ti::io::parse_text(text));
    });
    m.def("parse_trilaurent", [](const std::string& text) {
        return ti::io::trilaurent_from_json(ti::io::parse_text(text));
    });

    m.def("fpoly", &ti::f_poly, py::arg("p"), "standard antisymmetric family member");
    m.def(
        "embed",
        [](int eps, long a, long b, long c) { return ti::embed_class(ti::w_scalar(eps, a, b, c)); },
        py::arg("eps"), py::arg("a"), py::arg("b"), py::arg("c"),
        "difference class of scalar edge exponents, embedded as a polynomial");
    m.def(
        "rank_over_Q",
        [](const std::vector<ti::TriLaurent>& family) { return ti::rank_over_Q(family); },
        "exact rational rank of a polynomial family");

    m.def(
        "theta_weight",
        [](const std::string& w1, const std::string& w2, const std::string& w3, int variant,
           bool extended) {
            ti::Rep rho = build_rep(variant, extended);
            return ti::theta_weight(ti::ad_of(ti::SU2Matrix(rho.eval(w1))),
                                    ti::ad_of(ti::SU2Matrix(rho.eval(w2))),
                                    ti::ad_of(ti::SU2Matrix(rho.eval(w3))));
        },
        py::arg("w1"), py::arg("w2"), py::arg("w3"), py::arg("variant") = 1,
        py::arg("extended") = false,
        "two-loop weight with edges decorated by conjugation images of group words");
    m.def(
        "circle_weight",
        [](const std::string& word, int variant, bool extended) {
            ti::Rep rho = build_rep(variant, extended);
            return ti::circle_weight(ti::SU2Matrix(rho.eval(word)));
        },
        py::arg("word"), py::arg("variant") = 1, py::arg("extended") = false);
    m.def(
        "eval_word",
        [](const std::string& word, int variant, bool extended) {
            ti::Rep rho = build_rep(variant, extended);
            return ti::io::dumps(ti::io::to_json(ti::SU2Matrix(rho.eval(word))));
        },
        py::arg("word"), py::arg("variant") = 1, py::arg("extended") = false,
        "JSON rendering of the image matrix of a group word");
    m.def(
        "image_size",
        [](int variant, bool extended) {
            return ti::enumerate_image(build_rep(variant, extended)).size();
        },
        py::arg("variant") = 1, py::arg("extended") = false);

    m.def(
        "cohomology",
        [](const std::string& coeffs, int variant) {
            ti::GroupPresentation pres = ti::presentation_235();
            ti::Rep base = ti::rho_235(variant);
            ti::Rep rho = [&]() -> ti::Rep {
                if (coeffs == "trivial") return ti::trivial_rep(pres);
                if (coeffs == "defining") return base;
                if (coeffs == "adjoint") return ti::compose_ad(base);
                if (coeffs == "sym2") return ti::compose_sym(base, 2);
                if (coeffs == "sym4") return ti::compose_sym(base, 4);
                throw std::invalid_argument("unknown coefficient system '" + coeffs + "'");
            }();
            return ti::cohomology_dims(pres, rho);
        },
        py::arg("coeffs") = "adjoint", py::arg("variant") = 1,
        "(h0, h1) of the presentation 2-complex with twisted coefficients");
    m.def(
        "invariants_dim",
        [](const std::string& coeffs, int variant) {
            ti::Rep base = ti::rho_235(variant);
            if (coeffs == "sym2") return ti::invariants_dim(ti::compose_sym(base, 2));
            if (coeffs == "sym4") return ti::invariants_dim(ti::compose_sym(base, 4));
            if (coeffs == "adjoint") return ti::invariants_dim(ti::compose_ad(base));
            throw std::invalid_argument("unknown coefficient system '" + coeffs + "'");
        },
        py::arg("coeffs") = "sym4", py::arg("variant") = 1);
    m.def(
        "decomposition_check", [](int variant) { return ti::decomposition_check(ti::rho_235(variant)); },
        py::arg("variant") = 1);

    m.def(
        "surgery_value",
        [](int parity, const std::vector<std::pair<std::string, long>>& edges, int variant,
           bool extended) {
            ti::SurgeryValue v = ti::z_theta_surgery(build_spec(parity, edges, variant, extended));
            return py::make_tuple(v.description, v.image);
        },
        py::arg("parity"), py::arg("edges"), py::arg("variant") = 1, py::arg("extended") = false,
        "(description, value) of a decorated two-loop graph under the surgery formula");
    m.def(
        "cyclic_lift",
        [](const std::string& g, const std::string& h, long p, long q, long r, int variant,
           bool extended) {
            return ti::cyclic_lift_value(g, h, p, q, r, ti::RepSelector{variant, extended});
        },
        py::arg("g"), py::arg("h"), py::arg("p"), py::arg("q"), py::arg("r"),
        py::arg("variant") = 1, py::arg("extended") = false,
        "value contributed by an r-fold cyclic cover block");
    m.def(
        "certificate",
        [](int parity, const std::vector<std::vector<std::pair<std::string, long>>>& families,
           int variant) {
            std::vector<ti::SurgerySpec> specs;
            for (const auto& edges : families)
                specs.push_back(build_spec(parity, edges, variant, false));
            ti::Certificate cert = ti::independence_certificate(specs);
            py::dict d;
            d["family_size"] = cert.inputs.size();
            d["rank_full"] = cert.rank_full;
            d["rank_coker"] = cert.rank_coker;
            d["conclusion"] = cert.conclusion;
            d["json"] = ti::io::dumps(ti::io::to_json(cert));
            return d;
        },
        py::arg("parity"), py::arg("families"), py::arg("variant") = 1,
        "exact rank certificate for a family of surgery values");

    m.def("repro_case_names", [] { return ti::repro_case_names(); });
    m.def(
        "run_repro", [](const std::string& name) { return report_dict(ti::run_repro(name)); },
        py::arg("case_name"));
    m.def("run_all_repro", [] {
        py::list out;
        for (const ti::ReproReport& r : ti::run_all_repro()) out.append(report_dict(r));
        return out;
    });
}
