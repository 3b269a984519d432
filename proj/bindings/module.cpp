#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parehr/alcoved.hpp"
#include "parehr/errors.hpp"
#include "parehr/json_io.hpp"
#include "parehr/oracle.hpp"
#include "parehr/pipeline.hpp"

namespace py = pybind11;
using namespace parehr;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

py::list to_fractions(const UPoly& p) {
    py::list out;
    for (const auto& c : p) out.append(to_fraction(c));
    return out;
}

struct PyPolytope {
    HPolytope P;
    VarTable vars;
};

struct PyCount {
    ParametricCount pc;
    VarTable vars;
};

struct PyHStar {
    HStarData h;
};

MPoly parse_weight(const std::string& expr) {
    const MPoly w = MPoly::parse(expr, VarTable{});
    WeightPoly::from_poly(w);  // block validation
    return w;
}

std::map<VarId, Rational> b_assignment(const IntVec& b) {
    std::map<VarId, Rational> at;
    for (std::size_t i = 0; i < b.size(); ++i)
        at.emplace(VarId::b(static_cast<std::uint32_t>(i)), Rational(b[i]));
    return at;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact parametric weighted Ehrhart computations for smooth polytopes";

    py::register_exception<UnboundedError>(m, "UnboundedError");
    py::register_exception<DegenerateError>(m, "DegenerateError");
    py::register_exception<NotSmoothError>(m, "NotSmoothError");
    py::register_exception<OutsideTypeConeError>(m, "OutsideTypeConeError");
    py::register_exception<NotMetricError>(m, "NotMetricError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<PyPolytope>(m, "Polytope")
        .def(py::init([](const IntMat& A, const IntVec& b0,
                         const std::vector<std::string>& labels) {
                 PyPolytope p{HPolytope(A, b0), VarTable{}};
                 if (!labels.empty()) p.vars.set_b_labels(labels);
                 return p;
             }),
             py::arg("A"), py::arg("b0"), py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("n", [](const PyPolytope& p) { return p.P.n(); })
        .def_property_readonly("d", [](const PyPolytope& p) { return p.P.d(); })
        .def_property_readonly("A", [](const PyPolytope& p) { return p.P.A; })
        .def_property_readonly("b0", [](const PyPolytope& p) { return p.P.b0; })
        .def("is_smooth", [](const PyPolytope& p) { return is_smooth(p.P); })
        .def("vertices",
             [](const PyPolytope& p) {
                 py::list out;
                 for (const auto& vb : enumerate_vertices(p.P)) {
                     py::list v;
                     for (const auto& c : vb.vertex) v.append(to_fraction(c));
                     out.append(v);
                 }
                 return out;
             })
        .def("in_type_cone",
             [](const PyPolytope& p, const IntVec& b) {
                 return in_type_cone(p.P, enumerate_vertices(p.P), b);
             },
             py::arg("b"))
        .def("lattice_points",
             [](const PyPolytope& p, const IntVec& b) { return oracle::lattice_points(p.P, b); },
             py::arg("b"))
        .def("lattice_count",
             [](const PyPolytope& p, const IntVec& b) {
                 return oracle::lattice_points(p.P, b).size();
             },
             py::arg("b"));

    py::class_<PyHStar>(m, "HStar")
        .def_property_readonly("coeffs", [](const PyHStar& h) { return to_fractions(h.h.hstar); })
        .def_property_readonly("denom_exponent", [](const PyHStar& h) { return h.h.denom_exponent; })
        .def_property_readonly("signs",
                               [](const PyHStar& h) { return sign_pattern_str(sign_pattern(h.h)); })
        .def("roots", [](const PyHStar& h) { return hstar_roots(h.h); })
        .def("__str__", [](const PyHStar& h) { return up_str(h.h.hstar, "z"); });

    py::class_<PyCount>(m, "Count")
        .def_property_readonly("formula", [](const PyCount& c) { return c.pc.poly.str(c.vars); })
        .def_property_readonly("json",
                               [](const PyCount& c) { return mpoly_to_json(c.pc.poly, c.vars).dump(); })
        .def("__call__",
             [](const PyCount& c, const IntVec& b) {
                 if (!in_type_cone(c.pc.polytope, c.pc.bases, b))
                     throw OutsideTypeConeError("b outside the closed type cone");
                 return to_fraction(c.pc.poly.eval(b_assignment(b)));
             },
             py::arg("b"))
        .def("ehrhart",
             [](const PyCount& c, const IntVec& b) {
                 return to_fractions(weighted_ehrhart(c.pc, b).coeffs);
             },
             py::arg("b"))
        .def("hstar",
             [](const PyCount& c, const IntVec& b, unsigned long r) {
                 return PyHStar{hstar_dilated(weighted_ehrhart(c.pc, b), r)};
             },
             py::arg("b"), py::arg("r") = 1);

    m.def(
        "count",
        [](const PyPolytope& p, const std::string& weight) {
            return PyCount{parametric_weighted_count(p.P, WeightPoly::from_poly(parse_weight(weight))),
                           p.vars};
        },
        py::arg("polytope"), py::arg("weight") = "1",
        "parametric weighted lattice-point count as a polynomial in b");

    m.def(
        "alcoved",
        [](int d, const IntVec& b) {
            const AlcovedSpec spec(d, b);
            PyPolytope p{spec.polytope(), VarTable{}};
            p.vars.set_b_labels(spec.labels());
            return p;
        },
        py::arg("d"), py::arg("b"),
        "alcoved polytope x_i - x_j <= b_ij from entries in canonical pair order");

    m.def(
        "random_maximal_alcoved",
        [](int d, std::int64_t range, std::uint64_t seed) {
            const AlcovedSpec spec = random_alcoved(d, range, seed);
            PyPolytope p{spec.polytope(), VarTable{}};
            p.vars.set_b_labels(spec.labels());
            return p;
        },
        py::arg("d"), py::arg("range"), py::arg("seed"));

    m.def(
        "is_tight_metric",
        [](int d, const IntVec& b) { return is_tight_metric(AlcovedSpec(d, b)); },
        py::arg("d"), py::arg("b"));

    m.def(
        "is_maximal_alcoved",
        [](int d, const IntVec& b) { return is_maximal(AlcovedSpec(d, b)); },
        py::arg("d"), py::arg("b"));

    m.def(
        "refine_to_maximal",
        [](int d, const IntVec& b, std::uint64_t seed) {
            return refine_to_maximal(AlcovedSpec(d, b), seed).b;
        },
        py::arg("d"), py::arg("b"), py::arg("seed") = 1);

    m.def(
        "oracle_weighted_count",
        [](const PyPolytope& p, const IntVec& b, const std::string& weight) {
            return to_fraction(oracle::weighted_count(p.P, b, parse_weight(weight)));
        },
        py::arg("polytope"), py::arg("b"), py::arg("weight"),
        "brute-force weighted lattice-point sum (ground truth)");

    m.def(
        "oracle_ehrhart",
        [](const PyPolytope& p, const IntVec& b, const std::string& weight) {
            return to_fractions(
                oracle::ehrhart_by_interpolation(p.P, b, WeightPoly::from_poly(parse_weight(weight)))
                    .coeffs);
        },
        py::arg("polytope"), py::arg("b"), py::arg("weight"));

    m.def("eulerian", [](unsigned i) { return to_fractions(eulerian(i)); }, py::arg("i"));
}
