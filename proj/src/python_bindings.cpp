#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccsym/det_oracle.hpp"
#include "ccsym/p1.hpp"
#include "ccsym/suites.hpp"
#include "ccsym/symbol.hpp"
#include "ccsym/textio.hpp"
#include "ccsym/witt.hpp"
#include "ccsym/witt_params.hpp"

namespace py = pybind11;
using namespace ccsym;

namespace {

WittVectorK witt_from_strings(const RingDescriptor& ring,
                              const std::vector<std::string>& coords) {
    std::vector<RingElement> c;
    c.reserve(coords.size());
    for (const auto& s : coords) c.push_back(parse_element(s, ring));
    return WittVectorK{std::move(c)};
}

py::dict report_dict(const ReciprocityReport& r, const RingDescriptor& ring) {
    py::list local;
    for (const auto& l : r.local)
        local.append(py::make_tuple(to_string(l.point), to_string(l.value)));
    py::dict d;
    d["local"] = local;
    d["product"] = to_string(r.product);
    d["law_holds"] = r.product == RingElement::one(ring);
    return d;
}

}  // namespace

PYBIND11_MODULE(_ccsym, m) {
    m.doc() = "exact Contou-Carrere symbols, Witt vectors and reciprocity laws";

    py::register_exception<Error>(m, "CcsymError");

    py::class_<RingDescriptor>(m, "RingDescriptor")
        .def_static("parse", &parse_ring, py::arg("text"))
        .def_static("prime_field", &RingDescriptor::prime_field, py::arg("p"),
                    py::arg("eps_order") = 1)
        .def_static("rationals", &RingDescriptor::rationals, py::arg("eps_order") = 1)
        .def_property_readonly("eps_order", &RingDescriptor::eps_order)
        .def_property_readonly("modulus", &RingDescriptor::modulus)
        .def_property_readonly("is_field", &RingDescriptor::is_field)
        .def("nilpotency_index", &RingDescriptor::nilpotency_index)
        .def("__eq__", [](const RingDescriptor& a, const RingDescriptor& b) { return a == b; })
        .def("__repr__",
             [](const RingDescriptor& r) { return "RingDescriptor('" + to_string(r) + "')"; })
        .def("__str__", [](const RingDescriptor& r) { return to_string(r); });

    py::class_<RingElement>(m, "RingElement")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("inv", &RingElement::inv)
        .def("pow", &RingElement::pow, py::arg("exponent"))
        .def("is_unit", &RingElement::is_unit)
        .def("in_maximal_ideal", &RingElement::in_maximal_ideal)
        .def("is_zero", &RingElement::is_zero)
        .def("__repr__",
             [](const RingElement& x) { return "element('" + to_string(x) + "')"; })
        .def("__str__", [](const RingElement& x) { return to_string(x); });

    py::class_<LaurentSeries>(m, "LaurentSeries")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("inv", &LaurentSeries::inv)
        .def("pow", &LaurentSeries::pow, py::arg("exponent"))
        .def_property_readonly("ord", &LaurentSeries::ord)
        .def_property_readonly("prec", &LaurentSeries::prec)
        .def("winding_number", &LaurentSeries::winding_number)
        .def("derivative", &LaurentSeries::derivative)
        .def("residue", &LaurentSeries::residue)
        .def("substitute", &LaurentSeries::substitute, py::arg("tau"))
        .def("restricted", &LaurentSeries::restricted, py::arg("prec"))
        .def("__repr__",
             [](const LaurentSeries& f) { return "series('" + to_string(f) + "')"; })
        .def("__str__", [](const LaurentSeries& f) { return to_string(f); });

    py::class_<RationalFunctionOverK>(m, "RationalFunction")
        .def("__str__", [](const RationalFunctionOverK& h) { return to_string(h); });

    m.def("ring", &parse_ring, py::arg("text"));
    m.def("element", &parse_element, py::arg("text"), py::arg("ring"));
    m.def("series", &parse_series, py::arg("text"), py::arg("ring"));
    m.def("ratfunc", &parse_ratfunc, py::arg("text"), py::arg("ring"));

    m.def("symbol", &contou_carrere, py::arg("f"), py::arg("g"),
          "Contou-Carrere symbol by the closed formula");
    m.def("symbol_oracle", &symbol_oracle, py::arg("f"), py::arg("g"),
          "the same pairing through commutator determinants");
    m.def("tame_symbol", &tame_symbol, py::arg("f"), py::arg("g"));
    m.def("residue_from_symbol", &residue_from_symbol, py::arg("f"), py::arg("g"));
    m.def("symbol_exp_log", &symbol_exp_log, py::arg("f"), py::arg("g"));

    m.def(
        "factor",
        [](const LaurentSeries& f) {
            WittParameters p = witt_factor(f);
            py::dict d;
            d["w"] = p.w;
            d["a0"] = to_string(p.a0);
            py::dict neg;
            for (const auto& [i, a] : p.neg)
                neg[py::str(std::to_string(i))] = to_string(a);
            d["neg"] = neg;
            py::list pos;
            for (const auto& a : p.pos) pos.append(to_string(a));
            d["pos"] = pos;
            d["pos_prec"] = p.pos_prec();
            return d;
        },
        py::arg("f"), "unique presentation (w, a0, negative and positive tails)");

    m.def(
        "witt_add",
        [](const RingDescriptor& ring, const std::vector<std::string>& x,
           const std::vector<std::string>& y) {
            return witt_vector_strings(
                witt_add(witt_from_strings(ring, x), witt_from_strings(ring, y)));
        },
        py::arg("ring"), py::arg("x"), py::arg("y"));
    m.def(
        "witt_mul",
        [](const RingDescriptor& ring, const std::vector<std::string>& x,
           const std::vector<std::string>& y) {
            return witt_vector_strings(
                witt_mul(witt_from_strings(ring, x), witt_from_strings(ring, y)));
        },
        py::arg("ring"), py::arg("x"), py::arg("y"));
    m.def(
        "witt_ghost",
        [](const RingDescriptor& ring, const std::vector<std::string>& x) {
            GhostVector<RingElement> g = ghost(witt_from_strings(ring, x));
            std::vector<std::string> out;
            for (const auto& v : g.coords) out.push_back(to_string(v));
            return out;
        },
        py::arg("ring"), py::arg("x"));
    m.def(
        "witt_unghost",
        [](const RingDescriptor& ring, const std::vector<std::string>& g) {
            return witt_vector_strings(unghost(
                ring, GhostVector<RingElement>{witt_from_strings(ring, g).coords}));
        },
        py::arg("ring"), py::arg("g"));

    m.def(
        "cc_reciprocity",
        [](const RingDescriptor& ring, const std::string& S, const std::string& f,
           const std::string& g) {
            return report_dict(cc_reciprocity_report(parse_ratfunc(f, ring),
                                                     parse_ratfunc(g, ring),
                                                     parse_points(S, ring)),
                               ring);
        },
        py::arg("ring"), py::arg("points"), py::arg("f"), py::arg("g"));
    m.def(
        "weil_reciprocity",
        [](const RingDescriptor& ring, const std::string& S, const std::string& f,
           const std::string& g) {
            return report_dict(weil_report(parse_ratfunc(f, ring),
                                           parse_ratfunc(g, ring),
                                           parse_points(S, ring)),
                               ring);
        },
        py::arg("ring"), py::arg("points"), py::arg("f"), py::arg("g"));
    m.def(
        "residue_theorem",
        [](const RingDescriptor& ring, const std::string& S, const std::string& f,
           const std::string& g) {
            ResidueReport r = residue_theorem_report(
                parse_ratfunc(f, ring), parse_ratfunc(g, ring), parse_points(S, ring));
            py::list local;
            for (const auto& l : r.local)
                local.append(py::make_tuple(to_string(l.point), to_string(l.direct),
                                            to_string(l.via_symbol)));
            py::dict d;
            d["local"] = local;
            d["sum"] = to_string(r.direct_sum);
            d["routes_agree"] = r.routes_agree;
            d["law_holds"] = r.routes_agree && r.direct_sum.is_zero();
            return d;
        },
        py::arg("ring"), py::arg("points"), py::arg("f"), py::arg("g"));
    m.def(
        "witt_reciprocity",
        [](const RingDescriptor& ring, const std::string& S, const std::string& f,
           const std::vector<std::string>& x) {
            std::vector<RationalFunctionOverK> xs;
            for (const auto& s : x) xs.push_back(parse_ratfunc(s, ring));
            WittReciprocityReport r = witt_reciprocity_report(
                parse_ratfunc(f, ring), xs, parse_points(S, ring));
            py::list local;
            for (const auto& l : r.local)
                local.append(
                    py::make_tuple(to_string(l.point), witt_vector_strings(l.value)));
            bool zero = true;
            for (const auto& v : r.sum.coords) zero = zero && v.is_zero();
            py::dict d;
            d["local"] = local;
            d["sum"] = witt_vector_strings(r.sum);
            d["law_holds"] = zero;
            return d;
        },
        py::arg("ring"), py::arg("points"), py::arg("f"), py::arg("x"));

    m.def(
        "crosscheck",
        [](long trials, std::uint64_t seed) {
            CrosscheckResult r = run_crosscheck(trials, seed);
            py::dict d;
            d["trials"] = r.trials_run;
            d["ok"] = r.ok;
            if (!r.ok) {
                d["ring"] = r.ring;
                d["f"] = r.f;
                d["g"] = r.g;
                d["formula"] = r.formula_value;
                d["oracle"] = r.oracle_value;
            }
            return d;
        },
        py::arg("trials") = 50, py::arg("seed") = kDefaultSeed);

    m.attr("default_seed") = kDefaultSeed;
}
