#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperforge/errors.hpp"
#include "hyperforge/json_io.hpp"
#include "hyperforge/logic/ef.hpp"
#include "hyperforge/logic/sentences.hpp"
#include "hyperforge/projgeom.hpp"

namespace py = pybind11;
using namespace hyperforge;

namespace {

// Reports cross the boundary as JSON and come out as plain dicts.
py::object to_python(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

FiniteAbelianGroup group_of(const std::vector<std::uint64_t>& orders) {
    return orders.empty() ? FiniteAbelianGroup() : FiniteAbelianGroup(orders);
}

logic::FiniteStructure view(const FiniteHyperfield& h) { return logic::FiniteStructure::of(h); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite hyperfields: quotients, axioms, geometries, rank witnesses and first-order logic";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
    py::register_exception<MalformedError>(m, "MalformedError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<FiniteHyperfield>(m, "Hyperfield")
        .def_property_readonly("size", &FiniteHyperfield::size)
        .def_property_readonly("one", &FiniteHyperfield::one)
        .def_property_readonly("label", &FiniteHyperfield::label)
        .def("mul", &FiniteHyperfield::mul)
        .def("inv", &FiniteHyperfield::inv)
        .def("neg", &FiniteHyperfield::neg)
        .def("add", [](const FiniteHyperfield& h, int a, int b) { return h.add(a, b).members(); })
        .def("to_dict", [](const FiniteHyperfield& h) { return to_python(io::to_json(h)); })
        .def_static("from_json", [](const std::string& text) {
            try {
                return io::hyperfield_from_json(io::Json::parse(text));
            } catch (const io::Json::parse_error& e) {
                throw MalformedError(e.what());
            }
        })
        .def("__repr__", [](const FiniteHyperfield& h) { return "<Hyperfield " + h.label() + " of order " + std::to_string(h.size()) + ">"; });

    m.def("krasner_quotient", [](std::uint64_t q, std::uint64_t subgroup_order) {
        return krasner_quotient(make_finite_field(q, std::max<std::uint64_t>(q, kDefaultFieldBound)), subgroup_order);
    }, py::arg("q"), py::arg("subgroup_order"));
    m.def("extension_quotient", [](std::uint64_t q, int n) { return extension_quotient(q, n); }, py::arg("q"), py::arg("n"));
    m.def("from_group", [](const std::vector<std::uint64_t>& orders) { return from_group(group_of(orders)); },
          py::arg("cyclic_orders"), "H_G for G = C_{n1} x C_{n2} x ...; an empty list gives the trivial group");
    m.def("verify_axioms", [](const FiniteHyperfield& h) { return to_python(io::to_json(verify_axioms(h))); });
    m.def("is_cc", &is_cc);
    m.def("are_isomorphic", &are_isomorphic);
    m.def("is_krasner_within", [](const FiniteHyperfield& h, std::uint64_t q_max) -> py::object {
        const auto w = is_krasner_within(h, q_max);
        if (!w) return py::none();
        return py::make_tuple(w->q, w->subgroup_order);
    });
    m.def("enumerate_hyperfields", &enumerate_hyperfields, py::arg("order"));

    m.def("geometry", [](const FiniteHyperfield& h) {
        const auto g = geometry_of(h);
        auto out = to_python(io::to_json(g));
        out["dimension"] = dimension(g);
        out["incidence"] = to_python(io::to_json(check_incidence_axioms(g)));
        return out;
    });
    m.def("is_desarguesian", [](const FiniteHyperfield& h) { return is_desarguesian(geometry_of(h)); });

    m.def("witness_certificate", [](const std::string& case_name, int k, int oracle_bound, std::uint64_t budget) {
        if (k < 1 || oracle_bound < 1) throw PreconditionError("k and the oracle bound must be positive");
        const auto fam = build_witness_family(CaseTag::parse(case_name), static_cast<std::size_t>(k));
        const auto cert = independence_certificate(fam);
        return to_python(io::certificate_json(fam, cert, oracle_bound, brute_force_relation(fam, oracle_bound, budget)));
    }, py::arg("case") = "gauss", py::arg("k") = 10, py::arg("oracle_bound") = 2, py::arg("budget") = kDefaultStepBudget);
    m.def("family_certificate", [](const std::string& case_name, const std::vector<std::string>& elements, int oracle_bound) {
        const auto tag = CaseTag::parse(case_name);
        std::vector<RingElement> xs;
        for (const auto& e : elements) xs.push_back(parse_element(tag, e));
        const auto fam = make_family(tag, std::move(xs));
        return to_python(io::certificate_json(fam, independence_certificate(fam), oracle_bound, brute_force_relation(fam, oracle_bound)));
    }, py::arg("case"), py::arg("elements"), py::arg("oracle_bound") = 2);
    m.def("torsion_rank_report", [](std::uint64_t q) { return to_python(io::to_json(torsion_rank_report(q))); });

    m.def("parse_formula", [](const std::string& text) { return logic::to_string(logic::parse(text)); },
          "Parses a sentence and returns its canonical printed form");
    m.def("evaluate", [](const FiniteHyperfield& h, const std::string& sentence) {
        return logic::evaluate(view(h), logic::parse(sentence));
    });
    m.def("axiom_sentences", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& s : logic::hyperfield_axiom_sentences()) out.emplace_back(s.name, logic::to_string(s.sentence));
        return out;
    });
    m.def("ef_equivalent", [](const FiniteHyperfield& a, const FiniteHyperfield& b, int depth) {
        return logic::ef_equivalent(view(a), view(b), depth);
    });
    m.def("distinguishing_sentence", [](const FiniteHyperfield& a, const FiniteHyperfield& b, int depth) -> py::object {
        const auto phi = logic::distinguishing_sentence(view(a), view(b), depth);
        if (!phi) return py::none();
        return py::str(logic::to_string(*phi));
    });
    m.def("transfer_check", [](const std::vector<std::uint64_t>& g, const std::vector<std::uint64_t>& h, int depth) {
        return to_python(io::to_json(logic::group_to_hyperfield_transfer_check(group_of(g), group_of(h), depth)));
    });
}
