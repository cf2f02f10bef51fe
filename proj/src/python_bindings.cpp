// Python module: thin wrappers returning the same JSON documents as the CLI,
// plus direct scalar entry points. The Python package decodes the JSON, so
// both front ends share one schema.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fano10/json_io.hpp"

namespace py = pybind11;
using namespace fano10;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

nlohmann::json hassett_to_json(const IntMat& gram, int h_index) {
    HassettReport rep = hassett_lemma_check(gram, h_index);
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : rep.conditions) {
        nlohmann::json jc;
        jc["c_norm"] = int_to_json(c.c_norm);
        jc["c_dot_h"] = int_to_json(c.c_dot_h);
        jc["violated"] = c.violated;
        if (c.witness)
            jc["witness"] = {int_to_json(c.witness->first), int_to_json(c.witness->second)};
        else
            jc["witness"] = nullptr;
        conds.push_back(std::move(jc));
    }
    return {{"all_satisfied", rep.all_satisfied}, {"conditions", std::move(conds)}};
}

}  // namespace

PYBIND11_MODULE(_fano10, m) {
    m.doc() = "Exact lattice arithmetic for degree-10 index-2 prime Fano fourfolds";

    // pybind11 tries translators most-recently-registered first, so the
    // specific types must come after the general ones.
    py::register_exception<Error>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<NotAdmissible>(m, "NotAdmissible", PyExc_ArithmeticError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("lattice_info_json", [](const std::string& gram) {
        return dump(lattice_report(Lattice(mat_from_string(gram))));
    });
    m.def("builtin_lattice_info_json", [](const std::string& name) -> std::string {
        const AmbientModel& am = ambient_model();
        Lattice l;
        if (name == "U") l = lattice_U();
        else if (name == "A1") l = lattice_A1();
        else if (name == "E8") l = lattice_E8();
        else if (name == "I22_2") l = lattice_odd_unimodular(22, 2);
        else if (name == "I20_2") l = lattice_odd_unimodular(20, 2);
        else if (name == "Lambda") l = Lattice(induced_lattice(am.lambda).gram(), "Lambda");
        else if (name == "Lambda2") l = Lattice(induced_lattice(am.lambda2).gram(), "Lambda2");
        else throw ParseError("unknown builtin lattice: " + name);
        return dump(lattice_report(l));
    });

    m.def("admissible_discriminant", [](long d) { return admissible_discriminant(Int(d)); });
    m.def("classify_json", [](long d) { return dump(classify_to_json(Int(d))); });
    m.def("assoc_json", [](long d) { return dump(assoc_to_json(Int(d))); });
    m.def("sweep_json", [](long d_max) { return dump(sweep_to_json(Int(d_max))); });
    m.def("examples_json", []() { return dump(examples_to_json()); });
    m.def("th81_json", [](long e_max) { return dump(th81_to_json(e_max)); });

    m.def("has_associated_k3", [](long d) { return has_associated_k3(Int(d)); });
    m.def("has_associated_cubic", [](long d) { return has_associated_cubic(Int(d)); });

    m.def("surface_self_intersection",
          [](long a, long b, long k_dot_sigma1, long k_squared, long chi) {
              SurfaceClass s{a, b, k_dot_sigma1, k_squared, chi};
              return surface_self_intersection(s).get_si();
          },
          py::arg("a"), py::arg("b"), py::arg("k_dot_sigma1"), py::arg("k_squared"),
          py::arg("chi"));
    m.def("surface_discriminant",
          [](long a, long b, long k_dot_sigma1, long k_squared, long chi) {
              SurfaceClass s{a, b, k_dot_sigma1, k_squared, chi};
              return surface_discriminant(s).get_si();
          },
          py::arg("a"), py::arg("b"), py::arg("k_dot_sigma1"), py::arg("k_squared"),
          py::arg("chi"));

    m.def("hassett_check_json", [](const std::string& gram, int h_index) {
        return dump(hassett_to_json(mat_from_string(gram), h_index));
    }, py::arg("gram"), py::arg("h_index") = 0);
}
