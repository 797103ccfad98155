#include "reesolve/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rees;

namespace {

std::vector<std::string> names_of(const py::object& vars) {
    return vars.cast<std::vector<std::string>>();
}

PointQ point_from(const std::vector<std::string>& coords) {
    std::vector<Rat> c;
    for (const std::string& s : coords) c.push_back(Rat(s));
    return PointQ(std::move(c));
}

}  // namespace

PYBIND11_MODULE(_reesolve, m) {
    m.doc() = "Exact Rees-algebra calculus and constructive resolution";

    py::class_<ReesAlgebra>(m, "ReesAlgebra")
        .def("__len__", [](const ReesAlgebra& g) { return g.gens().size(); })
        .def("dim", &ReesAlgebra::dim)
        .def("weights", [](const ReesAlgebra& g) {
            std::vector<int> w;
            for (const auto& x : g.gens()) w.push_back(x.n);
            return w;
        });

    py::class_<MarkedObject>(m, "MarkedObject");

    py::class_<ProblemFile>(m, "Problem")
        .def_static("parse", &parse_problem)
        .def_static("load", &load_problem)
        .def("dump", &dump_problem)
        .def("vars", [](const ProblemFile& pf) { return pf.vars; })
        .def("algebra", &ProblemFile::algebra)
        .def("marked", &ProblemFile::marked);

    m.def("parse_poly_str", [](const std::string& text, const std::vector<std::string>& vars) {
        return parse_poly(text, vars).str(vars);
    });

    m.def("ord_at", [](const ReesAlgebra& G, const std::vector<std::string>& coords) {
        auto v = ord_at(G, point_from(coords));
        return v ? rat_to_string(*v) : std::string("infinity");
    });
    m.def("contains_point", [](const ReesAlgebra& G, const std::vector<std::string>& coords) {
        return contains_point(G, point_from(coords));
    });
    m.def("sing_gens", [](const ReesAlgebra& G, const py::object& vars) {
        std::vector<std::string> out;
        for (const Poly& g : sing_ideal(G).gens()) out.push_back(g.str(names_of(vars)));
        return out;
    });
    m.def("diff_closure_gens", [](const ReesAlgebra& G, const py::object& vars) {
        std::vector<std::pair<std::string, int>> out;
        for (const WeightedGen& g : diff_closure(G).gens())
            out.push_back({g.f.str(names_of(vars)), g.n});
        return out;
    });
    m.def("veronese", [](const ReesAlgebra& G, int mm) { return veronese(G, mm); });
    m.def("natural_closure", [](const ReesAlgebra& G) { return natural_closure(G); });
    m.def("diff_closure", [](const ReesAlgebra& G) { return diff_closure(G); });
    m.def("odot", [](const ReesAlgebra& a, const ReesAlgebra& b) { return odot(a, b); });
    m.def("twist", [](const ReesAlgebra& G, const std::string& omega) {
        return twist(G, Rat(omega));
    });
    m.def("word_at", [](const MarkedObject& M, const std::vector<std::string>& coords) {
        return rat_to_string(word_at(M, point_from(coords)));
    });

    m.def(
        "resolve",
        [](const MarkedObject& M, int max_steps) {
            ResolveLimits lim;
            lim.max_steps = max_steps;
            return trace_to_json(resolve(M, lim));
        },
        py::arg("marked"), py::arg("max_steps") = 200);

    m.def("traces_equal_json", [](const std::string& a, const std::string& b) { return a == b; });
}
