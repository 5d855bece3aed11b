// Thin Python layer. Graphs cross the boundary as Graph objects or graph6
// text; reports come back as JSON strings and are decoded in __init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kst/constructions.hpp"
#include "kst/error.hpp"
#include "kst/graph6.hpp"
#include "kst/minor.hpp"
#include "kst/report.hpp"
#include "kst/search.hpp"
#include "kst/spectral.hpp"
#include "kst/spectral_bounds.hpp"

namespace py = pybind11;
using namespace kst;

namespace {

template <class T>
std::string dump(const T& report)
{
    return nlohmann::json(report).dump();
}

SearchMode parse_mode(const std::string& m)
{
    if (m == "full") return SearchMode::full;
    if (m == "pruned") return SearchMode::pruned;
    if (m == "dominated") return SearchMode::dominated;
    throw ContractError("unknown search mode '" + m + "'");
}

}  // namespace

PYBIND11_MODULE(_kstminor, m)
{
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges",
                    [](int n, const std::vector<std::pair<int, int>>& e) { return Graph::from_edges(n, e); })
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", graph6='" + to_graph6(g) + "')";
        });

    m.def("complete", &complete);
    m.def("cycle", &cycle);
    m.def("path", &path);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("petersen", &petersen);
    m.def("petersen_complement", &petersen_complement);
    m.def("h_abc", &h_abc);
    m.def("f_st", [](int n, int s, int t) { return f_st(n, StParams(s, t)); });
    m.def("h_st_complement", [](int s, int t) { return h_st_complement(StParams(s, t)); });
    m.def("extremal_gstar", [](int n, int s, int t) { return extremal_gstar(n, StParams(s, t)); });
    m.def("extremal_case", [](int n, int s, int t) { return std::string(to_string(extremal_case(n, StParams(s, t)))); });

    m.def("rho_alpha", &rho_alpha, py::arg("g"), py::arg("alpha"));
    m.def("q_index", &q_index);
    m.def("is_kst_minor_free", &is_kst_minor_free, py::arg("g"), py::arg("s"), py::arg("t"));
    m.def("has_st_property", [](const Graph& g, int s, int t) { return has_st_property(g, StParams(s, t)); });
    m.def("minor_witness", [](const Graph& host, const Graph& pattern) -> std::optional<std::vector<std::vector<int>>> {
        const auto w = has_minor(host, pattern);
        if (!w) return std::nullopt;
        std::vector<std::vector<int>> sets;
        for (const VertexSet& b : w->branch_sets) sets.push_back(b.to_vector());
        return sets;
    });

    m.def("_fst_sandwich", [](long n, int s, int t, double a) { return dump(verify_fst_root_sandwich(n, s, t, a)); });
    m.def("_structure", [](const Graph& g, int s, int t) { return dump(verify_structure(g, s, t)); });
    m.def("_brute_force", [](int n, int s, int t, double a, const std::string& mode, int jobs) {
        py::gil_scoped_release release;
        return dump(brute_force_extremal(n, s, t, a, {parse_mode(mode), jobs}));
    });
}
