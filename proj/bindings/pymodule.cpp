#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lhom/classify.hpp"
#include "lhom/sweep.hpp"

namespace py = pybind11;
using namespace lhom;

namespace {

py::object witness_to_py(const std::optional<PatternWitness>& w) {
    if (!w) return py::none();
    py::dict out;
    out["pattern"] = to_string(w->pattern);
    out["map"] = w->embedding;
    return out;
}

py::dict sweep_to_py(const SweepReport& rep) {
    py::dict out;
    out["graphs_per_size"] = rep.graphs_per_size;
    out["verdicts"] = rep.verdict_histogram;
    out["exhausted_searches"] = rep.exhausted_searches;
    py::list divergences;
    for (const auto& d : rep.divergences) {
        py::dict item;
        item["n"] = d.n;
        item["code"] = d.code;
        item["check"] = d.check;
        item["detail"] = d.detail;
        item["graph"] = d.graph_text;
        divergences.append(item);
    }
    out["divergences"] = divergences;
    return out;
}

}  // namespace

PYBIND11_MODULE(lhom, m) {
    m.doc() = "complexity classifier for list homomorphism templates";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<const std::vector<std::string>&,
                      const std::vector<std::pair<std::string, std::string>>&>(),
             py::arg("vertices"), py::arg("edges"))
        .def_static("parse", &Graph::parse, py::arg("text"))
        .def("serialize", &Graph::serialize)
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edge_list)
        .def("adjacent",
             py::overload_cast<const std::string&, const std::string&>(&Graph::adjacent,
                                                                       py::const_),
             py::arg("u"), py::arg("v"))
        .def("loops", &Graph::loops)
        .def("__len__", &Graph::size)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(" + std::to_string(g.size()) + " vertices)"; });

    m.def("in_class_l", &in_class_l, py::arg("graph"),
          "True iff no forbidden induced pattern occurs");

    m.def(
        "find_pattern", [](const Graph& h) { return witness_to_py(find_pattern(h)); },
        py::arg("graph"), "first forbidden pattern witness, or None");

    m.def(
        "decompose",
        [](const Graph& h) -> py::object {
            auto t = decompose(h);
            if (!t) return py::none();
            return py::str(format_tree(*t));
        },
        py::arg("graph"), "construction witness as indented text, or None");

    m.def(
        "find_majority",
        [](const Graph& h, long long budget) {
            auto r = find_conservative_majority(h, budget);
            py::object table = py::none();
            if (r.table) table = py::cast(r.table->rows());
            return py::make_tuple(to_string(r.status), table, r.steps);
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget,
        "(status, table rows or None, steps)");

    m.def(
        "find_chain",
        [](const Graph& h, long long budget) {
            auto r = find_permutability_chain(h, budget);
            py::object tables = py::none();
            if (r.chain)
                tables = py::make_tuple(r.chain->f1.rows(), r.chain->f2.rows(),
                                        r.chain->f3.rows());
            return py::make_tuple(to_string(r.status), tables, r.steps);
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget,
        "(status, three tables or None, steps)");

    m.def(
        "fo_definable",
        [](const Graph& h) { return dismantle_square(h).success; }, py::arg("graph"),
        "True iff the square dismantles to the diagonal");

    m.def(
        "solve",
        [](const Graph& h, const std::string& instance_text) -> py::object {
            auto inst = ListInstance::parse(instance_text);
            auto sol = solve(h, inst);
            if (!sol) return py::none();
            return py::cast(*sol);
        },
        py::arg("graph"), py::arg("instance"),
        "assignment dict for a list instance in text form, or None");

    m.def(
        "classify",
        [](const Graph& h, long long budget) {
            auto rep = classify(h, Budgets{budget});
            return verdict_name(rep.verdict);
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget);

    m.def(
        "classify_json",
        [](const Graph& h, long long budget) {
            return report_to_json(classify(h, Budgets{budget}));
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget,
        "full evidence report as a JSON string");

    m.def(
        "sweep",
        [](int max_n, const std::set<std::string>& checks, int parallel) {
            SweepOptions opt;
            opt.max_n = max_n;
            opt.checks = checks;
            opt.parallel = parallel;
            return sweep_to_py(run_sweep(opt));
        },
        py::arg("max_n"), py::arg("checks") = std::set<std::string>{}, py::arg("parallel") = 0);

    m.def("gadget_names", [] {
        std::vector<std::string> out;
        for (const auto& [name, gadget] : builtin_gadgets()) out.push_back(to_string(name));
        return out;
    });
}
