#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "awgraph/cli.hpp"
#include "awgraph/graph.hpp"
#include "awgraph/pipeline.hpp"
#include "awgraph/qracah.hpp"
#include "awgraph/report.hpp"
#include "awgraph/spectral.hpp"

namespace py = pybind11;
using namespace awgraph;

namespace {

Stage parse_stage(const std::string& s)
{
    if (s == "analyze") return Stage::Analyze;
    if (s == "modules") return Stage::Modules;
    if (s == "spectrum") return Stage::Spectrum;
    if (s == "qracah") return Stage::QRacah;
    throw Error(ErrorKind::InvalidArgument, "unknown stage: " + s);
}

// Exit code and one JSON document per attempt, exactly as the CLI prints them.
std::pair<int, std::vector<std::string>> reports(const Graph& g, std::optional<int> vertex, const std::string& stage,
                                                 double tol, std::uint64_t seed, const std::string& q_branch)
{
    if (!(tol > 0))
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (q_branch != "canonical" && q_branch != "all")
        throw Error(ErrorKind::InvalidArgument, "q_branch must be 'canonical' or 'all'");
    PipelineConfig config;
    config.tol = tol;
    config.seed = seed;
    config.stage = parse_stage(stage);
    config.q_branch = q_branch == "all" ? QBranch::All : QBranch::Canonical;
    std::vector<int> vertices;
    if (vertex)
        vertices.push_back(*vertex);
    const auto run = run_pipeline(g, vertices, config);
    std::vector<std::string> docs;
    for (const auto& r : build_reports(run, config.stage))
        docs.push_back(r.dump());
    return {run.exit_code, docs};
}

py::dict spectrum(const Graph& g, double tol)
{
    const auto drg = compute_distance_data(g);
    const auto spec = spectral_decomposition(drg, tol);
    std::vector<std::vector<int>> orderings;
    for (const auto& o : find_qpoly_orderings(krein_parameters(spec, tol * g.n)))
        orderings.push_back(o.full());
    py::dict d;
    d["eigenvalues"] = spec.eigenvalues;
    d["multiplicities"] = spec.multiplicities;
    d["orderings"] = orderings;
    return d;
}

py::dict intersection_array(const Graph& g)
{
    const auto drg = compute_distance_data(g);
    std::vector<int> a, b, c;
    for (int i = 0; i <= drg.diameter; ++i) {
        a.push_back(drg.intersection.a(i));
        b.push_back(drg.intersection.b(i));
        c.push_back(drg.intersection.c(i));
    }
    py::dict d;
    d["diameter"] = drg.diameter;
    d["a"] = a;
    d["b"] = b;
    d["c"] = c;
    return d;
}

std::tuple<int, std::string, std::string> cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Askey-Wilson relations for Q-polynomial distance-regular graphs";

    static py::exception<Error> error(m, "AwgraphError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error.ptr())(e.what());
            exc.attr("kind") = to_string(e.kind());
            exc.attr("exit_code") = exit_code(e.kind());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const IntMatrix& adjacency, const std::string& name) { return make_graph(adjacency, name); }),
             py::arg("adjacency"), py::arg("name") = "")
        .def_readonly("name", &Graph::name)
        .def_readonly("n", &Graph::n)
        .def_readonly("adjacency", &Graph::adjacency)
        .def("__repr__", [](const Graph& g) { return "<Graph " + g.name + " n=" + std::to_string(g.n) + ">"; });

    m.def("family", [](const std::string& name, int size) { return generate_family(parse_family(name), size); },
          py::arg("name"), py::arg("size"));
    m.def("load", [](const std::string& path, const std::string& format) {
        return load_graph_file(path, parse_graph_format(format));
    }, py::arg("path"), py::arg("format") = "edgelist");
    m.def("parse", [](const std::string& text, const std::string& format, const std::string& name) {
        return load_graph(text, parse_graph_format(format), name);
    }, py::arg("text"), py::arg("format") = "edgelist", py::arg("name") = "");

    m.def("intersection_array", &intersection_array, py::arg("graph"));
    m.def("spectrum", &spectrum, py::arg("graph"), py::arg("tol") = 1e-8);
    m.def("fit_base_q", [](const std::vector<double>& thetas, double tol) { return fit_base_q(thetas, tol); },
          py::arg("thetas"), py::arg("tol") = 1e-8);
    m.def("reports", &reports, py::arg("graph"), py::arg("vertex") = 0, py::arg("stage") = "analyze",
          py::arg("tol") = 1e-8, py::arg("seed") = 0, py::arg("q_branch") = "canonical",
          py::call_guard<py::gil_scoped_release>());
    m.def("run_cli", &cli, py::arg("args"), py::call_guard<py::gil_scoped_release>());
}
