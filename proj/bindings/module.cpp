#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netimmune/experiment.hpp"
#include "netimmune/front_io.hpp"
#include "netimmune/graph.hpp"
#include "netimmune/moea.hpp"
#include "netimmune/pareto.hpp"
#include "netimmune/qp.hpp"
#include "netimmune/shield.hpp"

namespace py = pybind11;
using namespace netimmune;

namespace {

GaConfig make_ga_config(int population_size, double p_m, double p_c,
                        std::int64_t evaluation_budget, std::uint64_t seed,
                        const std::string& algorithm,
                        std::optional<std::pair<double, double>> reference_point,
                        bool memoize, bool track_population_hypervolume) {
    GaConfig c;
    c.population_size = population_size;
    c.p_m = p_m;
    c.p_c = p_c;
    c.evaluation_budget = evaluation_budget;
    c.seed = seed;
    if (algorithm == "nsga2") {
        c.algorithm = GaAlgorithm::nsga2;
    } else if (algorithm == "sms_emoa") {
        c.algorithm = GaAlgorithm::sms_emoa;
    } else {
        throw std::invalid_argument("algorithm must be 'nsga2' or 'sms_emoa'");
    }
    c.reference_point = reference_point;
    c.memoize = memoize;
    c.track_population_hypervolume = track_population_hypervolume;
    return c;
}

}  // namespace

PYBIND11_MODULE(_netimmune, m) {
    m.doc() = "Cost-vs-benefit Pareto fronts for node immunization in networks";
    m.attr("__version__") = kVersion;
    m.attr("DELTA_TOL") = kDeltaTol;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<std::vector<std::string>, const std::vector<std::pair<int, int>>&>(),
             py::arg("labels"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("labels", &Graph::labels)
        .def("label", &Graph::label, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("a"), py::arg("b"))
        .def("degree_sum", &Graph::degree_sum)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(" << g.node_count() << " nodes, " << g.edge_count() << " edges)";
            return os.str();
        });

    py::class_<EigenPair>(m, "EigenPair")
        .def_readonly("lambda_", &EigenPair::lambda)
        .def_readonly("u", &EigenPair::u);

    m.def("load_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return load_edge_list(in);
    }, py::arg("text"));
    m.def("load_edge_list_file", &load_edge_list_file, py::arg("path"));
    m.def("generate_erdos_renyi", &generate_erdos_renyi, py::arg("n"),
          py::arg("edge_target"), py::arg("seed"));
    m.def("generate_barabasi_albert", &generate_barabasi_albert, py::arg("n"),
          py::arg("attach"), py::arg("seed"));
    m.def("generate_barbell", &generate_barbell, py::arg("clique_size"));
    m.def("generate_from_spec", &generate_from_spec, py::arg("spec"));
    m.def("load_graph_source", &load_graph_source, py::arg("source"),
          py::arg("largest_component") = false);
    m.def("largest_component", &largest_component, py::arg("g"));

    m.def("principal_eigenpair", &principal_eigenpair, py::arg("g"));
    m.def("remove_nodes", &remove_nodes, py::arg("g"), py::arg("s"));
    m.def("eigen_drop", &eigen_drop, py::arg("g"), py::arg("s"));
    m.def("degree_costs", &degree_costs, py::arg("g"));
    m.def("subset_cost", &subset_cost, py::arg("costs"), py::arg("s"));
    m.def("subset_from_indices", &subset_from_indices, py::arg("n"), py::arg("indices"));
    m.def("subset_indices", &subset_indices, py::arg("s"));
    m.def("subset_labels", &subset_labels, py::arg("g"), py::arg("s"));

    m.def("shield_value", &shield_value, py::arg("eigenpair"), py::arg("g"), py::arg("s"));
    m.def("netshield_greedy", &netshield_greedy, py::arg("g"), py::arg("k"));
    m.def("netshield_greedy_trace", &netshield_greedy_trace, py::arg("g"), py::arg("k"));
    m.def("netshield_plus", &netshield_plus, py::arg("g"), py::arg("k"), py::arg("b"));
    m.def("netshield_plus_trace", &netshield_plus_trace, py::arg("g"), py::arg("k"),
          py::arg("b"));

    py::class_<QpInstance::PairTerm>(m, "PairTerm")
        .def_readonly("i", &QpInstance::PairTerm::i)
        .def_readonly("j", &QpInstance::PairTerm::j)
        .def_readonly("weight", &QpInstance::PairTerm::weight);

    py::class_<QpInstance>(m, "QpInstance")
        .def_readonly("linear", &QpInstance::linear)
        .def_readonly("pairwise", &QpInstance::pairwise)
        .def_readonly("costs", &QpInstance::costs)
        .def_readonly("budget", &QpInstance::budget)
        .def_readonly("cardinality_cap", &QpInstance::cardinality_cap);

    py::class_<QpSolution>(m, "QpSolution")
        .def_readonly("x", &QpSolution::x)
        .def_readonly("objective", &QpSolution::objective)
        .def_readonly("cost", &QpSolution::cost)
        .def_readonly("optimal", &QpSolution::optimal)
        .def_readonly("nodes_explored", &QpSolution::nodes_explored);

    m.def("qp_objective", &qp_objective, py::arg("instance"), py::arg("x"));
    m.def("build_qp", &build_qp, py::arg("g"), py::arg("eigenpair"), py::arg("costs"),
          py::arg("budget"), py::arg("cardinality_cap") = std::optional<int>{});
    m.def("solve_budget_qp", &solve_budget_qp, py::arg("instance"));
    m.def("epsilon_sweep", &epsilon_sweep, py::arg("g"), py::arg("costs"),
          py::arg("budgets"), py::arg("workers") = 1);
    m.def("epsilon_sweep_batched", &epsilon_sweep_batched, py::arg("g"), py::arg("costs"),
          py::arg("b"), py::arg("budgets"), py::arg("workers") = 1);

    py::class_<ObjectivePoint>(m, "ObjectivePoint")
        .def(py::init<>())
        .def_readwrite("delta_lambda", &ObjectivePoint::delta_lambda)
        .def_readwrite("cost", &ObjectivePoint::cost)
        .def_readwrite("method", &ObjectivePoint::method)
        .def_readwrite("nodes", &ObjectivePoint::nodes)
        .def_readwrite("selection", &ObjectivePoint::selection)
        .def_readwrite("shield_value", &ObjectivePoint::shield_value)
        .def("__repr__", [](const ObjectivePoint& p) {
            std::ostringstream os;
            os << "ObjectivePoint(delta_lambda=" << p.delta_lambda << ", cost=" << p.cost
               << ", method='" << p.method << "')";
            return os.str();
        });

    py::class_<Front>(m, "Front")
        .def_readonly("points", &Front::points)
        .def("__len__", &Front::size)
        .def("__iter__",
             [](const Front& f) { return py::make_iterator(f.points.begin(), f.points.end()); },
             py::keep_alive<0, 1>());

    py::class_<AttainmentCurve>(m, "AttainmentCurve")
        .def_readonly("points", &AttainmentCurve::points)
        .def_readonly("k", &AttainmentCurve::k);

    m.def("dominates",
          py::overload_cast<const ObjectivePoint&, const ObjectivePoint&>(&dominates),
          py::arg("a"), py::arg("b"));
    m.def("dominates_raw",
          py::overload_cast<double, std::int64_t, double, std::int64_t>(&dominates),
          py::arg("a_delta"), py::arg("a_cost"), py::arg("b_delta"), py::arg("b_cost"));
    m.def("nondominated_filter", &nondominated_filter, py::arg("points"));
    m.def("first_attainment_curve", &first_attainment_curve, py::arg("runs"),
          py::arg("k") = 1);
    m.def("hypervolume_2d",
          [](const std::vector<ObjectivePoint>& points, const ObjectivePoint& ref) {
              return hypervolume_2d(points, ref);
          },
          py::arg("points"), py::arg("ref"));
    m.def("hypervolume_2d_raw",
          [](const std::vector<std::pair<double, double>>& points, double ref_delta,
             double ref_cost) { return hypervolume_2d(points, ref_delta, ref_cost); },
          py::arg("points"), py::arg("ref_delta"), py::arg("ref_cost"));

    py::class_<Objectives>(m, "Objectives")
        .def_readonly("delta_lambda", &Objectives::delta_lambda)
        .def_readonly("cost", &Objectives::cost);

    py::class_<Individual>(m, "Individual")
        .def_readonly("x", &Individual::x)
        .def_readonly("obj", &Individual::obj);

    py::class_<GaConfig>(m, "GaConfig")
        .def(py::init(&make_ga_config), py::arg("population_size") = 100,
             py::arg("p_m") = -1.0, py::arg("p_c") = 0.75,
             py::arg("evaluation_budget") = 10000, py::arg("seed") = 0,
             py::arg("algorithm") = "nsga2",
             py::arg("reference_point") = std::optional<std::pair<double, double>>{},
             py::arg("memoize") = true, py::arg("track_population_hypervolume") = false)
        .def_readwrite("population_size", &GaConfig::population_size)
        .def_readwrite("p_m", &GaConfig::p_m)
        .def_readwrite("p_c", &GaConfig::p_c)
        .def_readwrite("evaluation_budget", &GaConfig::evaluation_budget)
        .def_readwrite("seed", &GaConfig::seed)
        .def_readwrite("reference_point", &GaConfig::reference_point)
        .def_readwrite("memoize", &GaConfig::memoize)
        .def_readwrite("track_population_hypervolume",
                       &GaConfig::track_population_hypervolume);

    py::class_<GaRunResult>(m, "GaRunResult")
        .def_readonly("front", &GaRunResult::front)
        .def_readonly("population", &GaRunResult::population)
        .def_readonly("archive", &GaRunResult::archive)
        .def_readonly("evaluation_events", &GaRunResult::evaluation_events)
        .def_readonly("evaluator_invocations", &GaRunResult::evaluator_invocations)
        .def_readonly("base_lambda", &GaRunResult::base_lambda)
        .def_readonly("reference_point", &GaRunResult::reference_point)
        .def_readonly("population_hypervolume", &GaRunResult::population_hypervolume);

    m.def("evaluate", &evaluate, py::arg("g"), py::arg("costs"), py::arg("x"));
    m.def("nsga2_run",
          [](const Graph& g, const CostVector& costs, const GaConfig& config,
             std::optional<std::vector<NodeSubset>> init) {
              return nsga2_run(g, costs, config, init ? &*init : nullptr);
          },
          py::arg("g"), py::arg("costs"), py::arg("config"),
          py::arg("init") = std::optional<std::vector<NodeSubset>>{});
    m.def("sms_emoa_run",
          [](const Graph& g, const CostVector& costs, const GaConfig& config,
             std::optional<std::vector<NodeSubset>> init) {
              return sms_emoa_run(g, costs, config, init ? &*init : nullptr);
          },
          py::arg("g"), py::arg("costs"), py::arg("config"),
          py::arg("init") = std::optional<std::vector<NodeSubset>>{});
    m.def("make_hybrid_init", &make_hybrid_init, py::arg("fronts"),
          py::arg("population_size"), py::arg("g"), py::arg("seed"));

    m.def("write_front_csv_file", &write_front_csv_file, py::arg("path"), py::arg("points"));
    m.def("read_front_csv_file", &read_front_csv_file, py::arg("path"));
    m.def("write_front_json_file", &write_front_json_file, py::arg("path"),
          py::arg("points"));
    m.def("read_front_json_file", &read_front_json_file, py::arg("path"));
    m.def("read_front_file", &read_front_file, py::arg("path"));

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("graph", &ExperimentConfig::graph)
        .def_readwrite("largest_component", &ExperimentConfig::largest_component)
        .def_readwrite("method", &ExperimentConfig::method)
        .def_readwrite("k", &ExperimentConfig::k)
        .def_readwrite("batch", &ExperimentConfig::batch)
        .def_readwrite("eps_max", &ExperimentConfig::eps_max)
        .def_readwrite("eps_stride", &ExperimentConfig::eps_stride)
        .def_readwrite("population", &ExperimentConfig::population)
        .def_readwrite("pm", &ExperimentConfig::pm)
        .def_readwrite("pc", &ExperimentConfig::pc)
        .def_readwrite("budget", &ExperimentConfig::budget)
        .def_readwrite("runs", &ExperimentConfig::runs)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("out_dir", &ExperimentConfig::out_dir)
        .def_readwrite("workers", &ExperimentConfig::workers);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("files", &ExperimentResult::files)
        .def_readonly("run_fronts", &ExperimentResult::run_fronts)
        .def_readonly("attainment", &ExperimentResult::attainment)
        .def_readonly("nodes", &ExperimentResult::nodes)
        .def_readonly("edges", &ExperimentResult::edges)
        .def_readonly("lambda_", &ExperimentResult::lambda);

    m.def("run_experiment", &run_experiment, py::arg("config"));
    m.def("compare_fronts", &compare_fronts, py::arg("front_files"), py::arg("out_dir"));
    m.def("worker_count_from_env", &worker_count_from_env);
    m.def("is_generator_spec", &is_generator_spec, py::arg("source"));
    m.def("make_epsilon_grid", &make_epsilon_grid, py::arg("eps_max"), py::arg("stride"));
}
