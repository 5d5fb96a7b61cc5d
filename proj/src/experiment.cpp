#include "netimmune/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "netimmune/front_io.hpp"
#include "netimmune/moea.hpp"
#include "netimmune/qp.hpp"
#include "netimmune/shield.hpp"
#include "parallel.hpp"

namespace netimmune {

namespace fs = std::filesystem;
using nlohmann::json;

bool is_generator_spec(const std::string& source) {
    return source.rfind("er:", 0) == 0 || source.rfind("ba:", 0) == 0 ||
           source.rfind("barbell:", 0) == 0;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("generator spec: bad " + what + " '" + s + "'");
    }
}

std::uint64_t parse_seed_field(const std::string& s) {
    if (s.rfind("seed=", 0) != 0)
        throw std::invalid_argument("generator spec: expected seed=<int>, got '" + s + "'");
    return static_cast<std::uint64_t>(parse_int(s.substr(5), "seed"));
}

}  // namespace

Graph generate_from_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "er") {
        if (parts.size() != 4)
            throw std::invalid_argument("generator spec: expected er:n:m:seed=s");
        return generate_erdos_renyi(static_cast<int>(parse_int(parts[1], "n")),
                                    parse_int(parts[2], "m"), parse_seed_field(parts[3]));
    }
    if (parts[0] == "ba") {
        if (parts.size() != 4)
            throw std::invalid_argument("generator spec: expected ba:n:attach:seed=s");
        return generate_barabasi_albert(static_cast<int>(parse_int(parts[1], "n")),
                                        static_cast<int>(parse_int(parts[2], "attach")),
                                        parse_seed_field(parts[3]));
    }
    if (parts[0] == "barbell") {
        if (parts.size() != 2)
            throw std::invalid_argument("generator spec: expected barbell:c");
        return generate_barbell(static_cast<int>(parse_int(parts[1], "clique size")));
    }
    throw std::invalid_argument("unknown generator spec '" + spec + "'");
}

Graph load_graph_source(const std::string& source, bool largest) {
    Graph g = is_generator_spec(source) ? generate_from_spec(source)
                                        : load_edge_list_file(source);
    return largest ? largest_component(g) : g;
}

std::vector<std::int64_t> make_epsilon_grid(std::int64_t eps_max, std::int64_t stride) {
    if (eps_max < 0) throw std::invalid_argument("epsilon grid: eps_max must be >= 0");
    if (stride < 1) throw std::invalid_argument("epsilon grid: stride must be >= 1");
    std::vector<std::int64_t> grid;
    for (std::int64_t e = 0; e < eps_max; e += stride) grid.push_back(e);
    grid.push_back(eps_max);
    return grid;
}

int worker_count_from_env() {
    const char* env = std::getenv("NETIMMUNE_WORKERS");
    if (!env || !*env) return 1;
    try {
        const int w = std::stoi(env);
        if (w < 1) throw std::invalid_argument(env);
        return w;
    } catch (const std::exception&) {
        throw std::invalid_argument("NETIMMUNE_WORKERS must be a positive integer, got '" +
                                    std::string(env) + "'");
    }
}

namespace {

const std::set<std::string> kMethods = {"netshield",  "netshield_plus", "eps_qp",
                                        "eps_qp_batched", "nsga2",      "sms_emoa",
                                        "hybrid_nsga2",   "hybrid_sms"};

bool is_stochastic(const std::string& method) {
    return method == "nsga2" || method == "sms_emoa" || method == "hybrid_nsga2" ||
           method == "hybrid_sms";
}

ObjectivePoint scored_point(const Graph& g, const CostVector& costs, double base_lambda,
                            const EigenPair& base_ep, const NodeSubset& s,
                            const std::string& method) {
    ObjectivePoint p;
    p.delta_lambda =
        std::max(0.0, base_lambda - principal_eigenpair(remove_nodes(g, s)).lambda);
    p.cost = subset_cost(costs, s);
    p.method = method;
    p.nodes = subset_labels(g, s);
    p.selection = s;
    p.shield_value = shield_value(base_ep, g, s);
    return p;
}

struct RunRecord {
    std::uint64_t seed = 0;
    double milliseconds = 0.0;
    std::int64_t evaluation_events = 0;
    std::int64_t evaluator_invocations = 0;
    std::size_t front_size = 0;
};

void retag(Front& front, const std::string& method) {
    for (auto& p : front.points) p.method = method;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (!kMethods.count(config.method))
        throw std::invalid_argument("unknown method '" + config.method + "'");
    if (config.out_dir.empty()) throw std::invalid_argument("output directory required");
    if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (config.eps_stride < 1) throw std::invalid_argument("eps-stride must be >= 1");

    const Graph g = load_graph_source(config.graph, config.largest_component);
    const CostVector costs = degree_costs(g);
    const EigenPair base_ep = principal_eigenpair(g);

    fs::create_directories(config.out_dir);
    auto out_path = [&](const std::string& name) {
        return (fs::path(config.out_dir) / name).string();
    };

    ExperimentResult result;
    result.nodes = g.node_count();
    result.edges = g.edge_count();
    result.lambda = base_ep.lambda;

    const std::int64_t eps_max = config.eps_max.value_or(g.degree_sum());
    std::vector<std::int64_t> grid;
    const bool uses_grid = config.method == "eps_qp" || config.method == "eps_qp_batched" ||
                           config.method == "hybrid_nsga2" || config.method == "hybrid_sms";
    if (uses_grid) {
        grid = make_epsilon_grid(eps_max, config.eps_stride);
        if (grid.size() > 10000)
            std::cerr << "netimmune: warning: epsilon grid has " << grid.size()
                      << " budgets (> 10000 exact solves); consider --eps-stride\n";
    }

    std::vector<RunRecord> records;
    json manifest;

    if (!is_stochastic(config.method)) {
        const auto t0 = std::chrono::steady_clock::now();
        Front front;
        if (config.method == "netshield" || config.method == "netshield_plus") {
            if (config.k < 0 || config.k > g.node_count())
                throw std::invalid_argument("k must be in [0, n]");
            std::vector<NodeSubset> trace{NodeSubset(g.node_count(), 0)};
            if (config.method == "netshield") {
                const auto rounds = netshield_greedy_trace(g, config.k);
                trace.insert(trace.end(), rounds.begin(), rounds.end());
            } else if (config.k >= 1) {
                const auto batches = netshield_plus_trace(g, config.k, config.batch);
                trace.insert(trace.end(), batches.begin(), batches.end());
            }
            std::vector<ObjectivePoint> pts(trace.size());
            detail::parallel_for(trace.size(), config.workers, [&](std::size_t i) {
                pts[i] = scored_point(g, costs, base_ep.lambda, base_ep, trace[i],
                                      config.method);
            });
            front = nondominated_filter(pts);
        } else if (config.method == "eps_qp") {
            front = epsilon_sweep(g, costs, grid, config.workers);
        } else {
            front = epsilon_sweep_batched(g, costs, config.batch, grid, config.workers);
        }
        const auto t1 = std::chrono::steady_clock::now();
        RunRecord rec;
        rec.seed = config.seed;
        rec.milliseconds = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rec.front_size = front.size();
        records.push_back(rec);

        write_front_csv_file(out_path("front.csv"), front.points);
        write_front_json_file(out_path("front.json"), front.points);
        result.files = {"front.csv", "front.json"};
        result.run_fronts.push_back(std::move(front));
    } else {
        GaConfig ga;
        ga.population_size = config.population;
        ga.p_m = config.pm;
        ga.p_c = config.pc;
        ga.evaluation_budget = config.budget;
        const bool use_sms = config.method == "sms_emoa" || config.method == "hybrid_sms";
        ga.algorithm = use_sms ? GaAlgorithm::sms_emoa : GaAlgorithm::nsga2;

        std::vector<Front> init_fronts;
        if (config.method == "hybrid_nsga2" || config.method == "hybrid_sms") {
            init_fronts.push_back(epsilon_sweep(g, costs, grid, config.workers));
            init_fronts.push_back(
                epsilon_sweep_batched(g, costs, config.batch, grid, config.workers));
        }

        std::vector<GaRunResult> runs(config.runs);
        std::vector<double> run_ms(config.runs, 0.0);
        detail::parallel_for(config.runs, config.workers, [&](std::size_t r) {
            const auto t0 = std::chrono::steady_clock::now();
            GaConfig run_cfg = ga;
            run_cfg.seed = config.seed + r;
            if (!init_fronts.empty()) {
                const auto init = make_hybrid_init(init_fronts, run_cfg.population_size, g,
                                                   run_cfg.seed);
                runs[r] = use_sms ? sms_emoa_run(g, costs, run_cfg, &init)
                                  : nsga2_run(g, costs, run_cfg, &init);
            } else {
                runs[r] = use_sms ? sms_emoa_run(g, costs, run_cfg)
                                  : nsga2_run(g, costs, run_cfg);
            }
            retag(runs[r].front, config.method);
            const auto t1 = std::chrono::steady_clock::now();
            run_ms[r] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        });

        std::vector<std::vector<ObjectivePoint>> run_points;
        for (int r = 0; r < config.runs; ++r) {
            const std::string base = "front_run" + std::to_string(r);
            write_front_csv_file(out_path(base + ".csv"), runs[r].front.points);
            write_front_json_file(out_path(base + ".json"), runs[r].front.points);
            result.files.push_back(base + ".csv");
            result.files.push_back(base + ".json");
            run_points.push_back(runs[r].front.points);

            RunRecord rec;
            rec.seed = config.seed + r;
            rec.milliseconds = run_ms[r];
            rec.evaluation_events = runs[r].evaluation_events;
            rec.evaluator_invocations = runs[r].evaluator_invocations;
            rec.front_size = runs[r].front.size();
            records.push_back(rec);
            result.run_fronts.push_back(std::move(runs[r].front));
        }
        AttainmentCurve curve = first_attainment_curve(run_points, 1);
        write_front_csv_file(out_path("attainment.csv"), curve.points);
        write_front_json_file(out_path("attainment.json"), curve.points);
        result.files.push_back("attainment.csv");
        result.files.push_back("attainment.json");
        result.attainment = std::move(curve);

        manifest["ga"] = {{"population", ga.population_size},
                          {"p_m", ga.p_m < 0 ? 1.0 / std::max(1, g.node_count()) : ga.p_m},
                          {"p_c", ga.p_c},
                          {"budget", ga.evaluation_budget},
                          {"hybrid_init", !init_fronts.empty()}};
    }

    manifest["tool"] = "netimmune";
    manifest["version"] = kVersion;
    manifest["config"] = {{"graph", config.graph},
                          {"largest_component", config.largest_component},
                          {"method", config.method},
                          {"k", config.k},
                          {"batch", config.batch},
                          {"eps_stride", config.eps_stride},
                          {"population", config.population},
                          {"pm", config.pm},
                          {"pc", config.pc},
                          {"budget", config.budget},
                          {"runs", config.runs},
                          {"seed", config.seed},
                          {"workers", config.workers}};
    manifest["graph"] = {{"nodes", g.node_count()},
                         {"edges", g.edge_count()},
                         {"degree_sum", g.degree_sum()},
                         {"lambda", base_ep.lambda}};
    if (uses_grid)
        manifest["epsilon_grid"] = {{"max", eps_max},
                                    {"stride", config.eps_stride},
                                    {"size", grid.size()}};
    auto& run_arr = manifest["runs"] = json::array();
    for (std::size_t r = 0; r < records.size(); ++r) {
        json rec = {{"run", r},
                    {"seed", records[r].seed},
                    {"milliseconds", records[r].milliseconds},
                    {"front_size", records[r].front_size}};
        if (is_stochastic(config.method)) {
            rec["evaluation_events"] = records[r].evaluation_events;
            rec["evaluator_invocations"] = records[r].evaluator_invocations;
        }
        run_arr.push_back(std::move(rec));
    }
    manifest["files"] = result.files;
    {
        std::ofstream out(out_path("manifest.json"), std::ios::binary);
        if (!out) throw std::runtime_error("cannot write manifest.json");
        out << manifest.dump(2) << '\n';
    }
    result.files.push_back("manifest.json");
    return result;
}

void compare_fronts(const std::vector<std::string>& front_files, const std::string& out_dir) {
    if (front_files.empty())
        throw std::invalid_argument("compare_fronts: need at least one front file");
    std::vector<std::vector<ObjectivePoint>> fronts;
    for (const auto& f : front_files) fronts.push_back(read_front_file(f));

    std::vector<ObjectivePoint> all;
    for (const auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
    const Front merged = nondominated_filter(all);

    double d_min = 0.0, d_max = 0.0;
    std::int64_t c_max = 1;
    if (!all.empty()) {
        d_min = d_max = all.front().delta_lambda;
        c_max = all.front().cost;
        for (const auto& p : all) {
            d_min = std::min(d_min, p.delta_lambda);
            d_max = std::max(d_max, p.delta_lambda);
            c_max = std::max(c_max, p.cost);
        }
    }
    ObjectivePoint ref;
    ref.delta_lambda = d_min - 0.05 * std::max(d_max - d_min, 1e-6);
    ref.cost = c_max + 1;

    fs::create_directories(out_dir);
    auto out_path = [&](const std::string& name) {
        return (fs::path(out_dir) / name).string();
    };
    write_front_csv_file(out_path("merged_front.csv"), merged.points);
    write_front_json_file(out_path("merged_front.json"), merged.points);

    std::vector<double> hv(fronts.size());
    for (std::size_t i = 0; i < fronts.size(); ++i) hv[i] = hypervolume_2d(fronts[i], ref);
    const double hv_merged = hypervolume_2d(merged.points, ref);

    {
        std::ofstream out(out_path("hv_table.csv"), std::ios::binary);
        if (!out) throw std::runtime_error("cannot write hv_table.csv");
        out << "front,hypervolume\n";
        for (std::size_t i = 0; i < fronts.size(); ++i)
            out << fs::path(front_files[i]).filename().string() << ','
                << format_double(hv[i]) << '\n';
        out << "merged," << format_double(hv_merged) << '\n';
    }

    json report;
    report["tool"] = "netimmune";
    report["version"] = kVersion;
    report["inputs"] = front_files;
    report["reference_point"] = {{"delta_lambda", ref.delta_lambda}, {"cost", ref.cost}};
    auto& hv_arr = report["hypervolume"] = json::array();
    for (std::size_t i = 0; i < fronts.size(); ++i)
        hv_arr.push_back({{"front", front_files[i]}, {"value", hv[i]}});
    report["merged_hypervolume"] = hv_merged;
    auto& pairwise = report["pairwise_union_hypervolume"] = json::array();
    for (std::size_t i = 0; i < fronts.size(); ++i) {
        auto row = json::array();
        for (std::size_t j = 0; j < fronts.size(); ++j) {
            std::vector<ObjectivePoint> u = fronts[i];
            u.insert(u.end(), fronts[j].begin(), fronts[j].end());
            row.push_back(hypervolume_2d(u, ref));
        }
        pairwise.push_back(std::move(row));
    }
    report["merged_front_size"] = merged.size();
    {
        std::ofstream out(out_path("report.json"), std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report.json");
        out << report.dump(2) << '\n';
    }
}

}  // namespace netimmune
