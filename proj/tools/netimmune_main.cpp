#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netimmune/experiment.hpp"
#include "netimmune/graph.hpp"

namespace {

int cmd_solve(const netimmune::ExperimentConfig& config) {
    const auto result = netimmune::run_experiment(config);
    std::cout << "graph: " << result.nodes << " nodes, " << result.edges
              << " edges, lambda = " << result.lambda << '\n';
    std::cout << "wrote " << result.files.size() << " files to " << config.out_dir << '\n';
    return 0;
}

int cmd_compare(const std::vector<std::string>& fronts, const std::string& out_dir) {
    netimmune::compare_fronts(fronts, out_dir);
    std::cout << "wrote merged_front.csv, merged_front.json, hv_table.csv, report.json to "
              << out_dir << '\n';
    return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_file) {
    const netimmune::Graph g = netimmune::generate_from_spec(spec);
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
    out << "# netimmune graph: " << spec << '\n';
    for (const auto& [i, j] : g.edges()) out << g.label(i) << ' ' << g.label(j) << '\n';
    std::cout << "wrote " << g.node_count() << " nodes / " << g.edge_count()
              << " edges to " << out_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto-front toolkit for network immunization"};
    app.require_subcommand(1);

    netimmune::ExperimentConfig config;
    auto* solve = app.add_subcommand("solve", "Run one method on one graph");
    solve->add_option("--graph", config.graph,
                      "Edge-list file or generator spec (er:n:m:seed=s, "
                      "ba:n:attach:seed=s, barbell:c)")
        ->required();
    solve->add_option("--method", config.method,
                      "netshield | netshield_plus | eps_qp | eps_qp_batched | nsga2 | "
                      "sms_emoa | hybrid_nsga2 | hybrid_sms")
        ->required();
    solve->add_flag("--largest-component", config.largest_component,
                    "Restrict to the largest connected component");
    solve->add_option("--k", config.k, "Greedy selection size");
    solve->add_option("--batch", config.batch, "Batch size (netshield_plus, eps_qp_batched)");
    std::int64_t eps_max = -1;
    solve->add_option("--eps-max", eps_max, "Epsilon grid upper bound (default: sum of degrees)");
    solve->add_option("--eps-stride", config.eps_stride, "Epsilon grid stride");
    solve->add_option("--pop", config.population, "GA population size");
    solve->add_option("--pm", config.pm, "Per-bit mutation probability (default 1/n)");
    solve->add_option("--pc", config.pc, "Crossover probability");
    solve->add_option("--budget", config.budget, "GA evaluation budget");
    solve->add_option("--runs", config.runs, "Repetitions for stochastic methods");
    solve->add_option("--seed", config.seed, "Master seed (run r uses seed + r)");
    solve->add_option("--out", config.out_dir, "Output directory")->required();

    std::vector<std::string> front_files;
    std::string compare_out;
    auto* compare = app.add_subcommand("compare", "Merge front files and rank by hypervolume");
    compare->add_option("fronts", front_files, "Front CSV/JSON files")->required();
    compare->add_option("--out", compare_out, "Output directory")->required();

    std::string gen_spec;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->add_option("--spec", gen_spec, "Generator spec")->required();
    gen->add_option("--out", gen_out, "Output edge-list file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (eps_max >= 0) config.eps_max = eps_max;
            config.workers = netimmune::worker_count_from_env();
            return cmd_solve(config);
        }
        if (compare->parsed()) return cmd_compare(front_files, compare_out);
        return cmd_gen(gen_spec, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "netimmune: error: " << e.what() << '\n';
        return 1;
    }
}
