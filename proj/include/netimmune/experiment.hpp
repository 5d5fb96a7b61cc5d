#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netimmune/graph.hpp"
#include "netimmune/pareto.hpp"

namespace netimmune {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentConfig {
    std::string graph;   ///< edge-list path or generator spec (er:/ba:/barbell:)
    bool largest_component = false;
    std::string method;  ///< netshield | netshield_plus | eps_qp | eps_qp_batched |
                         ///< nsga2 | sms_emoa | hybrid_nsga2 | hybrid_sms
    int k = 1;           ///< greedy selection size
    int batch = 1;       ///< NetShield+ / batched-sweep batch size
    std::optional<std::int64_t> eps_max;  ///< default: sum of degrees
    std::int64_t eps_stride = 1;
    int population = 100;
    double pm = -1.0;    ///< per-bit mutation probability; < 0 selects 1/n
    double pc = 0.75;
    std::int64_t budget = 10000;
    int runs = 5;        ///< stochastic methods only
    std::uint64_t seed = 0;
    std::string out_dir;
    int workers = 1;
};

struct ExperimentResult {
    std::vector<std::string> files;   ///< file names written into out_dir
    std::vector<Front> run_fronts;    ///< one per run (one entry for exact methods)
    std::optional<AttainmentCurve> attainment;
    int nodes = 0;
    std::int64_t edges = 0;
    double lambda = 0.0;
};

/// `er:n:m:seed=s`, `ba:n:attach:seed=s`, or `barbell:c`.
bool is_generator_spec(const std::string& source);
Graph generate_from_spec(const std::string& spec);

/// Loads a file or evaluates a generator spec; optionally restricts to the
/// largest connected component.
Graph load_graph_source(const std::string& source, bool largest_component = false);

/// 0, stride, 2*stride, ... up to and including eps_max (the grid always
/// contains eps_max itself so the full-budget solution is reachable).
std::vector<std::int64_t> make_epsilon_grid(std::int64_t eps_max, std::int64_t stride);

/// Runs the configured method, writes per-run front CSV/JSON files, the
/// attainment curve for stochastic methods, and manifest.json into
/// config.out_dir (created if needed). Seeds for run r derive as seed + r.
/// Output files are byte-identical across reruns of the same config
/// (manifest timings excepted).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Merges front files into a combined non-dominated front with per-point
/// provenance, plus a hypervolume table against a shared reference point
/// derived from the union's objective ranges. Writes merged_front.csv/.json,
/// hv_table.csv, and report.json.
void compare_fronts(const std::vector<std::string>& front_files, const std::string& out_dir);

/// NETIMMUNE_WORKERS (positive integer), default 1.
int worker_count_from_env();

}  // namespace netimmune
